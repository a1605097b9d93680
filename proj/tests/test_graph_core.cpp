#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "zolab/densest.hpp"
#include "zolab/graph.hpp"
#include "zolab/graph_alg.hpp"
#include "zolab/subiso.hpp"

using namespace zolab;

namespace {

Graph bowtie() {
    // two triangles sharing vertex 0
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

// independent oracle: automorphisms by checking all n! permutations
std::uint64_t naive_aut(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// independent oracle: copies of pattern in host by brute force over ordered
// vertex tuples, then divided by the pattern's naive automorphism count
std::uint64_t naive_copies(const Graph& host, const Graph& pattern) {
    int k = pattern.vertex_count();
    std::vector<int> tuple;
    std::uint64_t homs = 0;
    std::vector<bool> used(host.vertex_count(), false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(tuple.size()) == k) {
            for (auto [u, v] : pattern.edges())
                if (!host.has_edge(tuple[u], tuple[v])) return;
            ++homs;
            return;
        }
        for (int h = 0; h < host.vertex_count(); ++h) {
            if (used[h]) continue;
            used[h] = true;
            tuple.push_back(h);
            rec();
            tuple.pop_back();
            used[h] = false;
        }
    };
    rec();
    return homs / naive_aut(pattern);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<Edge> es;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unif(rng) < p) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

} // namespace

TEST_CASE("density basics") {
    CHECK(density(Graph::complete(3)) == Rational(1));
    CHECK(density(Graph::path(3)) == Rational(2, 3));
    Graph two_tri = bowtie();
    CHECK(two_tri.vertex_count() == 5);
    CHECK(two_tri.edge_count() == 6);
    CHECK(density(two_tri) == Rational(6, 5));
    CHECK_THROWS_AS(density(Graph::empty_graph(0)), DomainError);
}

TEST_CASE("graph invariants are enforced") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
}

TEST_CASE("max_density_subgraph brute force with tie-breaking") {
    auto r = max_density_subgraph(Graph::complete(3), DensestMode::BruteForce);
    CHECK(r.value == Rational(1));
    CHECK(r.witness == VertexSet{0, 1, 2});

    // triangle 0,1,2 plus pendant vertex 3: whole graph also has rho = 1,
    // smallest witness wins
    Graph tp(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    auto r2 = max_density_subgraph(tp, DensestMode::BruteForce);
    CHECK(r2.value == Rational(1));
    CHECK(r2.witness == VertexSet{0, 1, 2});

    auto r3 = max_density_subgraph(bowtie(), DensestMode::BruteForce);
    CHECK(r3.value == Rational(6, 5));
    CHECK(r3.witness == VertexSet{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(max_density_subgraph(Graph::empty_graph(23), DensestMode::BruteForce, 20),
                    CapExceededError);
}

TEST_CASE("flow mode equals brute force on seeded random graphs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        double p = 0.05 + 0.9 * (trial % 10) / 10.0;
        Graph g = random_graph(rng, n, p);
        auto brute = max_density_subgraph(g, DensestMode::BruteForce);
        auto flow = max_density_subgraph(g, DensestMode::Flow);
        CAPTURE(g.to_graph6());
        REQUIRE(flow.value == brute.value);
        // both witnesses attain the value
        CHECK(density(g.induced(flow.witness)) == flow.value);
        CHECK(density(g.induced(brute.witness)) == brute.value);
    }
}

TEST_CASE("serial and parallel brute force agree") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 15, 0.3);
        auto a = max_density_subgraph(g, DensestMode::BruteForce, 20, Execution::Serial);
        auto b = max_density_subgraph(g, DensestMode::BruteForce, 20, Execution::Parallel);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("balance classes") {
    CHECK(balance_class(Graph::complete(3)) == BalanceClass::StrictlyBalanced);
    CHECK(balance_class(Graph::cycle(5)) == BalanceClass::StrictlyBalanced);

    // disjoint union of two triangles
    Graph two(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(balance_class(two) == BalanceClass::Balanced);

    // K4 plus pendant vertex: K4 has 3/2 > 7/5
    Graph k4p(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK(balance_class(k4p) == BalanceClass::Unbalanced);

    // density <= rho_max with equality iff not unbalanced
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.4);
        Rational rho = density(g);
        Rational rmax = max_density(g);
        CHECK(rho <= rmax);
        CHECK((rho == rmax) == (balance_class(g) != BalanceClass::Unbalanced));
    }
}

TEST_CASE("automorphism counts against the permutation oracle") {
    CHECK(automorphism_count(Graph::complete(3)) == 6);
    CHECK(automorphism_count(Graph::path(3)) == 2);
    CHECK(automorphism_count(Graph::cycle(5)) == 10);
    CHECK(naive_aut(Graph::cycle(5)) == 10);

    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.5);
        CHECK(automorphism_count(g) == naive_aut(g));
    }
    CHECK(automorphism_count(Graph::complete(8)) == 40320);
    CHECK_THROWS_AS(automorphism_count(Graph::cycle(13), 12), CapExceededError);
}

TEST_CASE("count_copies against the tuple oracle") {
    CHECK(count_copies(Graph::complete(3), Graph::complete(3)) == 1);
    CHECK(naive_copies(Graph::complete(4), Graph::complete(3)) == 4);
    CHECK(count_copies(Graph::complete(4), Graph::complete(3)) == 4);
    CHECK(naive_copies(Graph::cycle(5), Graph::path(3)) == 5);
    CHECK(count_copies(Graph::cycle(5), Graph::path(3)) == 5);

    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        Graph host = random_graph(rng, 7, 0.45);
        Graph pat = random_graph(rng, 2 + static_cast<int>(rng() % 3), 0.6);
        CHECK(count_copies(host, pat) == naive_copies(host, pat));
    }

    // connected patterns contain themselves exactly once
    CHECK(count_copies(Graph::cycle(6), Graph::cycle(6)) == 1);
    CHECK(count_copies(Graph::path(5), Graph::path(5)) == 1);
}

TEST_CASE("distance and set_distance") {
    Graph p3 = Graph::path(3);
    CHECK(distance(p3, 0, {2}) == 2);
    CHECK_THROWS_AS(distance(p3, 0, {0, 2}), DomainError);

    Graph disc(4, {{1, 2}});
    CHECK(!distance(disc, 0, {1, 2}).has_value());

    Graph c6 = Graph::cycle(6);
    CHECK(distance(c6, 0, {3}) == 3);

    Graph e2(2, {{0, 1}});
    CHECK(set_distance(e2, {0}, {1}) == 1);
    Graph p6 = Graph::path(6);
    CHECK(set_distance(p6, {0}, {5}) == 5);
    Graph c8 = Graph::cycle(8);
    CHECK(set_distance(c8, {0, 1}, {4, 5}) == 3);
    CHECK(set_distance(c8, {0, 1}, {3, 4}) == 2);
    CHECK_THROWS_AS(set_distance(c8, {0, 1}, {1, 2}), DomainError);
}

TEST_CASE("distance triangle inequality spot-check") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 10, 0.25);
        for (int x = 0; x < 3; ++x)
            for (int y = 5; y < 8; ++y) {
                if (x == y) continue;
                auto dxy = distance(g, x, {y});
                for (int z = 0; z < g.vertex_count(); ++z) {
                    if (z == x || z == y) continue;
                    auto dxz = distance(g, x, {z});
                    auto dzy = distance(g, z, {y});
                    if (dxz && dzy) {
                        REQUIRE(dxy.has_value());
                        CHECK(*dxy <= *dxz + *dzy);
                    }
                }
            }
    }
}

TEST_CASE("canonical form is isomorphism-invariant") {
    auto k3 = canonical_form(Graph::complete(3));
    Graph k3r(3, {{2, 1}, {0, 2}, {1, 0}});
    CHECK(canonical_form(k3r) == k3);
    CHECK(canonical_form(Graph::path(3)) != k3);
    CHECK(canonical_form(Graph(3, {{0, 1}, {1, 2}})) != canonical_form(Graph(3, {{0, 1}})));

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 0.4);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(g.relabeled(perm)));
    }

    // colored canonicalization: (0,1) and (1,0) on an edge are isomorphic
    // via the swap, but (0,1) and (0,0) are not
    Graph p2(2, {{0, 1}});
    std::vector<int> c1{0, 1}, c2{1, 0}, c3{0, 0};
    CHECK(canonical_form(p2, &c1) == canonical_form(p2, &c2));
    CHECK(canonical_form(p2, &c1) != canonical_form(p2, &c3));
}

TEST_CASE("edge list round trip") {
    Graph g = bowtie();
    CHECK(Graph::from_edge_list_text(g.to_edge_list_text()) == g);
    CHECK_THROWS_AS(Graph::from_edge_list_text("2\n0"), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list_text("2\n0 5"), ParseError);
}

TEST_CASE("graph6 encoding is bit-exact") {
    CHECK(Graph::complete(3).to_graph6() == "Bw");
    CHECK(Graph::from_graph6("Bw") == Graph::complete(3));
    CHECK(Graph::empty_graph(1).to_graph6() == "@");

    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 70); // crosses the 62 boundary
        Graph g = random_graph(rng, n, 0.2);
        CHECK(Graph::from_graph6(g.to_graph6()) == g);
    }
}

TEST_CASE("subgraph embedding basics") {
    CHECK(contains_copy(Graph::complete(4), Graph::cycle(4)));
    CHECK(!contains_copy(Graph::cycle(5), Graph::complete(3)));
    CHECK(contains_copy(Graph::cycle(5), Graph::path(4)));
    // disconnected pattern
    Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK(contains_copy(Graph::path(5), two_edges));
    CHECK(!contains_copy(Graph::path(3), two_edges));
}
