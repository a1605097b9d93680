#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "zolab/extensions.hpp"
#include "zolab/graph_alg.hpp"

using namespace zolab;

namespace {

// Independent oracle for safe/rigid/neutral straight from the definitions:
// S ranges over (vertex subset containing the roots) x (edge subsets of the
// available edges containing E(H)).
struct NaiveClass {
    bool safe = true, rigid = true, neutral = false;
};

NaiveClass naive_classify(const RootedPair& pair, const Rational& alpha) {
    const Graph& g = pair.g;
    int k = pair.root_count, n = g.vertex_count();
    std::vector<Edge> off_root;
    for (auto [u, v] : g.edges())
        if (u >= k || v >= k) off_root.push_back({u, v});
    long long e_gh = static_cast<long long>(off_root.size());

    NaiveClass out;
    bool inner_ok = true;
    for (int umask = 0; umask < (1 << (n - k)); ++umask) {
        auto in_u = [&](int v) { return v < k || (umask >> (v - k)) & 1; };
        std::vector<int> avail;
        for (size_t i = 0; i < off_root.size(); ++i)
            if (in_u(off_root[i].first) && in_u(off_root[i].second))
                avail.push_back(static_cast<int>(i));
        int vcount = __builtin_popcount(static_cast<unsigned>(umask));
        for (int emask = 0; emask < (1 << avail.size()); ++emask) {
            int ecount = __builtin_popcount(static_cast<unsigned>(emask));
            bool is_h = (vcount == 0 && ecount == 0);
            bool is_g = (vcount == n - k && ecount == static_cast<int>(off_root.size()));
            Rational f_sh = Rational(vcount) - alpha * ecount;
            Rational f_gs = Rational(n - k - vcount) - alpha * (e_gh - ecount);
            if (!is_h && f_sh <= 0) out.safe = false;
            if (!is_g && f_gs >= 0) out.rigid = false;
            if (!is_h && !is_g && f_sh <= 0) inner_ok = false;
        }
    }
    bool roots_touched = true;
    for (int r = 0; r < k; ++r) {
        bool t = false;
        for (int u : g.neighbors(r))
            if (u >= k) t = true;
        roots_touched = roots_touched && t;
    }
    out.neutral = roots_touched && inner_ok &&
                  (Rational(n - k) - alpha * e_gh) == 0;
    return out;
}

// Independent oracle for extension counts: every W-subset, every numbering.
std::uint64_t naive_count_extensions(const Graph& host, const RootedPair& pair,
                                     const std::vector<int>& roots, bool exact) {
    int k = pair.root_count, l = pair.g.vertex_count();
    std::vector<int> rest;
    for (int v = 0; v < host.vertex_count(); ++v)
        if (std::find(roots.begin(), roots.end(), v) == roots.end()) rest.push_back(v);
    int need = l - k;
    if (need > static_cast<int>(rest.size())) return 0;
    std::uint64_t count = 0;
    std::vector<int> idx(need);
    std::iota(idx.begin(), idx.end(), 0);
    auto check_subset = [&](const std::vector<int>& w) {
        std::vector<int> perm = w;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> image(roots);
            image.insert(image.end(), perm.begin(), perm.end());
            bool ok = true;
            for (int a = 0; a < l && ok; ++a)
                for (int b = a + 1; b < l && ok; ++b) {
                    if (a < k && b < k) continue;
                    bool pe = pair.g.has_edge(a, b);
                    bool he = host.has_edge(image[a], image[b]);
                    if (exact ? (pe != he) : (pe && !he)) ok = false;
                }
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    while (true) {
        std::vector<int> w;
        for (int i : idx) w.push_back(rest[i]);
        if (check_subset(w)) ++count;
        int i = need - 1;
        while (i >= 0 && idx[i] == static_cast<int>(rest.size()) - need + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
    return count;
}

Graph seeded_gnp(std::uint64_t seed, int n, double p) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unif(rng) < p) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

} // namespace

TEST_CASE("f_alpha examples") {
    CHECK(f_alpha(pendant_edge_pair(), Rational(1, 2)) == Rational(1, 2));
    CHECK(f_alpha(pendant_path_pair(2), Rational(1, 2)) == Rational(1));
    CHECK(f_alpha(common_neighbor_pair(), Rational(8, 9)) == Rational(-7, 9));
    CHECK_THROWS_AS(f_alpha(pendant_edge_pair(), Rational(2)), DomainError);
}

TEST_CASE("f_alpha is affine in alpha") {
    std::vector<RootedPair> pairs{pendant_edge_pair(), pendant_path_pair(3),
                                  common_neighbor_pair(), connecting_path_pair(2)};
    std::vector<std::pair<Rational, Rational>> grid{
        {Rational(1, 4), Rational(3, 4)}, {Rational(1, 3), Rational(1)}, {Rational(1, 5), Rational(2, 5)}};
    for (const auto& p : pairs)
        for (const auto& [a, b] : grid)
            CHECK(f_alpha(p, (a + b) / 2) == (f_alpha(p, a) + f_alpha(p, b)) / 2);
}

TEST_CASE("classification examples") {
    CHECK(classify_pair(pendant_path_pair(2), Rational(1, 2)).primary() == PairClass::Safe);
    CHECK(classify_pair(common_neighbor_pair(), Rational(8, 9)).primary() == PairClass::Rigid);
    CHECK(classify_pair(pendant_edge_pair(), Rational(1)).primary() == PairClass::Neutral);
}

TEST_CASE("classification matches the subgraph-definition oracle") {
    std::vector<Rational> grid{Rational(1, 4), Rational(1, 3), Rational(1, 2),
                               Rational(2, 3), Rational(3, 4), Rational(1)};
    for (int roots = 1; roots <= 2; ++roots) {
        for (const auto& pair : enumerate_pairs(4, roots)) {
            for (const auto& alpha : grid) {
                auto fast = classify_pair(pair, alpha);
                auto slow = naive_classify(pair, alpha);
                CAPTURE(pair.g.to_graph6());
                CAPTURE(rational_to_string(alpha));
                CHECK(fast.safe == slow.safe);
                CHECK(fast.rigid == slow.rigid);
                CHECK(fast.neutral == slow.neutral);
            }
        }
    }
}

TEST_CASE("safe is monotone downward in alpha over the catalog") {
    std::vector<Rational> grid{Rational(1, 6), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                               Rational(3, 5), Rational(2, 3), Rational(4, 5), Rational(1)};
    for (int roots = 1; roots <= 2; ++roots) {
        for (const auto& pair : enumerate_pairs(5, roots)) {
            bool was_unsafe = false; // scanning alpha upward: once unsafe, stays unsafe
            for (const auto& alpha : grid) {
                bool safe = classify_pair(pair, alpha).safe;
                if (was_unsafe) CHECK(!safe);
                if (!safe) was_unsafe = true;
            }
        }
    }
}

TEST_CASE("count_extensions examples") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(count_extensions(star, pendant_edge_pair(), {0}, false) == 3);
    CHECK(count_extensions(Graph::complete(3), pendant_edge_pair(), {0}, false) == 2);
    CHECK(count_extensions(Graph::complete(3), pendant_path_pair(2), {0}, true) == 0);
    CHECK(count_extensions(Graph::complete(3), pendant_path_pair(2), {0}, false) == 1);
    CHECK_THROWS_AS(count_extensions(star, common_neighbor_pair(), {1, 1}, false), DomainError);
}

TEST_CASE("count_extensions equals the naive enumerator on seeded hosts") {
    std::vector<RootedPair> pairs{pendant_edge_pair(), pendant_path_pair(2),
                                  common_neighbor_pair()};
    for (int trial = 0; trial < 50; ++trial) {
        Graph host = seeded_gnp(1000 + trial, 30, 0.1);
        const auto& pair = pairs[trial % pairs.size()];
        std::vector<int> roots;
        for (int r = 0; r < pair.root_count; ++r) roots.push_back((trial * 7 + r * 11) % 30);
        if (pair.root_count == 2 && roots[0] == roots[1]) roots[1] = (roots[1] + 1) % 30;
        for (bool exact : {false, true}) {
            CAPTURE(trial);
            CHECK(count_extensions(host, pair, roots, exact) ==
                  naive_count_extensions(host, pair, roots, exact));
        }
    }
}

TEST_CASE("exact counts never exceed plain counts") {
    for (int trial = 0; trial < 20; ++trial) {
        Graph host = seeded_gnp(99 + trial, 14, 0.3);
        for (const auto& pair :
             {pendant_edge_pair(), pendant_path_pair(2), common_neighbor_pair()}) {
            std::vector<int> roots;
            for (int r = 0; r < pair.root_count; ++r) roots.push_back(r);
            CHECK(count_extensions(host, pair, roots, true) <=
                  count_extensions(host, pair, roots, false));
        }
    }
}

TEST_CASE("is_maximal examples") {
    Graph p3 = Graph::path(3); // a=0, b=1, c=2
    CHECK(is_maximal(p3, {0, 1}, {0}, common_neighbor_pair()));
    CHECK(!is_maximal(Graph::complete(3), {0, 1}, {0}, common_neighbor_pair()));
    Graph e2(2, {{0, 1}});
    CHECK(is_maximal(e2, {0, 1}, {0}, common_neighbor_pair()));
    CHECK_THROWS_AS(is_maximal(p3, {0}, {0}, common_neighbor_pair()), DomainError);
}

TEST_CASE("count_maximal_extensions examples") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto r = count_maximal_extensions(star, pendant_edge_pair(), {0}, common_neighbor_pair());
    CHECK(r.count == 3);
    auto r2 =
        count_maximal_extensions(Graph::complete(3), pendant_edge_pair(), {0}, common_neighbor_pair());
    CHECK(r2.count == 0);
    // no vertices beyond the roots: nothing to extend into
    Graph lonely(1, {});
    CHECK(count_maximal_extensions(lonely, pendant_edge_pair(), {0}, common_neighbor_pair())
              .count == 0);
}

TEST_CASE("maximal counts bounded by exact counts; rigidity warning") {
    for (int trial = 0; trial < 15; ++trial) {
        Graph host = seeded_gnp(31 + trial, 12, 0.25);
        auto exact = count_extensions(host, pendant_edge_pair(), {0}, true);
        auto maximal =
            count_maximal_extensions(host, pendant_edge_pair(), {0}, common_neighbor_pair(),
                                     Rational(9, 10));
        CHECK(maximal.count <= exact);
        CHECK(!maximal.rigidity_warning); // common-neighbor pair is 9/10-rigid
    }
    auto warn = count_maximal_extensions(Graph::path(3), pendant_edge_pair(), {0},
                                         common_neighbor_pair(), Rational(1, 3));
    CHECK(warn.rigidity_warning); // f = 1 - 2/3 > 0 at alpha = 1/3: not rigid
}

TEST_CASE("expected extension scale") {
    auto s1 = expected_extension_scale(100, Rational(1, 2), pendant_edge_pair());
    CHECK(s1.theta_scale == doctest::Approx(10.0));
    auto s2 = expected_extension_scale(100, Rational(2, 5), pendant_path_pair(2));
    CHECK(s2.theta_scale == doctest::Approx(251.18864).epsilon(1e-5));
    auto s3 = expected_extension_scale(1000, Rational(1, 2), common_neighbor_pair());
    CHECK(s3.theta_scale == doctest::Approx(1.0)); // f = 0
    // first moment of the pendant edge: (N-1) * N^{-1/2}
    CHECK(s1.first_moment == doctest::Approx(99.0 * std::pow(100.0, -0.5)));
}

TEST_CASE("pair catalog is deduplicated and deterministic") {
    auto pairs = enumerate_pairs(3, 1);
    // v=2: edge / non-edge; v=3 with 1 root: 8 colored graphs up to iso
    for (const auto& p : pairs) CHECK(p.root_count == 1);
    auto again = enumerate_pairs(3, 1);
    REQUIRE(pairs.size() == again.size());
    for (size_t i = 0; i < pairs.size(); ++i) CHECK(pairs[i].g == again[i].g);
    // no two entries are pair-isomorphic
    std::set<std::vector<std::uint8_t>> keys;
    for (const auto& p : pairs) {
        std::vector<int> colors(p.g.vertex_count(), 1);
        colors[0] = 0;
        CHECK(keys.insert(canonical_form(p.g, &colors)).second);
    }
}
