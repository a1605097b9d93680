#include "zolab/extensions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "zolab/graph_alg.hpp"
#include "zolab/subiso.hpp"

namespace zolab {

RootedPair::RootedPair(Graph graph, int roots) : g(std::move(graph)), root_count(roots) {
    if (root_count < 1 || root_count >= g.vertex_count())
        throw DomainError("rooted pair needs 1 <= roots < v(G)");
}

int RootedPair::extra_edges() const {
    int inside = 0;
    for (auto [u, v] : g.edges())
        if (u < root_count && v < root_count) ++inside;
    return g.edge_count() - inside;
}

Graph RootedPair::root_graph() const {
    VertexSet roots(root_count);
    for (int i = 0; i < root_count; ++i) roots[i] = i;
    return g.induced(roots);
}

RootedPair pendant_edge_pair() { return RootedPair(Graph(2, {{0, 1}}), 1); }

RootedPair pendant_path_pair(int len) {
    if (len < 1) throw DomainError("pendant path needs length >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < len; ++i) es.emplace_back(i, i + 1);
    return RootedPair(Graph(len + 1, std::move(es)), 1);
}

RootedPair common_neighbor_pair() { return RootedPair(Graph(3, {{0, 2}, {1, 2}}), 2); }

RootedPair connecting_path_pair(int inner) {
    if (inner < 1) throw DomainError("connecting path needs >= 1 inner vertex");
    std::vector<Edge> es;
    es.emplace_back(0, 2);
    for (int i = 0; i + 1 < inner; ++i) es.emplace_back(2 + i, 3 + i);
    es.emplace_back(inner + 1, 1);
    return RootedPair(Graph(inner + 2, std::move(es)), 2);
}

Rational f_alpha(const RootedPair& pair, const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) throw DomainError("f_alpha needs 0 < alpha <= 1");
    return Rational(pair.extra_vertices()) - alpha * pair.extra_edges();
}

Rational f_alpha_subset(const RootedPair& pair, const VertexSet& extra, const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) throw DomainError("f_alpha needs 0 < alpha <= 1");
    long long e = 0;
    for (auto [u, v] : pair.g.edges()) {
        bool into = (u >= pair.root_count && set_contains(extra, u)) ||
                    (v >= pair.root_count && set_contains(extra, v));
        bool outside = (u >= pair.root_count && !set_contains(extra, u)) ||
                       (v >= pair.root_count && !set_contains(extra, v));
        if (into && !outside) ++e;
    }
    return Rational(extra.size()) - alpha * e;
}

namespace {

// Edge counts of the induced subgraph on roots + extra-subset, as a function
// of the extra-subset bitmask.
struct SubsetEdges {
    const RootedPair& pair;
    std::vector<std::pair<int, int>> off_root; // (mask of extra endpoints, required mask)

    explicit SubsetEdges(const RootedPair& p) : pair(p) {
        for (auto [u, v] : p.g.edges()) {
            int need = 0;
            if (u >= p.root_count) need |= 1 << (u - p.root_count);
            if (v >= p.root_count) need |= 1 << (v - p.root_count);
            if (need) off_root.emplace_back(need, need);
        }
    }

    long long count(int mask) const {
        long long e = 0;
        for (auto [need, _] : off_root)
            if ((mask & need) == need) ++e;
        return e;
    }
};

} // namespace

PairClassification classify_pair(const RootedPair& pair, const Rational& alpha, int cap) {
    if (alpha <= 0 || alpha > 1) throw DomainError("classify_pair needs 0 < alpha <= 1");
    if (pair.g.vertex_count() > cap)
        throw CapExceededError("classify_pair: v(G) exceeds cap " + std::to_string(cap));
    int extras = pair.extra_vertices();
    SubsetEdges edges(pair);
    int full = (1 << extras) - 1;
    long long e_total = edges.count(full);

    // Monotonicity in the edge set: the binding subgraphs S are the induced
    // ones, so a sweep over extra-vertex subsets decides all three classes.
    bool safe = true, rigid = true, inner_positive = true;
    for (int mask = 0; mask <= full; ++mask) {
        long long e = edges.count(mask);
        int size = __builtin_popcount(static_cast<unsigned>(mask));
        if (mask != 0) {
            Rational f = Rational(size) - alpha * e;
            if (f <= 0) {
                safe = false;
                if (mask != full) inner_positive = false;
            }
        }
        if (mask != full) {
            Rational f_top = Rational(extras - size) - alpha * (e_total - e);
            if (f_top >= 0) rigid = false;
        }
    }

    bool roots_touched = true;
    for (int r = 0; r < pair.root_count && roots_touched; ++r) {
        bool touch = false;
        for (int u : pair.g.neighbors(r))
            if (u >= pair.root_count) touch = true;
        roots_touched = touch;
    }
    Rational f_gh = f_alpha(pair, alpha);
    bool neutral = roots_touched && inner_positive && f_gh == 0;

    return {safe, rigid, neutral};
}

namespace {

// Pattern with root-root edges stripped: a (G,H)-extension never constrains
// adjacency inside the root image.
Graph off_root_pattern(const RootedPair& pair) {
    std::vector<Edge> es;
    for (auto [u, v] : pair.g.edges())
        if (u >= pair.root_count || v >= pair.root_count) es.emplace_back(u, v);
    return Graph(pair.g.vertex_count(), std::move(es));
}

std::vector<int> checked_roots(const Graph& host, const RootedPair& pair,
                               const std::vector<int>& roots) {
    if (static_cast<int>(roots.size()) != pair.root_count)
        throw DomainError("extension roots: arity mismatch");
    std::set<int> seen;
    for (int r : roots) {
        if (r < 0 || r >= host.vertex_count()) throw DomainError("extension roots: out of range");
        if (!seen.insert(r).second) throw DomainError("extension roots: not distinct");
    }
    return roots;
}

} // namespace

std::vector<VertexSet> extension_witnesses(const Graph& host, const RootedPair& pair,
                                           const std::vector<int>& roots, bool exact) {
    auto root_images = checked_roots(host, pair, roots);
    Graph pattern = off_root_pattern(pair);
    EmbedSpec spec;
    spec.mode = exact ? EmbedMode::ExactOffRoots : EmbedMode::Subgraph;
    spec.root_count = pair.root_count;
    spec.root_images = root_images;
    std::set<VertexSet> sets;
    enumerate_embeddings(host, pattern, spec, [&](const std::vector<int>& image) {
        VertexSet w(image.begin() + pair.root_count, image.end());
        std::sort(w.begin(), w.end());
        sets.insert(std::move(w));
        return true;
    });
    return {sets.begin(), sets.end()};
}

std::uint64_t count_extensions(const Graph& host, const RootedPair& pair,
                               const std::vector<int>& roots, bool exact) {
    return extension_witnesses(host, pair, roots, exact).size();
}

bool is_maximal(const Graph& host, const VertexSet& gtilde, const VertexSet& htilde,
                const RootedPair& kt, bool graph_level) {
    if (!is_vertex_set(host, gtilde) || !is_vertex_set(host, htilde))
        throw DomainError("is_maximal: bad vertex sets");
    if (!is_subset(htilde, gtilde) || htilde.size() >= gtilde.size())
        throw DomainError("is_maximal: need htilde proper subset of gtilde");
    int t = kt.root_count;
    if (t > static_cast<int>(gtilde.size())) throw DomainError("is_maximal: |T| exceeds |gtilde|");

    Graph pattern = off_root_pattern(kt);
    // all size-t subsets of gtilde
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        VertexSet ttilde;
        for (int i : idx) ttilde.push_back(gtilde[i]);
        bool inside_h = is_subset(ttilde, htilde);
        if (graph_level || !inside_h) {
            VertexSet outside; // gtilde minus ttilde
            std::set_difference(gtilde.begin(), gtilde.end(), ttilde.begin(), ttilde.end(),
                                std::back_inserter(outside));
            std::vector<int> tuple(ttilde.begin(), ttilde.end());
            std::sort(tuple.begin(), tuple.end());
            do {
                EmbedSpec spec;
                spec.mode = EmbedMode::ExactOffRoots;
                spec.root_count = t;
                spec.root_images = tuple;
                spec.forbidden = gtilde;
                bool completion = false;
                enumerate_embeddings(host, pattern, spec, [&](const std::vector<int>& image) {
                    for (size_t i = t; i < image.size(); ++i)
                        for (int u : outside)
                            if (host.has_edge(image[i], u)) return true; // keep searching
                    completion = true;
                    return false;
                });
                if (completion) return false;
            } while (std::next_permutation(tuple.begin(), tuple.end()));
        }
        // next combination
        int i = t - 1;
        while (i >= 0 && idx[i] == static_cast<int>(gtilde.size()) - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

MaximalCountResult count_maximal_extensions(const Graph& host, const RootedPair& pair,
                                            const std::vector<int>& roots, const RootedPair& kt,
                                            const std::optional<Rational>& alpha) {
    MaximalCountResult result;
    if (alpha) result.rigidity_warning = !classify_pair(kt, *alpha).rigid;
    VertexSet root_set(roots.begin(), roots.end());
    std::sort(root_set.begin(), root_set.end());
    for (const auto& w : extension_witnesses(host, pair, roots, /*exact=*/true)) {
        VertexSet gtilde = set_union(root_set, w);
        if (is_maximal(host, gtilde, root_set, kt)) ++result.count;
    }
    return result;
}

bool exists_maximal_extension(const Graph& host, const RootedPair& pair,
                              const std::vector<int>& roots,
                              const std::vector<RootedPair>& kts) {
    VertexSet root_set(roots.begin(), roots.end());
    std::sort(root_set.begin(), root_set.end());
    for (const auto& w : extension_witnesses(host, pair, roots, /*exact=*/true)) {
        VertexSet gtilde = set_union(root_set, w);
        bool ok = true;
        for (const auto& kt : kts)
            if (!is_maximal(host, gtilde, root_set, kt)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

ExtensionScale expected_extension_scale(long long n, const Rational& alpha,
                                        const RootedPair& pair) {
    double f = rational_to_double(f_alpha(pair, alpha));
    ExtensionScale out;
    out.theta_scale = std::pow(static_cast<double>(n), f);
    double falling = 1.0;
    int k = pair.root_count, l = pair.g.vertex_count();
    for (int i = 0; i < l - k; ++i) falling *= static_cast<double>(n - k - i);
    double p_pow = std::pow(static_cast<double>(n), -rational_to_double(alpha) *
                                                       static_cast<double>(pair.extra_edges()));
    double aut = static_cast<double>(
        automorphism_count_fixing_prefix(pair.g, pair.root_count, pair.g.vertex_count()));
    out.first_moment = falling * p_pow / aut;
    return out;
}

std::vector<RootedPair> enumerate_pairs(int max_vertices, int root_count) {
    if (max_vertices > 6)
        throw CapExceededError("enumerate_pairs: catalog cap is 6 vertices");
    std::map<std::vector<std::uint8_t>, RootedPair> seen;
    for (int v = root_count + 1; v <= max_vertices; ++v) {
        std::vector<Edge> all;
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b) all.emplace_back(a, b);
        std::vector<int> colors(v, 1);
        for (int r = 0; r < root_count; ++r) colors[r] = 0;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << all.size()); ++mask) {
            std::vector<Edge> es;
            for (size_t i = 0; i < all.size(); ++i)
                if (mask & (std::uint32_t{1} << i)) es.push_back(all[i]);
            Graph g(v, std::move(es));
            auto key = canonical_form(g, &colors, v);
            seen.emplace(std::move(key), RootedPair(g, root_count));
        }
    }
    std::vector<std::pair<std::tuple<int, int, std::vector<std::uint8_t>>, RootedPair>> ordered;
    for (auto& [key, pair] : seen)
        ordered.push_back({{pair.g.vertex_count(), pair.g.edge_count(), key}, pair});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RootedPair> out;
    for (auto& [_, pair] : ordered) out.push_back(std::move(pair));
    return out;
}

std::vector<RootedPair> enumerate_pairs_with_class(int max_vertices, int root_count,
                                                   const Rational& alpha, PairClass wanted) {
    std::vector<RootedPair> out;
    for (const auto& pair : enumerate_pairs(max_vertices, root_count))
        if (classify_pair(pair, alpha).primary() == wanted) out.push_back(pair);
    return out;
}

} // namespace zolab
