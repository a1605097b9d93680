#include "zolab/graph_alg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace zolab {

Rational density(const Graph& g) {
    if (g.vertex_count() == 0) throw DomainError("density of empty graph");
    return Rational(g.edge_count(), g.vertex_count());
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& from) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue;
    for (int v : from) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v))
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

std::optional<int> distance(const Graph& q, int x, const VertexSet& w) {
    if (x < 0 || x >= q.vertex_count()) throw DomainError("distance: vertex out of range");
    if (set_contains(w, x)) throw DomainError("distance: x belongs to the target set");
    auto dist = bfs_distances(q, {x});
    std::optional<int> best;
    for (int v : w)
        if (dist[v] != -1 && (!best || dist[v] < *best)) best = dist[v];
    return best;
}

std::optional<int> set_distance(const Graph& q, const VertexSet& w1, const VertexSet& w2) {
    if (!sets_disjoint(w1, w2)) throw DomainError("set_distance: sets overlap");
    auto dist = bfs_distances(q, w1);
    std::optional<int> best;
    for (int v : w2)
        if (dist[v] != -1 && (!best || dist[v] < *best)) best = dist[v];
    return best;
}

bool connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, {0});
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

namespace {

// Ordered partition refinement (1-WL). Cells keep an order determined only
// by isomorphism-invariant data, so the refined partition sequence is
// identical for isomorphic (colored) graphs.
struct Partition {
    std::vector<std::vector<int>> cells;

    static Partition initial(int n, const std::vector<int>* colors) {
        Partition p;
        if (!colors) {
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            p.cells.push_back(std::move(all));
        } else {
            std::map<int, std::vector<int>> by_color;
            for (int v = 0; v < n; ++v) by_color[(*colors)[v]].push_back(v);
            for (auto& [c, vs] : by_color) p.cells.push_back(std::move(vs));
        }
        return p;
    }

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() > 1) return false;
        return true;
    }
};

void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell_of(g.vertex_count());
        for (size_t ci = 0; ci < p.cells.size(); ++ci)
            for (int v : p.cells[ci]) cell_of[v] = static_cast<int>(ci);
        std::vector<std::vector<int>> next;
        for (const auto& cell : p.cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // split by the vector of neighbor counts per current cell
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> key(p.cells.size(), 0);
                for (int u : g.neighbors(v)) key[cell_of[u]]++;
                split[key].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [key, vs] : split) next.push_back(std::move(vs));
        }
        p.cells = std::move(next);
    }
}

// Adjacency + color string of g under labeling (vertex v -> position lab[v]).
std::vector<std::uint8_t> string_under(const Graph& g, const std::vector<int>& lab,
                                       const std::vector<int>* colors) {
    int n = g.vertex_count();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[lab[v]] = v;
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n));
    if (colors) {
        for (int pos = 0; pos < n; ++pos) {
            int c = (*colors)[inv[pos]];
            out.push_back(static_cast<std::uint8_t>((c >> 8) & 0xff));
            out.push_back(static_cast<std::uint8_t>(c & 0xff));
        }
    }
    std::uint8_t cur = 0;
    int bit = 7;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(inv[i], inv[j])) cur |= static_cast<std::uint8_t>(1 << bit);
            if (--bit < 0) {
                out.push_back(cur);
                cur = 0;
                bit = 7;
            }
        }
    if (bit != 7) out.push_back(cur);
    return out;
}

struct CanonSearch {
    const Graph& g;
    const std::vector<int>* colors;
    std::vector<std::uint8_t> best;
    std::vector<int> best_lab;
    bool have_best = false;

    void leaf(const Partition& p) {
        std::vector<int> lab(g.vertex_count());
        for (size_t pos = 0; pos < p.cells.size(); ++pos) lab[p.cells[pos][0]] = static_cast<int>(pos);
        auto s = string_under(g, lab, colors);
        if (!have_best || s < best) {
            best = std::move(s);
            best_lab = std::move(lab);
            have_best = true;
        }
    }

    void descend(Partition p) {
        refine(g, p);
        if (p.discrete()) {
            leaf(p);
            return;
        }
        size_t target = 0;
        while (p.cells[target].size() == 1) ++target;
        for (int v : p.cells[target]) {
            Partition child;
            child.cells.reserve(p.cells.size() + 1);
            for (size_t i = 0; i < p.cells.size(); ++i) {
                if (i == target) {
                    child.cells.push_back({v});
                    std::vector<int> rest;
                    for (int u : p.cells[i])
                        if (u != v) rest.push_back(u);
                    child.cells.push_back(std::move(rest));
                } else {
                    child.cells.push_back(p.cells[i]);
                }
            }
            descend(std::move(child));
        }
    }
};

std::vector<int> identity_labeling(int n) {
    std::vector<int> lab(n);
    std::iota(lab.begin(), lab.end(), 0);
    return lab;
}

// Empty and complete graphs defeat refinement; any labeling is canonical.
bool labeling_free(const Graph& g, const std::vector<int>* colors) {
    if (colors) return false;
    long long m = g.edge_count();
    long long n = g.vertex_count();
    return m == 0 || m == n * (n - 1) / 2;
}

void run_canon(const Graph& g, const std::vector<int>* colors, int cap, CanonSearch& search) {
    if (g.vertex_count() > cap)
        throw CapExceededError("canonical_form: " + std::to_string(g.vertex_count()) +
                               " vertices exceed cap " + std::to_string(cap));
    if (labeling_free(g, colors)) {
        auto lab = identity_labeling(g.vertex_count());
        search.best = string_under(g, lab, colors);
        search.best_lab = lab;
        search.have_best = true;
        return;
    }
    search.descend(Partition::initial(g.vertex_count(), colors));
}

} // namespace

std::vector<std::uint8_t> canonical_form(const Graph& g, const std::vector<int>* colors, int cap) {
    CanonSearch search{g, colors};
    run_canon(g, colors, cap, search);
    return search.best;
}

std::vector<int> canonical_labeling(const Graph& g, const std::vector<int>* colors, int cap) {
    CanonSearch search{g, colors};
    run_canon(g, colors, cap, search);
    return search.best_lab;
}

std::string canonical_hex(const Graph& g, const std::vector<int>* colors, int cap) {
    auto bytes = canonical_form(g, colors, cap);
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

namespace {

std::uint64_t count_maps(const Graph& g, int next, std::vector<int>& image,
                         std::vector<bool>& used, const std::vector<int>& wl_class) {
    int n = g.vertex_count();
    if (next == n) return 1;
    std::uint64_t total = 0;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || wl_class[cand] != wl_class[next]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (g.has_edge(prev, next) != g.has_edge(image[prev], cand)) ok = false;
        if (!ok) continue;
        image[next] = cand;
        used[cand] = true;
        total += count_maps(g, next + 1, image, used, wl_class);
        used[cand] = false;
    }
    return total;
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t aut_count_impl(const Graph& g, int fixed_prefix, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw CapExceededError("automorphism_count: " + std::to_string(n) +
                               " vertices exceed cap " + std::to_string(cap));
    if (n == 0) return 1;
    if (fixed_prefix == 0 && labeling_free(g, nullptr)) return factorial_u64(n);
    Partition p = Partition::initial(n, nullptr);
    refine(g, p);
    std::vector<int> wl_class(n);
    for (size_t ci = 0; ci < p.cells.size(); ++ci)
        for (int v : p.cells[ci]) wl_class[v] = static_cast<int>(ci);
    std::vector<int> image(n);
    std::vector<bool> used(n, false);
    for (int v = 0; v < fixed_prefix; ++v) {
        image[v] = v;
        used[v] = true;
    }
    return count_maps(g, fixed_prefix, image, used, wl_class);
}

} // namespace

std::uint64_t automorphism_count(const Graph& g, int cap) { return aut_count_impl(g, 0, cap); }

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 6) throw CapExceededError("nonisomorphic_graphs supports 1..6 vertices");
    std::vector<Edge> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    std::map<std::vector<std::uint8_t>, Graph> seen;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << all.size()); ++mask) {
        std::vector<Edge> es;
        for (size_t i = 0; i < all.size(); ++i)
            if (mask & (std::uint32_t{1} << i)) es.push_back(all[i]);
        Graph g(n, std::move(es));
        seen.emplace(canonical_form(g), g);
    }
    std::vector<std::pair<std::pair<int, std::vector<std::uint8_t>>, Graph>> ordered;
    for (auto& [key, g] : seen) ordered.push_back({{g.edge_count(), key}, g});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [_, g] : ordered) out.push_back(std::move(g));
    return out;
}

std::uint64_t automorphism_count_fixing_prefix(const Graph& g, int fixed_prefix, int cap) {
    if (fixed_prefix < 0 || fixed_prefix > g.vertex_count())
        throw DomainError("automorphism prefix out of range");
    return aut_count_impl(g, fixed_prefix, cap);
}

} // namespace zolab
