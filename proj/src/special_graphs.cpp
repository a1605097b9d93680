#include "zolab/special_graphs.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>

#include "zolab/graph_alg.hpp"
#include "zolab/prng.hpp"

namespace zolab {

bool below_density_ceiling(const Graph& g, int m) {
    if (m < 2) throw DomainError("density ceiling needs m >= 2");
    return rho_max_below(g, Rational(m, m - 1));
}

namespace {

Graph apply_type1(const Graph& g, int x1, int t1, int t2) {
    int n = g.vertex_count();
    Graph out = g.with_vertices(t1 + t2);
    std::vector<Edge> es;
    if (t1 == 0) {
        es.emplace_back(x1, n);
        for (int i = 0; i + 1 < t2; ++i) es.emplace_back(n + i, n + i + 1);
        es.emplace_back(n + t2 - 1, x1);
    } else {
        es.emplace_back(x1, n);
        for (int i = 0; i + 1 < t1 + t2; ++i) es.emplace_back(n + i, n + i + 1);
        es.emplace_back(n + t1 + t2 - 1, n);
    }
    return out.with_edges(es);
}

Graph apply_type2(const Graph& g, int x1, int x2, int t) {
    int n = g.vertex_count();
    Graph out = g.with_vertices(t);
    std::vector<Edge> es;
    es.emplace_back(x1, n);
    for (int i = 0; i + 1 < t; ++i) es.emplace_back(n + i, n + i + 1);
    es.emplace_back(n + t - 1, x2);
    return out.with_edges(es);
}

} // namespace

std::optional<MExtensionKind> classify_m_extension(const Graph& g, const Graph& h, int m) {
    if (m < 2) throw DomainError("classify_m_extension needs m >= 2");
    int nh = h.vertex_count(), ng = g.vertex_count();
    if (nh > ng) throw DomainError("classify_m_extension: h larger than g");
    for (auto [u, v] : h.edges())
        if (!g.has_edge(u, v)) throw DomainError("classify_m_extension: h is not a subgraph of g");

    std::vector<Edge> added;
    for (auto [u, v] : g.edges())
        if (v >= nh || !h.has_edge(u, v)) added.emplace_back(u, v);

    if (ng == nh) {
        if (added.empty()) return std::nullopt; // g = h is not an extension
        if (!below_density_ceiling(g, m)) return std::nullopt;
        return MExtensionKind{Type3Extension{added}};
    }

    // new vertices are nh..ng-1; type 1/2 add no edges among the old ones
    for (auto [u, v] : added)
        if (u < nh && v < nh) return std::nullopt;

    int fresh = ng - nh;
    // degree of new vertices within the added edges; attachments to old
    std::vector<int> deg(fresh, 0);
    std::vector<std::pair<int, int>> attach; // (old vertex, new vertex)
    int new_new = 0;
    for (auto [u, v] : added) {
        if (u >= nh && v >= nh) {
            ++deg[u - nh];
            ++deg[v - nh];
            ++new_new;
        } else {
            int old_v = u < nh ? u : v;
            int new_v = (u >= nh ? u : v) - nh;
            ++deg[new_v];
            attach.emplace_back(old_v, new_v);
        }
    }

    auto new_graph = [&] {
        std::vector<Edge> es;
        for (auto [u, v] : added)
            if (u >= nh && v >= nh) es.emplace_back(u - nh, v - nh);
        return Graph(fresh, std::move(es));
    }();

    auto is_path_all = [&](const Graph& nn) {
        // all fresh vertices forming one simple path
        if (nn.edge_count() != fresh - 1) return false;
        int ends = 0;
        for (int v = 0; v < fresh; ++v) {
            if (nn.degree(v) > 2) return false;
            if (nn.degree(v) <= 1) ++ends;
        }
        return connected(nn) && (fresh == 1 ? ends == 1 : ends == 2);
    };
    auto is_cycle_all = [&](const Graph& nn) {
        if (fresh < 3 || nn.edge_count() != fresh) return false;
        for (int v = 0; v < fresh; ++v)
            if (nn.degree(v) != 2) return false;
        return connected(nn);
    };

    if (attach.size() == 2 && attach[0].first == attach[1].first && m >= 3) {
        // candidate type 1 with t1 = 0: cycle through x1
        int x1 = attach[0].first;
        if (fresh >= 2 && fresh <= m - 1 && is_path_all(new_graph)) {
            bool ends_attached = attach[0].second != attach[1].second &&
                                 new_graph.degree(attach[0].second) <= 1 &&
                                 new_graph.degree(attach[1].second) <= 1;
            if (ends_attached && below_density_ceiling(g, m))
                return MExtensionKind{Type1Extension{0, fresh, x1}};
        }
    }
    if (attach.size() == 1 && m >= 3) {
        // candidate type 1 with t1 >= 1: cycle plus the pendant edge to x1
        if (fresh >= 3 && fresh <= m - 1 && is_cycle_all(new_graph) &&
            below_density_ceiling(g, m))
            return MExtensionKind{Type1Extension{1, fresh - 1, attach[0].first}};
    }
    if (attach.size() == 2 && attach[0].first != attach[1].first) {
        // candidate type 2: path joining two old vertices
        if (fresh >= 1 && fresh <= m - 1 && is_path_all(new_graph)) {
            int a = attach[0].second, b = attach[1].second;
            bool ends_ok = fresh == 1 ? a == b
                                      : (a != b && new_graph.degree(a) == 1 && new_graph.degree(b) == 1);
            if (ends_ok && below_density_ceiling(g, m))
                return MExtensionKind{Type2Extension{fresh, attach[0].first, attach[1].first}};
        }
    }
    return std::nullopt;
}

namespace {

struct HmChild {
    Graph g;
    MExtensionKind kind;
};

// All one-step extensions of g (single-edge type 3; one representative per
// cycle length for the pendant type-1 shape), unfiltered.
std::vector<HmChild> raw_children(const Graph& g, int m, int v_max) {
    std::vector<HmChild> out;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v))
                out.push_back({g.with_edge(u, v), Type3Extension{{{u, v}}}});
    for (int x = 0; x < n; ++x) {
        for (int t2 = 2; t2 <= m - 1 && n + t2 <= v_max; ++t2)
            out.push_back({apply_type1(g, x, 0, t2), Type1Extension{0, t2, x}});
        for (int c = 3; c <= m - 1 && n + c <= v_max; ++c)
            out.push_back({apply_type1(g, x, 1, c - 1), Type1Extension{1, c - 1, x}});
    }
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = x1 + 1; x2 < n; ++x2)
            for (int t = 1; t <= m - 1 && n + t <= v_max; ++t)
                out.push_back({apply_type2(g, x1, x2, t), Type2Extension{t, x1, x2}});
    return out;
}

using CanonKey = std::vector<std::uint8_t>;

} // namespace

std::vector<Graph> enumerate_hm(int m, int v_max, int cap, Execution ex) {
    if (m < 3) throw DomainError("enumerate_hm needs m >= 3");
    if (v_max < 1) throw DomainError("enumerate_hm needs v_max >= 1");
    if (v_max > cap)
        throw CapExceededError("enumerate_hm: v_max exceeds cap " + std::to_string(cap));

    std::map<CanonKey, Graph> members;
    std::vector<std::vector<Graph>> level(v_max + 1);
    auto add = [&](const CanonKey& key, const Graph& g) {
        if (members.emplace(key, g).second) level[g.vertex_count()].push_back(g);
    };
    Graph k1 = Graph::empty_graph(1);
    add(canonical_form(k1, nullptr, cap), k1);

    for (int v = 1; v <= v_max; ++v) {
        size_t done = 0;
        while (done < level[v].size()) {
            std::vector<Graph> batch(level[v].begin() + done, level[v].end());
            done = level[v].size();
            std::vector<std::vector<std::pair<CanonKey, Graph>>> results(batch.size());
            bool serial = ex == Execution::Serial;
#pragma omp parallel for schedule(dynamic) if (!serial)
            for (long long i = 0; i < static_cast<long long>(batch.size()); ++i) {
                for (auto& child : raw_children(batch[i], m, v_max)) {
                    if (!below_density_ceiling(child.g, m)) continue;
                    results[i].emplace_back(canonical_form(child.g, nullptr, cap), child.g);
                }
            }
            for (auto& list : results)
                for (auto& [key, g] : list) add(key, g);
        }
    }

    std::vector<std::pair<std::tuple<int, int, CanonKey>, Graph>> ordered;
    for (auto& [key, g] : members)
        ordered.push_back({{g.vertex_count(), g.edge_count(), key}, g});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(ordered.size());
    for (auto& [_, g] : ordered) out.push_back(std::move(g));
    return out;
}

namespace {

// Reverse peeling of one type-1/2 step on the alive set of base.
struct PeelMove {
    VertexSet removed;
    MExtensionKind kind;
};

int alive_degree(const Graph& base, const std::vector<bool>& alive, int v) {
    int d = 0;
    for (int u : base.neighbors(v))
        if (alive[u]) ++d;
    return d;
}

std::vector<int> alive_neighbors(const Graph& base, const std::vector<bool>& alive, int v) {
    std::vector<int> out;
    for (int u : base.neighbors(v))
        if (alive[u]) out.push_back(u);
    return out;
}

std::vector<PeelMove> peel_candidates(const Graph& base, const std::vector<bool>& alive, int m) {
    std::vector<PeelMove> out;
    int n = base.vertex_count();
    // walks from u through degree-2 vertices: yield connecting paths
    // (type 2), cycles through u (type 1 with t1 = 0)
    for (int u = 0; u < n; ++u) {
        if (!alive[u]) continue;
        for (int y : alive_neighbors(base, alive, u)) {
            if (alive_degree(base, alive, y) != 2) continue;
            std::vector<int> interior{y};
            int prev = u, cur = y;
            while (static_cast<int>(interior.size()) <= m - 1) {
                auto nb = alive_neighbors(base, alive, cur);
                int next = nb[0] == prev ? nb[1] : nb[0];
                if (next == u) {
                    if (interior.size() >= 2) {
                        // cycle through u; dedupe the two orientations by
                        // requiring the first interior < last interior
                        if (interior.front() < interior.back()) {
                            VertexSet rm(interior.begin(), interior.end());
                            std::sort(rm.begin(), rm.end());
                            out.push_back({rm, Type1Extension{0, static_cast<int>(interior.size()), u}});
                        }
                    }
                    break;
                }
                if (std::find(interior.begin(), interior.end(), next) != interior.end()) break;
                // next is a valid far endpoint for a connecting path
                if (u < next) {
                    VertexSet rm(interior.begin(), interior.end());
                    std::sort(rm.begin(), rm.end());
                    out.push_back({rm, Type2Extension{static_cast<int>(interior.size()), u, next}});
                }
                if (alive_degree(base, alive, next) != 2) break;
                interior.push_back(next);
                prev = cur;
                cur = next;
            }
        }
    }
    // detached cycles hanging off one vertex (type 1 with t1 >= 1): cycle of
    // degree-2 vertices except one w of degree 3 whose third edge leaves it
    for (int w = 0; w < n; ++w) {
        if (!alive[w] || alive_degree(base, alive, w) != 3) continue;
        auto nb = alive_neighbors(base, alive, w);
        for (size_t ai = 0; ai < nb.size(); ++ai) {
            for (size_t bi = ai + 1; bi < nb.size(); ++bi) {
                int a = nb[ai], b = nb[bi];
                if (alive_degree(base, alive, a) != 2 || alive_degree(base, alive, b) != 2)
                    continue;
                // walk from a (away from w) through degree-2 vertices to b
                std::vector<int> chain{a};
                int prev = w, cur = a;
                bool closed = false;
                while (static_cast<int>(chain.size()) + 1 <= m - 1) {
                    auto cnb = alive_neighbors(base, alive, cur);
                    if (cnb.size() != 2) break;
                    int next = cnb[0] == prev ? cnb[1] : cnb[0];
                    if (next == b) {
                        closed = true;
                        break;
                    }
                    if (next == w || std::find(chain.begin(), chain.end(), next) != chain.end())
                        break;
                    if (alive_degree(base, alive, next) != 2) break;
                    chain.push_back(next);
                    prev = cur;
                    cur = next;
                }
                if (!closed) continue;
                chain.push_back(b);
                int c = static_cast<int>(chain.size()) + 1; // cycle length with w
                if (c < 3 || c > m - 1) continue;
                int x1 = nb[3 - static_cast<int>(ai) - static_cast<int>(bi)];
                VertexSet rm(chain.begin(), chain.end());
                rm.push_back(w);
                std::sort(rm.begin(), rm.end());
                out.push_back({rm, Type1Extension{1, c - 1, x1}});
            }
        }
    }
    return out;
}

struct PeelSearch {
    const Graph& base;
    int m;
    std::set<CanonKey> failed;
    std::vector<MDecompositionStep> steps; // collected top-down
    int start_vertex = -1;

    bool run(std::vector<bool>& alive, int alive_count) {
        if (alive_count == 1) {
            for (int v = 0; v < base.vertex_count(); ++v)
                if (alive[v]) start_vertex = v;
            return true;
        }
        VertexSet alive_set;
        for (int v = 0; v < base.vertex_count(); ++v)
            if (alive[v]) alive_set.push_back(v);
        Graph cur = base.induced(alive_set);
        auto key = canonical_form(cur, nullptr, std::max(alive_count, 12));
        if (failed.count(key)) return false;
        for (auto& move : peel_candidates(base, alive, m)) {
            steps.push_back({alive_set, move.kind});
            for (int v : move.removed) alive[v] = false;
            if (run(alive, alive_count - static_cast<int>(move.removed.size()))) return true;
            for (int v : move.removed) alive[v] = true;
            steps.pop_back();
        }
        failed.insert(key);
        return false;
    }
};

} // namespace

std::optional<MDecomposition> m_decomposition(const Graph& g, int m, int cap) {
    if (m < 3) throw DomainError("m_decomposition needs m >= 3");
    int n = g.vertex_count();
    if (n > cap)
        throw CapExceededError("m_decomposition: " + std::to_string(n) + " vertices exceed cap " +
                               std::to_string(cap));
    if (n == 1 && g.edge_count() == 0) return MDecomposition{0, {}, {}};
    if (n < 1) throw DomainError("m_decomposition on empty graph");
    if (!below_density_ceiling(g, m)) return std::nullopt;
    int e = g.edge_count();
    if (e < n) return std::nullopt; // every multi-vertex member has e >= v

    int max_strip = e - n;
    const auto& all_edges = g.edges();
    for (int strip = 0; strip <= max_strip; ++strip) {
        std::vector<int> idx(strip);
        for (int i = 0; i < strip; ++i) idx[i] = i;
        PeelSearch search{g, m};
        while (true) {
            std::vector<Edge> removed;
            for (int i : idx) removed.push_back(all_edges[i]);
            Graph base = g;
            for (auto [u, v] : removed) base = base.without_edge(u, v);
            PeelSearch attempt{base, m, std::move(search.failed)};
            std::vector<bool> alive(n, true);
            if (attempt.run(alive, n)) {
                MDecomposition out;
                out.start_vertex = attempt.start_vertex;
                out.final_added = removed;
                out.steps.assign(attempt.steps.rbegin(), attempt.steps.rend());
                return out;
            }
            search.failed = std::move(attempt.failed);
            if (strip == 0) break;
            int i = strip - 1;
            while (i >= 0 && idx[i] == e - strip + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < strip; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool is_hm_member(const Graph& g, int m, int cap) {
    return m_decomposition(g, m, cap).has_value();
}

bool decomposition_valid(const Graph& g, int m, const MDecomposition& d) {
    Graph base = g;
    for (auto [u, v] : d.final_added) base = base.without_edge(u, v);
    std::vector<int> order{d.start_vertex};
    Graph prev = base.induced(order);
    if (prev.edge_count() != 0) return false;
    for (const auto& step : d.steps) {
        std::vector<int> next_order = order;
        for (int v : step.vertices)
            if (std::find(order.begin(), order.end(), v) == order.end()) next_order.push_back(v);
        if (next_order.size() != step.vertices.size()) return false;
        Graph cur = base.induced(next_order);
        auto kind = classify_m_extension(cur, prev, m);
        if (!kind || kind->index() != step.kind.index()) return false;
        order = std::move(next_order);
        prev = cur;
    }
    if (order.size() != static_cast<size_t>(g.vertex_count())) return false;
    if (!d.final_added.empty()) {
        Graph whole = g.induced(order); // wait: order is a permutation of all vertices
        auto kind = classify_m_extension(whole, prev, m);
        if (!kind || !std::holds_alternative<Type3Extension>(*kind)) return false;
    } else {
        if (prev.edge_count() != g.edge_count()) return false;
    }
    return true;
}

EtaResult eta(const Rational& rho, int m) {
    if (m < 2) throw DomainError("eta needs m >= 2");
    Rational bound(m, m - 1);
    if (!(rho > 1 && rho < bound))
        throw DomainError("eta needs 1 < rho < m/(m-1), got " + rational_to_string(rho));
    Rational threshold = rho / (Rational(m) - rho * (m - 1));
    long long n0 = bigint_to_ll(rational_floor(threshold)) + 1;
    auto ratio = [&](long long n) {
        return Rational(BigInt(m) * n, BigInt(m - 1) * n + 1);
    };
    if (!(ratio(n0) > rho)) throw Error("eta: threshold verification failed at n0");
    if (n0 >= 2 && ratio(n0 - 1) > rho) throw Error("eta: n0 is not minimal");
    return {n0, static_cast<long long>(m - 1) * (n0 + 1) + 1};
}

namespace {

bool has_small_dense_subset(const Graph& g, const Rational& rho, int size_cap) {
    // brute force over subsets (members here are <= 12 vertices)
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    long long p = bigint_to_ll(numerator(rho)), q = bigint_to_ll(denominator(rho));
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size > size_cap) continue;
        long long e = 0;
        for (std::uint32_t rest = mask; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            e += __builtin_popcount(adj[v] & mask & ((1u << v) - 1));
        }
        if (e * q > p * size) return true;
    }
    return false;
}

} // namespace

std::optional<long long> min_eta_on_family(int m, const Rational& rho, int v_max) {
    auto family = enumerate_hm(m, v_max);
    for (long long cand = 1; cand <= v_max; ++cand) {
        bool ok = true;
        for (const auto& g : family) {
            if (g.vertex_count() <= cand) continue;
            if (!has_small_dense_subset(g, rho, static_cast<int>(cand))) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    return std::nullopt;
}

DensityIdentityWitness verify_density_identity(const Graph& g, int m) {
    Rational rmax = max_density(g);
    Rational bound(m, m - 1);
    if (!(rmax > 1 && rmax < bound))
        throw DomainError("density identity needs 1 < rho^max < m/(m-1), got " +
                          rational_to_string(rmax));
    // 1 + 1/(m-1+b/a) = rmax  <=>  a/b = (P-Q)/(mQ-(m-1)P) with rmax = P/Q
    BigInt p = numerator(rmax), q = denominator(rmax);
    BigInt num = p - q;
    BigInt den = BigInt(m) * q - BigInt(m - 1) * p;
    if (num <= 0 || den <= 0) throw Error("density identity: ratio out of range");
    BigInt d = gcd(num, den);
    BigInt a = num / d, b = den / d;
    if (b > m)
        throw Error("density identity: no witness with b <= m for rho^max = " +
                    rational_to_string(rmax));
    Rational check = 1 + Rational(a, BigInt(m - 1) * a + b);
    if (check != rmax) throw Error("density identity: witness check failed");
    return {a, b};
}

std::optional<VertexSet> small_dense_subgraph(const Graph& g, const Rational& rho,
                                              long long eta_bound,
                                              const std::vector<VertexSet>& hints) {
    auto good = [&](const VertexSet& s) {
        return !s.empty() && static_cast<long long>(s.size()) <= eta_bound &&
               density(g.induced(s)) > rho;
    };
    for (const auto& hint : hints)
        if (is_vertex_set(g, hint) && good(hint)) return hint;
    // degree peeling
    std::vector<bool> alive(g.vertex_count(), true);
    int count = g.vertex_count();
    while (count >= 1) {
        VertexSet s;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (alive[v]) s.push_back(v);
        if (good(s)) return s;
        if (count == 1) break;
        int victim = -1, best_deg = -1;
        for (int v : s) {
            int d = 0;
            for (int u : g.neighbors(v))
                if (alive[u]) ++d;
            if (victim == -1 || d < best_deg) {
                victim = v;
                best_deg = d;
            }
        }
        alive[victim] = false;
        --count;
    }
    auto dense = max_density_subgraph(g, DensestMode::Auto);
    if (good(dense.witness)) return dense.witness;
    return std::nullopt;
}

RandomHmMember random_hm_member(int m, int v_min, int v_max, std::uint64_t seed) {
    if (m < 3) throw DomainError("random_hm_member needs m >= 3");
    if (!(1 <= v_min && v_min < v_max)) throw DomainError("random_hm_member needs v_min < v_max");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        long long target = v_min + 1 + static_cast<long long>(rng.next_below(v_max - v_min));
        Graph g = Graph::empty_graph(1);
        MDecomposition dec;
        dec.start_vertex = 0;
        std::vector<Edge> chords;
        bool stuck = false;
        while (g.vertex_count() < target && !stuck) {
            long long room = target - g.vertex_count();
            bool grew = false;
            for (int tries = 0; tries < 200 && !grew; ++tries) {
                int pick = static_cast<int>(rng.next_below(10));
                Graph cand;
                MExtensionKind kind;
                if (g.vertex_count() == 1 || pick < 5) {
                    if (room < 2) { // only a path of one vertex fits; needs 2 old vertices
                        if (g.vertex_count() == 1) break;
                        pick = 7;
                    } else {
                        int t2 = 2 + static_cast<int>(rng.next_below(
                                         static_cast<std::uint64_t>(std::min<long long>(m - 1, room) - 1)));
                        int x = static_cast<int>(rng.next_below(g.vertex_count()));
                        cand = apply_type1(g, x, 0, t2);
                        kind = Type1Extension{0, t2, x};
                    }
                }
                if (pick >= 5 && pick < 8 && g.vertex_count() >= 2) {
                    int t = 1 + static_cast<int>(rng.next_below(
                                    static_cast<std::uint64_t>(std::min<long long>(m - 1, room))));
                    int x1 = static_cast<int>(rng.next_below(g.vertex_count()));
                    int x2 = static_cast<int>(rng.next_below(g.vertex_count()));
                    if (x1 == x2) continue;
                    cand = apply_type2(g, x1, x2, t);
                    kind = Type2Extension{t, x1, x2};
                }
                if (pick >= 8 && g.vertex_count() >= 4) {
                    int u = static_cast<int>(rng.next_below(g.vertex_count()));
                    int v = static_cast<int>(rng.next_below(g.vertex_count()));
                    if (u == v || g.has_edge(u, v)) continue;
                    cand = g.with_edge(u, v);
                    if (!below_density_ceiling(cand, m)) continue;
                    chords.emplace_back(std::min(u, v), std::max(u, v));
                    g = cand;
                    grew = true;
                    continue;
                }
                if (cand.vertex_count() == 0) continue;
                if (!below_density_ceiling(cand, m)) continue;
                g = cand;
                dec.steps.push_back({full_vertex_set(g), kind});
                grew = true;
            }
            if (!grew) stuck = true;
        }
        if (stuck || g.vertex_count() <= v_min || g.vertex_count() > v_max) continue;
        dec.final_added = chords;
        RandomHmMember out{g, dec, {}};
        out.prefixes.push_back({dec.start_vertex});
        for (const auto& step : dec.steps) out.prefixes.push_back(step.vertices);
        return out;
    }
    throw Error("random_hm_member: could not reach the target size");
}

std::optional<VertexSet> find_type12_extension(const Graph& q, const VertexSet& w, int m) {
    if (!is_vertex_set(q, w) || w.empty()) throw DomainError("find_type12_extension: bad set");
    if (m < 2) throw DomainError("find_type12_extension needs m >= 2");
    Graph base = q.induced(w);
    auto check = [&](const std::vector<int>& fresh, const std::vector<Edge>& construction) {
        // extension graph: induced W + the construction edges only
        std::vector<int> order(w.begin(), w.end());
        order.insert(order.end(), fresh.begin(), fresh.end());
        std::vector<int> pos(q.vertex_count(), -1);
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        std::vector<Edge> es = base.edges();
        for (auto [u, v] : construction) es.emplace_back(pos[u], pos[v]);
        Graph ext(static_cast<int>(order.size()), std::move(es));
        return below_density_ceiling(ext, m);
    };

    std::optional<VertexSet> found;
    auto emit = [&](const std::vector<int>& fresh) {
        VertexSet s = w;
        for (int v : fresh) s.push_back(v);
        std::sort(s.begin(), s.end());
        found = s;
    };

    // paths out of W and cycles through a W vertex
    std::vector<int> path;
    std::vector<bool> used(q.vertex_count(), false);
    std::function<bool(int, int)> dfs = [&](int u, int cur) -> bool {
        for (int next : q.neighbors(cur)) {
            if (set_contains(w, next)) {
                if (!path.empty()) {
                    if (next != u && m >= 2 && static_cast<int>(path.size()) <= m - 1) {
                        // type 2: connecting path
                        std::vector<Edge> es;
                        es.emplace_back(u, path[0]);
                        for (size_t i = 0; i + 1 < path.size(); ++i)
                            es.emplace_back(path[i], path[i + 1]);
                        es.emplace_back(path.back(), next);
                        if (check(path, es)) {
                            emit(path);
                            return true;
                        }
                    }
                    if (next == u && m >= 3 && path.size() >= 2 &&
                        static_cast<int>(path.size()) <= m - 1) {
                        // type 1, t1 = 0: cycle through u
                        std::vector<Edge> es;
                        es.emplace_back(u, path[0]);
                        for (size_t i = 0; i + 1 < path.size(); ++i)
                            es.emplace_back(path[i], path[i + 1]);
                        es.emplace_back(path.back(), u);
                        if (check(path, es)) {
                            emit(path);
                            return true;
                        }
                    }
                }
                continue;
            }
            if (used[next]) continue;
            if (static_cast<int>(path.size()) >= m - 1) continue;
            used[next] = true;
            path.push_back(next);
            if (dfs(u, next)) return true;
            path.pop_back();
            used[next] = false;
        }
        return false;
    };
    for (int u : w) {
        std::fill(used.begin(), used.end(), false);
        path.clear();
        if (dfs(u, u)) return found;
    }

    if (m < 3) return std::nullopt;
    // type 1, t1 >= 1: a cycle outside W adjacent to some W vertex
    for (int u : w) {
        for (int y : q.neighbors(u)) {
            if (set_contains(w, y)) continue;
            // find a cycle through y avoiding W, length <= m-1
            std::vector<int> cyc{y};
            std::vector<bool> cused(q.vertex_count(), false);
            cused[y] = true;
            std::function<bool(int)> cdfs = [&](int cur) -> bool {
                for (int next : q.neighbors(cur)) {
                    if (next == y && cyc.size() >= 3) {
                        std::vector<Edge> es;
                        es.emplace_back(u, y);
                        for (size_t i = 0; i + 1 < cyc.size(); ++i) es.emplace_back(cyc[i], cyc[i + 1]);
                        es.emplace_back(cyc.back(), y);
                        if (check(cyc, es)) {
                            emit(cyc);
                            return true;
                        }
                    }
                    if (set_contains(w, next) || cused[next]) continue;
                    if (static_cast<int>(cyc.size()) >= m - 1) continue;
                    cused[next] = true;
                    cyc.push_back(next);
                    if (cdfs(next)) return true;
                    cyc.pop_back();
                    cused[next] = false;
                }
                return false;
            };
            if (cdfs(y)) return found;
        }
    }
    return std::nullopt;
}

namespace {

// connected vertex subsets containing x, deduplicated, size-bounded
void connected_subsets(const Graph& host, int x, int size_cap, long long search_cap,
                       const std::function<void(const VertexSet&)>& visit) {
    long long visited = 0;
    VertexSet current{x};
    std::vector<bool> in_current(host.vertex_count(), false);
    std::vector<bool> banned(host.vertex_count(), false);
    in_current[x] = true;

    std::function<void()> rec = [&]() {
        if (++visited > search_cap)
            throw CapExceededError("max_hm_subgraph_at: subset search cap exceeded");
        VertexSet sorted = current;
        std::sort(sorted.begin(), sorted.end());
        visit(sorted);
        if (static_cast<int>(current.size()) >= size_cap) return;
        // frontier in deterministic order
        VertexSet frontier;
        for (int v : current)
            for (int u : host.neighbors(v))
                if (!in_current[u] && !banned[u]) frontier.push_back(u);
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        std::vector<int> newly_banned;
        for (int u : frontier) {
            current.push_back(u);
            in_current[u] = true;
            rec();
            in_current[u] = false;
            current.pop_back();
            banned[u] = true;
            newly_banned.push_back(u);
        }
        for (int u : newly_banned) banned[u] = false;
    };
    rec();
}

} // namespace

HmSubgraphAt max_hm_subgraph_at(const Graph& host, int x, int m, int size_cap,
                                long long search_cap) {
    if (x < 0 || x >= host.vertex_count()) throw DomainError("max_hm_subgraph_at: bad vertex");
    std::vector<std::vector<VertexSet>> by_size(size_cap + 1);
    connected_subsets(host, x, size_cap, search_cap,
                      [&](const VertexSet& s) { by_size[s.size()].push_back(s); });

    std::map<CanonKey, bool> member_memo;
    auto is_member = [&](const Graph& g) {
        auto key = canonical_form(g, nullptr, std::max(g.vertex_count(), 12));
        auto it = member_memo.find(key);
        if (it != member_memo.end()) return it->second;
        bool ok = is_hm_member(g, m, std::max(g.vertex_count(), 12));
        member_memo.emplace(key, ok);
        return ok;
    };

    // induced semantics: the member realized on S is host[S] itself, so the
    // strategy's witness isomorphisms control pebble adjacency exactly
    for (int size = size_cap; size >= 2; --size) {
        std::optional<std::pair<CanonKey, std::pair<VertexSet, Graph>>> best;
        for (const auto& s : by_size[size]) {
            Graph ind = host.induced(s);
            if (!below_density_ceiling(ind, m) || !is_member(ind)) continue;
            auto key = canonical_form(ind, nullptr, std::max(ind.vertex_count(), 12));
            if (!best || key < best->first || (key == best->first && s < best->second.first))
                best = {key, {s, ind}};
        }
        if (best) return {best->second.first, best->second.second};
    }
    return {{x}, Graph::empty_graph(1)};
}

} // namespace zolab
