#include "zolab/densest.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdint>

#include "zolab/graph_alg.hpp"
#include "zolab/maxflow.hpp"

namespace zolab {

namespace {

struct SubsetScore {
    long long edges = -1;
    int size = 0;
    std::uint32_t mask = 0;

    // max density, then min cardinality, then lexicographically smallest
    // vertex list (equivalently: holder of the lowest differing bit)
    bool better_than(const SubsetScore& other) const {
        if (other.edges < 0) return true;
        long long lhs = edges * other.size;
        long long rhs = other.edges * size;
        if (lhs != rhs) return lhs > rhs;
        if (size != other.size) return size < other.size;
        if (mask == other.mask) return false;
        std::uint32_t diff = mask ^ other.mask;
        return (mask & (diff & -diff)) != 0;
    }
};

SubsetScore brute_scan(const std::vector<std::uint32_t>& adj, int n, std::uint32_t begin,
                       std::uint32_t end) {
    SubsetScore best;
    for (std::uint32_t mask = begin; mask < end; ++mask) {
        if (mask == 0) continue;
        long long e = 0;
        std::uint32_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            e += std::popcount(adj[v] & mask & ((std::uint32_t{1} << v) - 1));
        }
        SubsetScore cand{e, std::popcount(mask), mask};
        if (cand.better_than(best)) best = cand;
    }
    return best;
}

DensestResult brute_force(const Graph& g, int cap, Execution ex) {
    int n = g.vertex_count();
    if (n > cap || n > 25)
        throw CapExceededError("max_density_subgraph(BruteForce): " + std::to_string(n) +
                               " vertices exceed cap " + std::to_string(std::min(cap, 25)));
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    std::uint32_t total = std::uint32_t{1} << n;
    SubsetScore best;
    if (ex == Execution::Serial || total < (1u << 12)) {
        best = brute_scan(adj, n, 1, total);
    } else {
        int chunks = std::max(1, omp_get_max_threads() * 4);
        std::vector<SubsetScore> partial(chunks);
        std::uint32_t step = total / chunks + 1;
#pragma omp parallel for schedule(static)
        for (int c = 0; c < chunks; ++c) {
            std::uint32_t lo = static_cast<std::uint32_t>(c) * step;
            std::uint32_t hi = std::min<std::uint64_t>(total, std::uint64_t(lo) + step);
            partial[c] = brute_scan(adj, n, std::max<std::uint32_t>(lo, 1), hi);
        }
        for (const auto& p : partial)
            if (p.edges >= 0 && p.better_than(best)) best = p;
    }
    VertexSet witness;
    for (int v = 0; v < n; ++v)
        if (best.mask & (std::uint32_t{1} << v)) witness.push_back(v);
    return {Rational(best.edges, best.size), witness};
}

// Min cut of the parametric network equals q*m*n - 2*max_S (q*e(S) - p*|S|),
// so the cut drops below q*m*n exactly when some subset is denser than p/q.
struct FlowProbe {
    const Graph& g;
    long long m;

    bool denser_exists(const Rational& guess, std::vector<bool>* side = nullptr) const {
        int n = g.vertex_count();
        long long p = bigint_to_ll(numerator(guess));
        long long q = bigint_to_ll(denominator(guess));
        if (p < 0) return g.edge_count() > 0 || n > 0; // any single vertex has density 0 > negative
        // overflow guard: capacities and totals stay well under 2^62
        BigInt bound = BigInt(q) * m * n + BigInt(p) * 2 * n;
        if (bound > BigInt(1) << 62)
            throw CapExceededError("densest flow probe: capacities out of range");
        int source = n, sink = n + 1;
        MaxFlow flow(n + 2);
        for (int v = 0; v < n; ++v) {
            flow.add_edge(source, v, q * m);
            flow.add_edge(v, sink, q * m + 2 * p - q * g.degree(v));
        }
        for (auto [u, v] : g.edges()) {
            flow.add_edge(u, v, q);
            flow.add_edge(v, u, q);
        }
        long long cut = flow.run(source, sink);
        if (side) *side = flow.min_cut_side(source);
        return cut < q * m * n;
    }
};

DensestResult flow_search(const Graph& g) {
    int n = g.vertex_count();
    long long m = g.edge_count();
    if (m == 0) return {Rational(0), {0}};
    FlowProbe probe{g, m};

    Rational n2(static_cast<long long>(n) * n);
    Rational lo = density(g) - Rational(1, 2) / n2; // rho_max > lo
    Rational hi(n - 1, 2);                          // no subset exceeds (n-1)/2
    if (hi < lo) hi = density(g);
    while (hi - lo >= 1 / n2) {
        Rational mid = (lo + hi) / 2;
        if (probe.denser_exists(mid))
            lo = mid;
        else
            hi = mid;
    }
    // unique candidate fraction with denominator <= n in (lo, hi]
    Rational value(-1);
    for (int v = 1; v <= n; ++v) {
        BigInt e = rational_floor(hi * v);
        Rational cand(e, v);
        if (cand > lo && cand <= hi) {
            if (value >= 0 && cand != value)
                throw Error("densest flow: candidate fraction not unique");
            value = cand;
        }
    }
    if (value < 0) throw Error("densest flow: no candidate fraction in interval");

    // witness: probe strictly below the optimum; the minimal cut side
    // consists of optimum-attaining subsets only
    Rational below = value - Rational(1, 2 * static_cast<long long>(n) * n);
    std::vector<bool> side;
    bool any = probe.denser_exists(below, &side);
    if (!any) throw Error("densest flow: witness probe failed");
    VertexSet witness;
    for (int v = 0; v < n; ++v)
        if (side[v]) witness.push_back(v);
    Graph sub = g.induced(witness);
    if (density(sub) != value) throw Error("densest flow: witness does not attain the value");
    return {value, witness};
}

} // namespace

DensestResult max_density_subgraph(const Graph& g, DensestMode mode, int brute_cap, Execution ex) {
    if (g.vertex_count() == 0) throw DomainError("max_density_subgraph on empty graph");
    switch (mode) {
        case DensestMode::BruteForce:
            return brute_force(g, brute_cap, ex);
        case DensestMode::Flow:
            return flow_search(g);
        case DensestMode::Auto:
        default:
            return g.vertex_count() <= std::min(brute_cap, 14) ? brute_force(g, brute_cap, ex)
                                                               : flow_search(g);
    }
}

Rational max_density(const Graph& g) { return max_density_subgraph(g).value; }

bool has_denser_subgraph(const Graph& g, const Rational& rho) {
    if (g.vertex_count() == 0) throw DomainError("has_denser_subgraph on empty graph");
    if (g.edge_count() == 0) return rho < 0;
    return FlowProbe{g, g.edge_count()}.denser_exists(rho);
}

bool rho_max_below(const Graph& g, const Rational& bound) {
    if (g.vertex_count() == 0) throw DomainError("rho_max_below on empty graph");
    if (g.edge_count() == 0) return bound > 0;
    if (g.vertex_count() <= 14) return max_density(g) < bound;
    // rho^max >= bound iff some subset is denser than bound - delta, where
    // delta undercuts the spacing 1/(den(bound)*n) between candidate
    // fractions and the bound
    Rational delta = Rational(1, 2) / (Rational(denominator(bound)) * g.vertex_count());
    return !FlowProbe{g, g.edge_count()}.denser_exists(bound - delta);
}

BalanceClass balance_class(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw DomainError("balance_class of empty graph");
    Rational rho = density(g);
    if (max_density(g) > rho) return BalanceClass::Unbalanced;
    if (n == 1) return BalanceClass::StrictlyBalanced;
    // proper subgraphs: spanning ones are strictly sparser automatically,
    // so only vertex-deleted induced subgraphs can tie
    for (int v = 0; v < n; ++v) {
        VertexSet rest;
        for (int u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        Graph sub = g.induced(rest);
        if (sub.edge_count() > 0 && max_density(sub) >= rho) return BalanceClass::Balanced;
        if (sub.edge_count() == 0 && rho == 0) return BalanceClass::Balanced;
    }
    return BalanceClass::StrictlyBalanced;
}

} // namespace zolab
