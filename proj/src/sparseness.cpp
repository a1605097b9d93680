#include "zolab/sparseness.hpp"

#include <omp.h>

#include <algorithm>

#include <json.hpp>

#include "zolab/graph_alg.hpp"
#include "zolab/prng.hpp"
#include "zolab/special_graphs.hpp"
#include "zolab/subiso.hpp"

namespace zolab {

long long size_term(const Rational& rho, SizeTermConvention conv) {
    if (!(rho > 1)) throw DomainError("size_term needs rho > 1");
    Rational inv = Rational(1) / (rho - 1);
    BigInt base = conv == SizeTermConvention::Ceiling ? rational_ceil(inv) : rational_floor(inv);
    return bigint_to_ll(base) + 1;
}

long long strategy_chain_length(const Rational& rho) {
    return size_term(rho, SizeTermConvention::FloorPlusOne);
}

std::optional<std::pair<BigInt, BigInt>> excluded_density_witness(const Rational& rho, int m) {
    // rho = 1 + 1/(m-1+b/a)  <=>  a/b = (P-Q)/(mQ-(m-1)P), solutions scale
    BigInt p = numerator(rho), q = denominator(rho);
    BigInt num = p - q;
    BigInt den = BigInt(m) * q - BigInt(m - 1) * p;
    if (num <= 0 || den <= 0) return std::nullopt;
    BigInt d = gcd(num, den);
    BigInt a = num / d, b = den / d;
    if (b <= m) return std::make_pair(a, b);
    return std::nullopt;
}

SparsenessParams sparseness_params(const Rational& rho, int k, SizeTermConvention conv) {
    if (k < 2 || k > 20) throw DomainError("sparseness_params needs 2 <= k <= 20");
    long long m = 1ll << (k - 1);
    Rational bound(m, m - 1);
    if (!(rho > 1 && rho < bound))
        throw DomainError("sparseness_params needs 1 < rho < 2^{k-1}/(2^{k-1}-1)");
    if (auto w = excluded_density_witness(rho, static_cast<int>(m)))
        throw DomainError("sparseness_params: rho = " + rational_to_string(rho) +
                          " lies in the excluded density set, witness (a,b) = (" +
                          w->first.str() + "," + w->second.str() + ")");
    SparsenessParams out;
    out.rho = rho;
    out.k = k;
    out.eta = eta(rho, static_cast<int>(m)).eta;
    long long term = size_term(rho, conv);
    out.n1 = out.eta + static_cast<long long>(k - 1) * term;
    out.n2 = out.eta + static_cast<long long>(k - 2) * term;
    out.n3 = (1ll << (k - 2)) + 1;
    out.n4 = 2;
    return out;
}

Property1Report check_property1(const Graph& g, long long n1, const Rational& rho,
                                int pattern_cap) {
    if (pattern_cap < 1) throw DomainError("check_property1 needs pattern_cap >= 1");
    Property1Report report;
    report.capped = pattern_cap < n1;
    for (int v = 1; v <= pattern_cap; ++v) {
        for (const auto& pattern : nonisomorphic_graphs(v)) {
            Rational rmax =
                pattern.edge_count() == 0 ? Rational(0) : max_density_subgraph(pattern).value;
            if (rmax == rho) continue; // density exactly rho is unconstrained
            bool present = contains_copy(g, pattern, pattern_cap);
            if (rmax < rho && !present) {
                report.pass = false;
                report.witness_g6 = pattern.to_graph6();
                report.witness_required = true;
                return report;
            }
            if (rmax > rho && present) {
                report.pass = false;
                report.witness_g6 = pattern.to_graph6();
                report.witness_required = false;
                return report;
            }
        }
    }
    return report;
}

namespace {

std::vector<std::vector<int>> placements(const Graph& g, int arity, const Property2Caps& caps,
                                         bool& exhaustive) {
    std::vector<std::vector<int>> out;
    int n = g.vertex_count();
    exhaustive = n <= caps.exhaustive_below;
    if (exhaustive) {
        std::vector<int> tuple(arity);
        std::function<void(int)> rec = [&](int depth) {
            if (depth == arity) {
                out.push_back(tuple);
                return;
            }
            for (int v = 0; v < n; ++v) {
                if (std::find(tuple.begin(), tuple.begin() + depth, v) != tuple.begin() + depth)
                    continue;
                tuple[depth] = v;
                rec(depth + 1);
            }
        };
        rec(0);
        return out;
    }
    SplitMix64 rng(caps.seed);
    for (long long s = 0; s < caps.placement_samples; ++s) {
        std::vector<int> tuple;
        while (static_cast<int>(tuple.size()) < arity) {
            int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            if (std::find(tuple.begin(), tuple.end(), v) == tuple.end()) tuple.push_back(v);
        }
        out.push_back(tuple);
    }
    return out;
}

} // namespace

Property2Report check_property2(const Graph& g, const SparsenessParams& params,
                                const Property2Caps& caps, Execution ex) {
    Property2Report report;
    Rational alpha = Rational(1) / params.rho;

    // capped catalogs, deterministic order
    std::vector<RootedPair> safe_pairs;
    for (int roots = 1; roots < caps.pair_v_cap; ++roots)
        for (const auto& pair : enumerate_pairs_with_class(caps.pair_v_cap, roots, alpha,
                                                           PairClass::Safe))
            if (pair.root_count <= params.n2) safe_pairs.push_back(pair);

    std::vector<RootedPair> rigid_pairs;
    int k1_cap = static_cast<int>(std::min<long long>(params.n3, caps.rigid_v_cap));
    for (int roots = 1; roots <= static_cast<int>(params.n4); ++roots)
        for (const auto& pair :
             enumerate_pairs_with_class(k1_cap, roots, alpha, PairClass::Rigid))
            rigid_pairs.push_back(pair);

    for (const auto& safe : safe_pairs) {
        bool exhaustive = true;
        auto tuples = placements(g, safe.root_count, caps, exhaustive);
        report.exhaustive = report.exhaustive && exhaustive;
        for (const auto& rigid : rigid_pairs) {
            long long bad_index = -1;
            bool serial = ex == Execution::Serial;
#pragma omp parallel for schedule(dynamic) if (!serial)
            for (long long t = 0; t < static_cast<long long>(tuples.size()); ++t) {
                bool ok = exists_maximal_extension(g, safe, tuples[t], {rigid});
                if (!ok) {
#pragma omp critical
                    {
                        if (bad_index < 0 || t < bad_index) bad_index = t;
                    }
                }
            }
            if (bad_index >= 0) {
                report.pass = false;
                report.safe_pair_g6 = safe.g.to_graph6();
                report.safe_roots = safe.root_count;
                report.placement = tuples[bad_index];
                report.rigid_pair_g6 = rigid.g.to_graph6();
                report.rigid_roots = rigid.root_count;
                return report;
            }
        }
    }
    return report;
}

SparsenessReport check_sparseness(const Graph& g, const SparsenessParams& params,
                                  int pattern_cap, const Property2Caps& caps, Execution ex) {
    SparsenessReport report;
    report.property1 = check_property1(g, params.n1, params.rho, pattern_cap);
    report.property2 = check_property2(g, params, caps, ex);
    return report;
}

std::string SparsenessReport::to_json() const {
    nlohmann::ordered_json j;
    j["property1"]["pass"] = property1.pass;
    j["property1"]["capped"] = property1.capped;
    if (!property1.pass) {
        j["property1"]["witness"] = property1.witness_g6;
        j["property1"]["kind"] = property1.witness_required ? "required-absent" : "forbidden-present";
    }
    j["property2"]["pass"] = property2.pass;
    j["property2"]["exhaustive"] = property2.exhaustive;
    if (!property2.pass) {
        j["property2"]["safe_pair"] = {{"graph", property2.safe_pair_g6},
                                       {"roots", property2.safe_roots}};
        j["property2"]["placement"] = property2.placement;
        j["property2"]["rigid_pair"] = {{"graph", property2.rigid_pair_g6},
                                        {"roots", property2.rigid_roots}};
    }
    j["pass"] = pass();
    return j.dump();
}

} // namespace zolab
