#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zolab/densest.hpp"
#include "zolab/extensions.hpp"
#include "zolab/graph.hpp"
#include "zolab/rational.hpp"

namespace zolab {

/// The size-term 1/(rho-1) appears with a ceiling in the parameter formulas
/// but as floor+1 in the strategy's chain lengths; both readings are kept
/// behind this switch (defaults follow the text as written).
enum class SizeTermConvention { Ceiling, FloorPlusOne };

/// ceil(1/(rho-1)) + 1 (Ceiling) or floor(1/(rho-1)) + 1 (FloorPlusOne).
long long size_term(const Rational& rho, SizeTermConvention conv = SizeTermConvention::Ceiling);

/// Chain length used by the strategies: floor(1/(rho-1)) + 1, as written.
long long strategy_chain_length(const Rational& rho);

struct SparsenessParams {
    long long n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    long long eta = 0;
    Rational rho;
    int k = 0;
};

/// If rho = 1 + 1/(m-1 + b/a) for naturals a, b with b <= m, the offending
/// minimal (a, b); otherwise nullopt.
std::optional<std::pair<BigInt, BigInt>> excluded_density_witness(const Rational& rho, int m);

/// n1 = eta + (k-1)(term), n2 = eta + (k-2)(term), n3 = 2^{k-2}+1, n4 = 2,
/// for m = 2^{k-1}. Requires 1 < rho < m/(m-1) and rho outside the excluded
/// density set (domain error naming the offending (a,b) otherwise).
SparsenessParams sparseness_params(const Rational& rho, int k,
                                   SizeTermConvention conv = SizeTermConvention::Ceiling);

struct Property1Report {
    bool pass = true;
    bool capped = false;          ///< pattern_cap was below n1 (desk-scale override)
    std::string witness_g6;       ///< violating pattern on failure
    bool witness_required = false; ///< true: required but absent; false: forbidden but present
};

/// Small-pattern dichotomy: every K with v(K) <= pattern_cap and
/// rho^max(K) < rho embeds into g; none with rho^max(K) > rho does.
Property1Report check_property1(const Graph& g, long long n1, const Rational& rho,
                                int pattern_cap);

struct Property2Caps {
    int pair_v_cap = 3;           ///< catalog cap on v(H1)
    int rigid_v_cap = 3;          ///< effective cap on v(K1) (min'd with n3)
    long long placement_samples = 40;
    std::uint64_t seed = 1;
    int exhaustive_below = 30;    ///< exhaustive placements when v(g) <= this
};

struct Property2Report {
    bool pass = true;
    bool exhaustive = true;
    // witness triple on failure
    std::string safe_pair_g6;
    int safe_roots = 0;
    std::vector<int> placement;
    std::string rigid_pair_g6;
    int rigid_roots = 0;
};

/// For every 1/rho-safe pair in the capped catalog, every (or sampled)
/// ordered placement of its root graph in g, and every 1/rho-rigid pair
/// with v(K1) <= min(n3, cap), v(K2) <= n4: an exact extension that is
/// (K1,K2)-maximal in g exists.
Property2Report check_property2(const Graph& g, const SparsenessParams& params,
                                const Property2Caps& caps,
                                Execution ex = Execution::Parallel);

struct SparsenessReport {
    Property1Report property1;
    Property2Report property2;
    bool pass() const { return property1.pass && property2.pass; }
    std::string to_json() const;
};

SparsenessReport check_sparseness(const Graph& g, const SparsenessParams& params,
                                  int pattern_cap, const Property2Caps& caps,
                                  Execution ex = Execution::Parallel);

} // namespace zolab
