#pragma once

#include "zolab/graph.hpp"
#include "zolab/rational.hpp"

namespace zolab {

/// Serial reference vs OpenMP kernel. Both must produce identical results.
enum class Execution { Serial, Parallel };

enum class DensestMode {
    BruteForce, ///< all nonempty vertex subsets (cap-guarded)
    Flow,       ///< exact parametric max-flow bisection
    Auto,       ///< BruteForce when small, Flow otherwise
};

struct DensestResult {
    Rational value;
    VertexSet witness; ///< induced subgraph attaining the value
};

/// rho^max(g) with an attaining witness. BruteForce ties are broken toward
/// the smallest-cardinality, then lexicographically smallest vertex set;
/// Flow reports the minimal min-cut witness (value is identical).
DensestResult max_density_subgraph(const Graph& g, DensestMode mode = DensestMode::Auto,
                                   int brute_cap = 20, Execution ex = Execution::Parallel);

/// Convenience: just the exact value.
Rational max_density(const Graph& g);

/// True iff some subgraph is strictly denser than rho (exact), i.e.
/// rho^max(g) > rho. Flow-based, no cap.
bool has_denser_subgraph(const Graph& g, const Rational& rho);

/// True iff rho^max(g) < bound, exact, without computing rho^max itself.
bool rho_max_below(const Graph& g, const Rational& bound);

enum class BalanceClass { StrictlyBalanced, Balanced, Unbalanced };

/// StrictlyBalanced: every proper subgraph strictly sparser. Balanced:
/// no subgraph denser but some proper one ties. Unbalanced otherwise.
BalanceClass balance_class(const Graph& g);

} // namespace zolab
