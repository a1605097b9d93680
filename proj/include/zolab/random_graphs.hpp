#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "zolab/densest.hpp"
#include "zolab/graph.hpp"
#include "zolab/prng.hpp"
#include "zolab/rational.hpp"

namespace zolab {

/// A fully reproducible G(n,p) sample point.
struct GnpSpec {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// N^{-alpha} in round-to-nearest double arithmetic.
double alpha_to_p(long long n, const Rational& alpha);

/// Each vertex pair (u,v), u < v in lexicographic order, is included iff
/// the next SplitMix64 double of the spec's seed is < p. Identical specs
/// produce identical graphs on every platform.
Graph sample_gnp(const GnpSpec& spec, int memory_cap = 100000);

struct McEstimate {
    long long trials = 0;
    long long successes = 0;
    double frequency = 0.0;
    double ci95_low = 0.0;  ///< Wilson interval
    double ci95_high = 0.0;
};

using GraphPredicate = std::function<bool(const Graph&)>;

/// Seeded Monte-Carlo sweep: trial i draws G(n,p) with seed
/// SplitMix64::derive(master_seed, i) and evaluates the predicate. The
/// estimate is bit-identical for serial and parallel execution.
McEstimate monte_carlo(const GraphPredicate& predicate, int n, double p, long long trials,
                       std::uint64_t master_seed, Execution ex = Execution::Parallel);

/// Wilson 95% score interval.
std::pair<double, double> wilson_interval(long long successes, long long trials);

} // namespace zolab
