#include "zolab/random_graphs.hpp"

#include <omp.h>

#include <cmath>
#include <vector>

namespace zolab {

double alpha_to_p(long long n, const Rational& alpha) {
    if (n < 1) throw DomainError("alpha_to_p needs n >= 1");
    if (!(alpha > 0 && alpha <= 1)) throw DomainError("alpha_to_p needs 0 < alpha <= 1");
    return std::pow(static_cast<double>(n), -rational_to_double(alpha));
}

Graph sample_gnp(const GnpSpec& spec, int memory_cap) {
    if (spec.n < 0 || spec.n > memory_cap)
        throw CapExceededError("sample_gnp: n exceeds memory cap " + std::to_string(memory_cap));
    if (spec.p < 0.0 || spec.p > 1.0) throw DomainError("sample_gnp: p outside [0,1]");
    SplitMix64 rng(spec.seed);
    std::vector<Edge> edges;
    for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v)
            if (rng.next_double() < spec.p) edges.emplace_back(u, v);
    return Graph(spec.n, std::move(edges));
}

std::pair<double, double> wilson_interval(long long successes, long long trials) {
    if (trials <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054; // 97.5% normal quantile
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {center - half, center + half};
}

McEstimate monte_carlo(const GraphPredicate& predicate, int n, double p, long long trials,
                       std::uint64_t master_seed, Execution ex) {
    if (trials < 1) throw DomainError("monte_carlo needs trials >= 1");
    long long successes = 0;
    long long first_error = -1;
    std::string error_text;
    bool serial = ex == Execution::Serial;
#pragma omp parallel for schedule(static) reduction(+ : successes) if (!serial)
    for (long long i = 0; i < trials; ++i) {
        GnpSpec spec{n, p, SplitMix64::derive(master_seed, static_cast<std::uint64_t>(i))};
        try {
            if (predicate(sample_gnp(spec))) successes += 1;
        } catch (const std::exception& e) {
#pragma omp critical
            {
                if (first_error < 0 || i < first_error) {
                    first_error = i;
                    error_text = e.what();
                }
            }
        }
    }
    if (first_error >= 0)
        throw Error("monte_carlo: predicate failed at trial " + std::to_string(first_error) +
                    ": " + error_text);
    McEstimate out;
    out.trials = trials;
    out.successes = successes;
    out.frequency = static_cast<double>(successes) / static_cast<double>(trials);
    auto [lo, hi] = wilson_interval(successes, trials);
    out.ci95_low = lo;
    out.ci95_high = hi;
    return out;
}

} // namespace zolab
