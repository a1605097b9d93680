#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "zolab/densest.hpp"
#include "zolab/graph.hpp"
#include "zolab/rational.hpp"

namespace zolab {

// The three m-extension moves under the density ceiling rho^max < m/(m-1):
// Type1 attaches a cycle at one old vertex (t1 = 0: the cycle runs through
// x1 itself; t1 >= 1: a cycle on the new vertices plus the edge x1-y),
// Type2 joins two distinct old vertices by a path of t new vertices,
// Type3 adds edges on the existing vertex set.
struct Type1Extension {
    int t1 = 0;
    int t2 = 0;
    int x1 = 0;
};
struct Type2Extension {
    int t = 0;
    int x1 = 0;
    int x2 = 0;
};
struct Type3Extension {
    std::vector<Edge> added;
};
using MExtensionKind = std::variant<Type1Extension, Type2Extension, Type3Extension>;

/// rho^max(g) < m/(m-1), exact.
bool below_density_ceiling(const Graph& g, int m);

/// Recognizes whether g is an m-extension of h (h = g's vertices 0..v(h)-1
/// with E(h) a subset of g's edges there). Returns the kind with witness
/// parameters, or nullopt.
std::optional<MExtensionKind> classify_m_extension(const Graph& g, const Graph& h, int m);

/// The family H_m up to v_max vertices: closure of K1 under the three
/// extension moves, deduplicated by canonical form, sorted by
/// (vertices, edges, canonical form).
std::vector<Graph> enumerate_hm(int m, int v_max, int cap = 12,
                                Execution ex = Execution::Parallel);

struct MDecompositionStep {
    VertexSet vertices; ///< alive vertices (original labels) after this step
    MExtensionKind kind;
};

/// K1 = G_0 c G_1 c ... c G_t (type-1/2 steps), then optionally one final
/// type-3 step adding `final_added`. Prefix graphs are reconstructible:
/// G_i = (g - final_added) induced on steps[i-1].vertices.
struct MDecomposition {
    int start_vertex = 0;
    std::vector<MDecompositionStep> steps;
    std::vector<Edge> final_added;

    int t() const { return static_cast<int>(steps.size()); }
    /// Lemma hypothesis: t >= 2, or t = 1 with a proper final type-3 step.
    bool identity_hypothesis() const { return t() >= 2 || (t() == 1 && !final_added.empty()); }
};

/// One decomposition found by backtracking (reverse peeling), or nullopt if
/// g is not an H_m member within the cap.
std::optional<MDecomposition> m_decomposition(const Graph& g, int m, int cap = 12);

bool is_hm_member(const Graph& g, int m, int cap = 12);

/// Replays a decomposition bottom-up and checks every step against
/// classify_m_extension; used by the round-trip tests.
bool decomposition_valid(const Graph& g, int m, const MDecomposition& d);

struct EtaResult {
    long long n0 = 0;  ///< minimal n with m*n/((m-1)*n+1) > rho for all n >= n0
    long long eta = 0; ///< (m-1)*(n0+1)+1
};

/// The explicit small-subgraph bound: requires 1 < rho < m/(m-1) exactly.
EtaResult eta(const Rational& rho, int m);

/// Research mode, non-normative: the smallest eta that makes the
/// small-dense-subgraph property hold across the enumerable family up to
/// v_max vertices (the normative value is eta().eta).
std::optional<long long> min_eta_on_family(int m, const Rational& rho, int v_max);

struct DensityIdentityWitness {
    BigInt a, b;
};

/// Natural a, b with b <= m and rho^max(g) = 1 + 1/(m-1+b/a), exact.
/// Throws Error when no witness exists (that would falsify the identity).
DensityIdentityWitness verify_density_identity(const Graph& g, int m);

/// An induced subgraph on <= eta vertices with density > rho: tries the
/// supplied hint sets first, then degree peeling. Exact verification either
/// way; nullopt when the search fails.
std::optional<VertexSet> small_dense_subgraph(const Graph& g, const Rational& rho,
                                              long long eta_bound,
                                              const std::vector<VertexSet>& hints = {});

/// Seeded random H_m member with v in (v_min, v_max]; the recorded
/// decomposition doubles as the hint list for small_dense_subgraph.
struct RandomHmMember {
    Graph g;
    MDecomposition decomposition;
    std::vector<VertexSet> prefixes;
};
RandomHmMember random_hm_member(int m, int v_min, int v_max, std::uint64_t seed);

/// Does q contain a type-1 or type-2 m-extension of the induced subgraph on
/// w? (For singleton w only type-1 applies.) Witness = the extension's
/// vertex set when found.
std::optional<VertexSet> find_type12_extension(const Graph& q, const VertexSet& w, int m);

struct HmSubgraphAt {
    VertexSet vertices;
    Graph member; ///< host induced on `vertices`
};

/// An induced subgraph of host containing x that is an H_m member, with
/// maximum vertex count; ties broken by canonical form, then smallest
/// vertex set. Always succeeds: the single vertex {x} is a member.
HmSubgraphAt max_hm_subgraph_at(const Graph& host, int x, int m, int size_cap = 12,
                                long long search_cap = 200000);

} // namespace zolab
