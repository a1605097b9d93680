#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zolab/graph.hpp"
#include "zolab/rational.hpp"

namespace zolab {

/// A pair H < G: roots are vertices 0..root_count-1 of g, H is the induced
/// subgraph on the roots. v(G,H) = non-root count, e(G,H) = non-root edges.
struct RootedPair {
    Graph g;
    int root_count = 0;

    RootedPair() = default;
    RootedPair(Graph graph, int roots);

    int extra_vertices() const { return g.vertex_count() - root_count; }
    int extra_edges() const;
    Graph root_graph() const;

    bool operator==(const RootedPair&) const = default;
};

/// Common small pairs used throughout the tests and experiments.
RootedPair pendant_edge_pair();              // 1 root, 1 new vertex, 1 edge
RootedPair pendant_path_pair(int len);       // 1 root, path of `len` edges
RootedPair common_neighbor_pair();           // 2 roots, 1 new vertex joined to both
RootedPair connecting_path_pair(int inner);  // 2 roots joined by a path of `inner` new vertices

enum class PairClass { Safe, Rigid, Neutral, None };

struct PairClassification {
    bool safe = false;
    bool rigid = false;
    bool neutral = false;
    PairClass primary() const {
        if (safe) return PairClass::Safe;
        if (rigid) return PairClass::Rigid;
        if (neutral) return PairClass::Neutral;
        return PairClass::None;
    }
};

/// f_alpha(G,H) = v(G,H) - alpha * e(G,H), exact. Requires 0 < alpha <= 1.
Rational f_alpha(const RootedPair& pair, const Rational& alpha);

/// f_alpha for the sub-pair induced on roots + the given extra vertex subset.
Rational f_alpha_subset(const RootedPair& pair, const VertexSet& extra, const Rational& alpha);

/// Safe / rigid / neutral flags at alpha. The quantifier runs over all
/// subgraphs S between H and G (any vertex subset containing the roots with
/// any available edge subset); monotonicity in the edge set reduces the
/// sweep to vertex subsets with induced edges.
PairClassification classify_pair(const RootedPair& pair, const Rational& alpha, int cap = 10);

/// Number of (l-k)-subsets W of host vertices such that some numbering of W
/// makes host restricted to roots+W a (G,H)-extension of the root graph
/// (exact: off-root adjacency mirrored exactly). 0/1 per subset.
std::uint64_t count_extensions(const Graph& host, const RootedPair& pair,
                               const std::vector<int>& roots, bool exact);

/// The W-subsets themselves, sorted (deterministic).
std::vector<VertexSet> extension_witnesses(const Graph& host, const RootedPair& pair,
                                           const std::vector<int>& roots, bool exact);

/// (K,T)-maximality of (gtilde, htilde) in host: no size-|T| subset Ttilde
/// of gtilde (not inside htilde; pair variant) has an exact (K,T)-extension
/// avoiding gtilde whose new vertices also have no host edges into
/// gtilde \ Ttilde. graph_level drops the "not inside htilde" restriction.
bool is_maximal(const Graph& host, const VertexSet& gtilde, const VertexSet& htilde,
                const RootedPair& kt, bool graph_level = false);

/// Exact (G,H)-extensions at the given roots that are (K,T)-maximal in host.
/// Warns (returns flag) when kt is not rigid at alpha, when alpha is given.
struct MaximalCountResult {
    std::uint64_t count = 0;
    bool rigidity_warning = false;
};
MaximalCountResult count_maximal_extensions(const Graph& host, const RootedPair& pair,
                                            const std::vector<int>& roots, const RootedPair& kt,
                                            const std::optional<Rational>& alpha = std::nullopt);

/// Early-exit variant: some exact (G,H)-extension at the roots is maximal
/// with respect to every pair in kts simultaneously.
bool exists_maximal_extension(const Graph& host, const RootedPair& pair,
                              const std::vector<int>& roots,
                              const std::vector<RootedPair>& kts);

/// Theta-scale N^{f_alpha} plus the exact first-moment count
/// (N-k)(N-k-1)...(N-l+1) * p^{e(G,H)} / |Aut(G) fixing roots pointwise|.
struct ExtensionScale {
    double theta_scale = 0;
    double first_moment = 0;
};
ExtensionScale expected_extension_scale(long long n, const Rational& alpha,
                                        const RootedPair& pair);

/// All rooted pairs with v(G) <= max_vertices and the given root count, up
/// to pair isomorphism (roots colored as a set), deterministic order.
std::vector<RootedPair> enumerate_pairs(int max_vertices, int root_count);

/// The subset of enumerate_pairs classified with the given primary class.
std::vector<RootedPair> enumerate_pairs_with_class(int max_vertices, int root_count,
                                                   const Rational& alpha, PairClass wanted);

} // namespace zolab
