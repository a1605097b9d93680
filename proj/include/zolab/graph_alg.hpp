#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zolab/graph.hpp"
#include "zolab/rational.hpp"

namespace zolab {

/// e(g)/v(g) as an exact rational. Empty graph is a domain error.
Rational density(const Graph& g);

/// Shortest-path length (edge count) from x to any vertex of w; nullopt if
/// unreachable. Requires x not in w.
std::optional<int> distance(const Graph& q, int x, const VertexSet& w);

/// min over x in w1 of distance(q, x, w2); w1 and w2 must be disjoint.
std::optional<int> set_distance(const Graph& q, const VertexSet& w1, const VertexSet& w2);

/// All-vertex BFS distances from the set `from` (-1 = unreachable).
std::vector<int> bfs_distances(const Graph& g, const VertexSet& from);

/// Exact order of the automorphism group by backtracking over
/// adjacency-preserving bijections. Cap guards the exponential worst case.
std::uint64_t automorphism_count(const Graph& g, int cap = 12);

/// Automorphisms fixing vertices 0..fixed_prefix-1 pointwise.
std::uint64_t automorphism_count_fixing_prefix(const Graph& g, int fixed_prefix, int cap = 12);

/// Canonical byte string: equal iff graphs are isomorphic (respecting the
/// optional vertex coloring, which any isomorphism must preserve).
/// Refinement + backtracking individualization; minimum over leaves.
std::vector<std::uint8_t> canonical_form(const Graph& g,
                                         const std::vector<int>* colors = nullptr,
                                         int cap = 12);

/// canonical_form serialized as lowercase hex.
std::string canonical_hex(const Graph& g, const std::vector<int>* colors = nullptr, int cap = 12);

/// Vertex permutation realizing the canonical labeling (vertex v -> position
/// canon[v]); same backtracking as canonical_form.
std::vector<int> canonical_labeling(const Graph& g,
                                    const std::vector<int>* colors = nullptr,
                                    int cap = 12);

bool connected(const Graph& g);

/// One representative per isomorphism class of graphs on exactly n vertices
/// (n <= 6), deterministic order.
std::vector<Graph> nonisomorphic_graphs(int n);

} // namespace zolab
