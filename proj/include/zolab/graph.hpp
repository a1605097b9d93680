#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zolab/errors.hpp"

namespace zolab {

/// Sorted, duplicate-free vertex ids. Always a subset of 0..n-1 of its host.
using VertexSet = std::vector<int>;

using Edge = std::pair<int, int>; // normalized u < v

/// Finite simple undirected graph on labeled vertices 0..n-1.
/// Immutable value type; no loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    static Graph empty_graph(int n);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n); // n vertices, n-1 edges

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Induced subgraph; vertex i of the result is vs[i].
    Graph induced(const VertexSet& vs) const;

    /// Copy with extra vertices appended (keeps existing labels).
    Graph with_vertices(int extra) const;
    /// Copy with one more edge. Throws on duplicates.
    Graph with_edge(int u, int v) const;
    /// Copy with several edges added at once.
    Graph with_edges(const std::vector<Edge>& extra) const;
    /// Copy with one edge removed. Throws if absent.
    Graph without_edge(int u, int v) const;
    /// Relabeled copy: vertex v becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    /// Labeled equality (same n, same edge set).
    bool operator==(const Graph& other) const = default;

    // --- external interfaces ---

    /// "n\nu v"-per-line text (first line = vertex count, 0-based endpoints).
    static Graph from_edge_list_text(const std::string& text);
    std::string to_edge_list_text() const;

    /// Standard graph6 encoding (bit-exact), n <= 258047.
    static Graph from_graph6(const std::string& g6);
    std::string to_graph6() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, normalized
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

/// Normalizes, validates and sorts an edge list for vertex count n.
std::vector<Edge> normalize_edges(int n, std::vector<Edge> edges);

bool is_vertex_set(const Graph& g, const VertexSet& vs);
VertexSet full_vertex_set(const Graph& g);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, int v);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

} // namespace zolab
