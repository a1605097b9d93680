#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zolab/graph.hpp"

namespace zolab {

/// How pattern adjacency constrains the host image.
enum class EmbedMode {
    /// pattern edge => host edge (plain subgraph embedding)
    Subgraph,
    /// for every pattern pair with at least one endpoint outside the fixed
    /// root prefix: pattern edge <=> host edge. Root-root pairs are free.
    ExactOffRoots,
};

struct EmbedSpec {
    EmbedMode mode = EmbedMode::Subgraph;
    /// Pattern vertices 0..root_count-1 are pre-mapped to root_images.
    int root_count = 0;
    std::vector<int> root_images;
    /// Host vertices the non-root image must avoid (sorted).
    VertexSet forbidden;
};

/// Enumerates injective maps pattern -> host satisfying the spec, in
/// lexicographic order of the image tuple of non-root pattern vertices.
/// The visitor returns false to stop the enumeration.
void enumerate_embeddings(const Graph& host, const Graph& pattern, const EmbedSpec& spec,
                          const std::function<bool(const std::vector<int>&)>& visit);

/// Host contains a (not necessarily induced) subgraph isomorphic to pattern.
bool contains_copy(const Graph& host, const Graph& pattern, int pattern_cap = 8);

/// First embedding in enumeration order, if any (plain subgraph mode).
std::optional<std::vector<int>> find_embedding(const Graph& host, const Graph& pattern,
                                               int pattern_cap = 8);

/// Number of subgraphs of host isomorphic to pattern, counted as distinct
/// (vertex set, edge set) copies: injective homomorphisms / |Aut(pattern)|.
std::uint64_t count_copies(const Graph& host, const Graph& pattern, int pattern_cap = 8);

} // namespace zolab
