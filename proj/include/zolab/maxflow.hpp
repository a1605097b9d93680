#pragma once

#include <cstdint>
#include <vector>

namespace zolab {

/// Dinic max-flow on int64 capacities. Small and exact; used by the
/// parametric densest-subgraph search.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : head_(nodes, -1) {}

    void add_edge(int from, int to, long long cap);
    long long run(int source, int sink);

    /// Nodes reachable from `source` in the residual network of the last run
    /// (the minimal min-cut source side).
    std::vector<bool> min_cut_side(int source) const;

private:
    struct Arc {
        int to;
        int next;
        long long cap;
    };
    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;

    bool build_levels(int source, int sink);
    long long augment(int v, int sink, long long limit);
};

} // namespace zolab
