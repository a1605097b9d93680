#include "zolab/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace zolab {

void MaxFlow::add_edge(int from, int to, long long cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
}

bool MaxFlow::build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::deque<int> queue{source};
    level_[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int a = head_[v]; a != -1; a = arcs_[a].next) {
            if (arcs_[a].cap > 0 && level_[arcs_[a].to] == -1) {
                level_[arcs_[a].to] = level_[v] + 1;
                queue.push_back(arcs_[a].to);
            }
        }
    }
    return level_[sink] != -1;
}

long long MaxFlow::augment(int v, int sink, long long limit) {
    if (v == sink) return limit;
    for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
        Arc& arc = arcs_[a];
        if (arc.cap > 0 && level_[arc.to] == level_[v] + 1) {
            long long pushed = augment(arc.to, sink, std::min(limit, arc.cap));
            if (pushed > 0) {
                arc.cap -= pushed;
                arcs_[a ^ 1].cap += pushed;
                return pushed;
            }
        }
    }
    level_[v] = -1;
    return 0;
}

long long MaxFlow::run(int source, int sink) {
    long long flow = 0;
    while (build_levels(source, sink)) {
        iter_ = head_;
        while (long long pushed = augment(source, sink, std::numeric_limits<long long>::max()))
            flow += pushed;
    }
    return flow;
}

std::vector<bool> MaxFlow::min_cut_side(int source) const {
    std::vector<bool> side(head_.size(), false);
    std::deque<int> queue{source};
    side[source] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int a = head_[v]; a != -1; a = arcs_[a].next)
            if (arcs_[a].cap > 0 && !side[arcs_[a].to]) {
                side[arcs_[a].to] = true;
                queue.push_back(arcs_[a].to);
            }
    }
    return side;
}

} // namespace zolab
