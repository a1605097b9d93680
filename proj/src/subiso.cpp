#include "zolab/subiso.hpp"

#include <algorithm>

#include "zolab/graph_alg.hpp"

namespace zolab {

namespace {

// Order the free pattern vertices so each one (where possible) has an
// already-placed neighbor; keeps the candidate sets small.
std::vector<int> plan_order(const Graph& pattern, int root_count) {
    int pl = pattern.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(pl, false);
    for (int r = 0; r < root_count; ++r) placed[r] = true;
    auto pick = [&]() {
        int best = -1, best_anchors = -1, best_deg = -1;
        for (int v = 0; v < pl; ++v) {
            if (placed[v]) continue;
            int anchors = 0;
            for (int u : pattern.neighbors(v))
                if (placed[u]) ++anchors;
            int deg = pattern.degree(v);
            if (anchors > best_anchors || (anchors == best_anchors && deg > best_deg)) {
                best = v;
                best_anchors = anchors;
                best_deg = deg;
            }
        }
        return best;
    };
    for (int i = root_count; i < pl; ++i) {
        int v = pick();
        order.push_back(v);
        placed[v] = true;
    }
    return order;
}

struct Search {
    const Graph& host;
    const Graph& pattern;
    const EmbedSpec& spec;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> order;
    std::vector<int> image;      // pattern vertex -> host vertex, -1 unset
    std::vector<bool> host_used;
    bool stopped = false;

    bool feasible(int pv, int hv) const {
        if (host_used[hv]) return false;
        if (set_contains(spec.forbidden, hv)) return false;
        for (int pu = 0; pu < pattern.vertex_count(); ++pu) {
            int hu = image[pu];
            if (hu < 0 || pu == pv) continue;
            bool pe = pattern.has_edge(pu, pv);
            bool he = host.has_edge(hu, hv);
            if (spec.mode == EmbedMode::Subgraph) {
                if (pe && !he) return false;
            } else {
                bool both_roots = pu < spec.root_count && pv < spec.root_count;
                if (!both_roots && pe != he) return false;
            }
        }
        return true;
    }

    void run(size_t depth) {
        if (stopped) return;
        if (depth == order.size()) {
            if (!visit(image)) stopped = true;
            return;
        }
        int pv = order[depth];
        // candidates: neighbors of a placed pattern-neighbor when one
        // exists, otherwise every host vertex
        int anchor = -1;
        for (int pu : pattern.neighbors(pv))
            if (image[pu] >= 0) {
                if (anchor == -1 || host.degree(image[pu]) < host.degree(anchor))
                    anchor = image[pu];
            }
        if (anchor >= 0) {
            for (int hv : host.neighbors(anchor)) {
                if (!feasible(pv, hv)) continue;
                image[pv] = hv;
                host_used[hv] = true;
                run(depth + 1);
                host_used[hv] = false;
                image[pv] = -1;
                if (stopped) return;
            }
        } else {
            for (int hv = 0; hv < host.vertex_count(); ++hv) {
                if (!feasible(pv, hv)) continue;
                image[pv] = hv;
                host_used[hv] = true;
                run(depth + 1);
                host_used[hv] = false;
                image[pv] = -1;
                if (stopped) return;
            }
        }
    }
};

} // namespace

void enumerate_embeddings(const Graph& host, const Graph& pattern, const EmbedSpec& spec,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    int pl = pattern.vertex_count();
    if (spec.root_count < 0 || spec.root_count > pl)
        throw DomainError("embed: root count out of range");
    if (static_cast<int>(spec.root_images.size()) != spec.root_count)
        throw DomainError("embed: root image arity mismatch");
    if (pl - spec.root_count > host.vertex_count()) return;

    Search search{host, pattern, spec, visit};
    search.image.assign(pl, -1);
    search.host_used.assign(host.vertex_count(), false);
    for (int r = 0; r < spec.root_count; ++r) {
        int hv = spec.root_images[r];
        if (hv < 0 || hv >= host.vertex_count()) throw DomainError("embed: root image out of range");
        if (search.host_used[hv]) throw DomainError("embed: duplicate root image");
        search.image[r] = hv;
        search.host_used[hv] = true;
    }
    // root adjacency must already satisfy the constraint for root/root pairs
    // in Subgraph mode (ExactOffRoots leaves them free)
    if (spec.mode == EmbedMode::Subgraph) {
        for (int a = 0; a < spec.root_count; ++a)
            for (int b = a + 1; b < spec.root_count; ++b)
                if (pattern.has_edge(a, b) && !host.has_edge(spec.root_images[a], spec.root_images[b]))
                    return;
    }
    search.order = plan_order(pattern, spec.root_count);
    search.run(0);
}

bool contains_copy(const Graph& host, const Graph& pattern, int pattern_cap) {
    if (pattern.vertex_count() > pattern_cap)
        throw CapExceededError("contains_copy: pattern exceeds cap " + std::to_string(pattern_cap));
    if (pattern.vertex_count() == 0) return true;
    bool found = false;
    enumerate_embeddings(host, pattern, {}, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

std::optional<std::vector<int>> find_embedding(const Graph& host, const Graph& pattern,
                                               int pattern_cap) {
    if (pattern.vertex_count() > pattern_cap)
        throw CapExceededError("find_embedding: pattern exceeds cap " + std::to_string(pattern_cap));
    std::optional<std::vector<int>> result;
    enumerate_embeddings(host, pattern, {}, [&](const std::vector<int>& image) {
        result = image;
        return false;
    });
    return result;
}

std::uint64_t count_copies(const Graph& host, const Graph& pattern, int pattern_cap) {
    if (pattern.vertex_count() > pattern_cap)
        throw CapExceededError("count_copies: pattern exceeds cap " + std::to_string(pattern_cap));
    if (pattern.vertex_count() == 0) return 1;
    std::uint64_t homs = 0;
    enumerate_embeddings(host, pattern, {}, [&](const std::vector<int>&) {
        ++homs;
        return true;
    });
    return homs / automorphism_count(pattern, pattern.vertex_count());
}

} // namespace zolab
