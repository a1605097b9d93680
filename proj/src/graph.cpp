#include "zolab/graph.hpp"

#include <algorithm>
#include <sstream>

namespace zolab {

std::vector<Edge> normalize_edges(int n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw DomainError("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw DomainError("multi-edge (" + std::to_string(dup->first) + "," +
                          std::to_string(dup->second) + ")");
    return edges;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
    edges_ = normalize_edges(n, std::move(edges));
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::empty_graph(int n) { return Graph(n, {}); }

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw DomainError("cycle needs >= 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
    if (n < 1) throw DomainError("path needs >= 1 vertex");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, std::move(es));
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

Graph Graph::induced(const VertexSet& vs) const {
    std::vector<int> pos(n_, -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        if (v < 0 || v >= n_) throw DomainError("induced: vertex out of range");
        if (pos[v] != -1) throw DomainError("induced: duplicate vertex");
        pos[v] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
        if (pos[u] != -1 && pos[v] != -1) es.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<int>(vs.size()), std::move(es));
}

Graph Graph::with_vertices(int extra) const {
    if (extra < 0) throw DomainError("negative vertex extension");
    return Graph(n_ + extra, edges_);
}

Graph Graph::with_edge(int u, int v) const {
    auto es = edges_;
    es.emplace_back(u, v);
    return Graph(n_, std::move(es));
}

Graph Graph::with_edges(const std::vector<Edge>& extra) const {
    auto es = edges_;
    es.insert(es.end(), extra.begin(), extra.end());
    return Graph(n_, std::move(es));
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto es = edges_;
    auto it = std::find(es.begin(), es.end(), Edge{u, v});
    if (it == es.end()) throw DomainError("edge not present");
    es.erase(it);
    return Graph(n_, std::move(es));
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw DomainError("relabel: size mismatch");
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (auto [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
    return Graph(n_, std::move(es));
}

Graph Graph::from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    long long n = -1;
    if (!(in >> n) || n < 0) throw ParseError("edge list: missing vertex count");
    std::vector<Edge> es;
    long long u, v;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("edge list: dangling endpoint");
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph(static_cast<int>(n), std::move(es));
    } catch (const DomainError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string Graph::to_edge_list_text() const {
    std::ostringstream out;
    out << n_ << "\n";
    for (auto [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
}

// graph6: 6-bit groups biased by 63; the size field is 1 byte for n <= 62,
// else 0x7e followed by 18 bits in 3 bytes; adjacency bits are the upper
// triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
std::string Graph::to_graph6() const {
    if (n_ > 258047) throw DomainError("graph6: n too large");
    std::string out;
    if (n_ <= 62) {
        out.push_back(static_cast<char>(n_ + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n_ >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n_ >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n_ & 63) + 63));
    }
    int bit = 5;
    char cur = 0;
    for (int v = 1; v < n_; ++v) {
        for (int u = 0; u < v; ++u) {
            if (has_edge(u, v)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (n_ > 1 && bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph Graph::from_graph6(const std::string& g6) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (g6.size() < pos + k) throw ParseError("graph6: truncated");
    };
    need(1);
    long long n;
    if (static_cast<unsigned char>(g6[pos]) == 126) {
        ++pos;
        need(3);
        n = 0;
        for (int i = 0; i < 3; ++i) {
            int c = static_cast<unsigned char>(g6[pos++]) - 63;
            if (c < 0 || c > 63) throw ParseError("graph6: bad size byte");
            n = (n << 6) | c;
        }
    } else {
        n = static_cast<unsigned char>(g6[pos++]) - 63;
        if (n < 0 || n > 62) throw ParseError("graph6: bad size byte");
    }
    long long bits_needed = n * (n - 1) / 2;
    long long bytes_needed = (bits_needed + 5) / 6;
    need(static_cast<size_t>(bytes_needed));
    std::vector<Edge> es;
    long long idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            int c = static_cast<unsigned char>(g6[pos + idx / 6]) - 63;
            if (c < 0 || c > 63) throw ParseError("graph6: bad data byte");
            if ((c >> (5 - idx % 6)) & 1) es.emplace_back(u, v);
        }
    }
    return Graph(static_cast<int>(n), std::move(es));
}

bool is_vertex_set(const Graph& g, const VertexSet& vs) {
    if (!std::is_sorted(vs.begin(), vs.end())) return false;
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    return vs.empty() || (vs.front() >= 0 && vs.back() < g.vertex_count());
}

VertexSet full_vertex_set(const Graph& g) {
    VertexSet vs(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) vs[i] = i;
    return vs;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.empty();
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace zolab
