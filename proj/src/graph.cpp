#include "plic/graph.hpp"

#include <queue>
#include <stdexcept>

namespace plic {

void Graph::reset(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    n_ = n;
    m_ = 0;
    adj_.assign(n, {});
    bits_.assign(n, std::vector<std::uint64_t>((n + 63) / 64, 0));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint");
    if (u == v) throw std::invalid_argument("self loop");
    if (has_edge(u, v)) throw std::invalid_argument("multi edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    bits_[u][v >> 6] |= 1ULL << (v & 63);
    bits_[v][u >> 6] |= 1ULL << (u & 63);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    return (bits_[u][v >> 6] >> (v & 63)) & 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

Graph Graph::induced(const VList& verts, std::vector<int>* new_to_old) const {
    std::vector<int> old_to_new(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) old_to_new[verts[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(verts.size()));
    for (int u : verts)
        for (int v : adj_[u])
            if (old_to_new[v] >= 0 && u < v) g.add_edge(old_to_new[u], old_to_new[v]);
    if (new_to_old) *new_to_old = verts;
    return g;
}

std::vector<int> Graph::bfs_dist(int src, const VList* within) const {
    std::vector<int> dist(n_, -1);
    std::vector<char> ok(n_, within == nullptr);
    if (within)
        for (int v : *within) ok[v] = 1;
    if (!ok[src]) return dist;
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u])
            if (ok[v] && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    auto d = bfs_dist(0);
    for (int v = 0; v < n_; ++v)
        if (d[v] < 0) return false;
    return true;
}

std::vector<VList> Graph::components() const {
    std::vector<VList> out;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        VList comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : adj_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

VList Graph::component_of(int v) const {
    auto d = bfs_dist(v);
    VList out;
    for (int u = 0; u < n_; ++u)
        if (d[u] >= 0) out.push_back(u);
    return out;
}

bool Graph::is_connected_subset(const VList& verts) const {
    if (verts.empty()) return true;
    auto d = bfs_dist(verts[0], &verts);
    for (int v : verts)
        if (d[v] < 0) return false;
    return true;
}

std::vector<VList> Graph::components_within(const VList& verts) const {
    std::vector<VList> out;
    std::vector<char> seen(n_, 1);
    for (int v : verts) seen[v] = 0;
    for (int s : verts) {
        if (seen[s]) continue;
        VList comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : adj_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Pattern::Pattern(const Graph& gg) : g(gg), k(gg.n()) {
    if (k > kMaxPatternVerts) throw std::invalid_argument("pattern too large");
    adj.assign(k, 0);
    for (int u = 0; u < k; ++u)
        for (int v : g.neighbors(u)) adj[u] |= Mask(1) << v;
}

Mask Pattern::boundary(Mask X) const {
    Mask out = 0;
    Mask rest = full() & ~X;
    for (Mask m = X; m;) {
        int v = lowbit_index(m);
        m &= m - 1;
        if (adj[v] & rest) out |= Mask(1) << v;
    }
    return out;
}

bool Pattern::no_edges_between(Mask A, Mask B) const {
    for (Mask m = A; m;) {
        int v = lowbit_index(m);
        m &= m - 1;
        if (adj[v] & B) return false;
    }
    return true;
}

std::vector<Mask> Pattern::component_masks() const {
    return component_masks_within(full());
}

std::vector<Mask> Pattern::component_masks_within(Mask X) const {
    std::vector<Mask> out;
    Mask seen = 0;
    for (Mask m = X; m;) {
        int s = lowbit_index(m);
        m &= m - 1;
        if ((seen >> s) & 1) continue;
        Mask comp = Mask(1) << s;
        Mask frontier = comp;
        while (frontier) {
            int v = lowbit_index(frontier);
            frontier &= frontier - 1;
            Mask nb = adj[v] & X & ~comp;
            comp |= nb;
            frontier |= nb;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool Digraph::has_arc(int u, int v) const {
    for (auto& a : arcs)
        if (a.first == u && a.second == v) return true;
    return false;
}

Graph Digraph::underlying() const {
    Graph g(n);
    for (auto& a : arcs)
        if (!g.has_edge(a.first, a.second)) g.add_edge(a.first, a.second);
    return g;
}

}  // namespace plic
