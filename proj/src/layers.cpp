#include "plic/planar_ops.hpp"

namespace plic {

std::vector<int> bfs_layers(const Graph& g, int v0, int modulus) {
    if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
    if (v0 < 0 || v0 >= g.n()) throw std::out_of_range("root vertex");
    std::vector<int> res(g.n(), -1);
    for (const VList& comp : g.components()) {
        int root = vset_contains(comp, v0) ? v0 : comp[0];
        auto d = g.bfs_dist(root);
        for (int v : comp) res[v] = d[v] % modulus;
    }
    return res;
}

std::vector<VList> baker_slices(const Graph& g, int k) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    std::vector<int> res = g.n() == 0 ? std::vector<int>{} : bfs_layers(g, 0, k + 1);
    std::vector<VList> out(k + 1);
    for (int i = 0; i <= k; ++i) {
        for (int v = 0; v < g.n(); ++v)
            if (res[v] != i) out[i].push_back(v);
    }
    return out;
}

std::set<std::pair<int, int>> bfs_tree(const Graph& g, int root) {
    std::set<std::pair<int, int>> out;
    std::vector<int> par(g.n(), -2);
    std::vector<int> q{root};
    par[root] = -1;
    for (std::size_t h = 0; h < q.size(); ++h) {
        int u = q[h];
        for (int v : g.neighbors(u))
            if (par[v] == -2) {
                par[v] = u;
                out.insert({std::min(u, v), std::max(u, v)});
                q.push_back(v);
            }
    }
    return out;
}

}  // namespace plic
