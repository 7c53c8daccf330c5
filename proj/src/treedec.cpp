#include <set>

#include "plic/planar_ops.hpp"

namespace plic {

int TreeDecomposition::width() const {
    int w = 0;
    for (const auto& b : bags) w = std::max<int>(w, static_cast<int>(b.size()));
    return w - 1;
}

void validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    int nb = static_cast<int>(td.bags.size());
    if (static_cast<int>(td.parent.size()) != nb) throw std::runtime_error("parent size mismatch");
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& b : td.bags)
            if (vset_contains(b, u) && vset_contains(b, v)) {
                covered = true;
                break;
            }
        if (!covered) throw std::runtime_error("tree decomposition misses an edge");
    }
    // bags containing v must form a subtree
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> holders;
        for (int b = 0; b < nb; ++b)
            if (vset_contains(td.bags[b], v)) holders.push_back(b);
        if (holders.empty()) throw std::runtime_error("vertex missing from all bags");
        std::set<int> hs(holders.begin(), holders.end());
        int roots = 0;
        for (int b : holders) {
            int p = td.parent[b];
            if (p < 0 || !hs.count(p)) ++roots;
        }
        if (roots != 1) throw std::runtime_error("vertex trace not connected");
    }
}

TreeDecomposition tree_decomposition_of(const Graph& g) {
    int n = g.n();
    TreeDecomposition td;
    if (n == 0) {
        td.bags = {{}};
        td.parent = {-1};
        return td;
    }
    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v].insert(u);

    std::vector<char> gone(n, 0);
    std::vector<int> order;
    std::vector<VList> bag_of(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long fill = 0;
            for (int a : adj[v])
                for (int b : adj[v])
                    if (a < b && !adj[a].count(b)) ++fill;
            if (best < 0 || fill < best_fill ||
                (fill == best_fill && adj[v].size() < adj[best].size())) {
                best = v;
                best_fill = fill;
            }
        }
        VList bag{best};
        for (int u : adj[best]) bag.push_back(u);
        bag_of[best] = vset_sorted(bag);
        order.push_back(best);
        for (int a : adj[best])
            for (int b : adj[best])
                if (a != b) adj[a].insert(b);
        for (int a : adj[best]) adj[a].erase(best);
        adj[best].clear();
        gone[best] = 1;
    }
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    td.bags.resize(n);
    td.parent.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        td.bags[i] = bag_of[v];
        int nxt = -1;
        for (int u : bag_of[v])
            if (u != v && rank[u] > i && (nxt < 0 || rank[u] < rank[nxt])) nxt = u;
        if (nxt >= 0) td.parent[i] = rank[nxt];
    }
    int root = n - 1;
    for (int i = 0; i < n - 1; ++i)
        if (td.parent[i] < 0) td.parent[i] = root;
    td.parent[root] = -1;
    validate_tree_decomposition(g, td);
    return td;
}

TreeDecomposition tree_decomposition_kouterplanar(const PlaneGraph& g) {
    return tree_decomposition_of(g.graph());
}

}  // namespace plic
