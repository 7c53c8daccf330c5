#include <algorithm>
#include <map>
#include <sstream>

#include "plic/catalog.hpp"

namespace plic {

namespace {

// refine classes until stable: signature = (class, sorted neighbor classes)
std::vector<int> refine(const Graph& g, std::vector<int> cls) {
    int n = g.n();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.degree(v));
            for (int u : g.neighbors(v)) nb.push_back(cls[u]);
            std::sort(nb.begin(), nb.end());
            nb.insert(nb.begin(), cls[v]);
            sig[v] = {std::move(nb), v};
        }
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a].first < sig[b].first; });
        std::vector<int> ncls(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++c;
            ncls[order[i]] = c;
        }
        if (ncls == cls) return cls;
        cls = std::move(ncls);
    }
}

std::string leaf_string(const Graph& g, const std::vector<long>& colors,
                        const std::vector<int>& cls) {
    int n = g.n();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return cls[a] < cls[b]; });
    std::ostringstream s;
    for (int i = 0; i < n; ++i) s << colors[order[i]] << ',';
    s << '|';
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(order[i], order[j])) s << i << '-' << j << ';';
    return s.str();
}

void search(const Graph& g, const std::vector<long>& colors, std::vector<int> cls,
            std::string& best, bool& have) {
    cls = refine(g, cls);
    int n = g.n();
    int cell = -1;
    for (int c = 0;; ++c) {
        int cnt = 0;
        bool found = false;
        for (int v = 0; v < n; ++v)
            if (cls[v] == c) {
                ++cnt;
                found = true;
            }
        if (!found) break;
        if (cnt > 1) {
            cell = c;
            break;
        }
    }
    if (cell < 0) {
        std::string s = leaf_string(g, colors, cls);
        if (!have || s < best) {
            best = std::move(s);
            have = true;
        }
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (cls[v] != cell) continue;
        std::vector<int> next(n);
        for (int u = 0; u < n; ++u) next[u] = 2 * cls[u] + (u == v ? 0 : 1);
        search(g, colors, std::move(next), best, have);
    }
}

}  // namespace

std::string canonize(const ColoredGraph& cg) {
    int n = cg.g.n();
    if (static_cast<int>(cg.colors.size()) != n) throw std::invalid_argument("color size mismatch");
    // initial classes by color value rank; the color multiset prefixes the
    // string so distinct palettes never collide
    std::vector<long> sorted_cols = cg.colors;
    std::sort(sorted_cols.begin(), sorted_cols.end());
    std::ostringstream prefix;
    prefix << n << ':';
    for (long c : sorted_cols) prefix << c << ',';
    prefix << '#';

    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v)
        cls[v] = static_cast<int>(std::lower_bound(sorted_cols.begin(), sorted_cols.end(),
                                                   cg.colors[v]) -
                                  sorted_cols.begin());
    std::string best;
    bool have = false;
    search(cg.g, cg.colors, std::move(cls), best, have);
    return prefix.str() + best;
}

bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
    return canonize(a) == canonize(b);
}

}  // namespace plic
