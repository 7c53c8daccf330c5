#include <algorithm>
#include <set>

#include "plic/plane_graph.hpp"

namespace plic {

PlaneGraph triangulate(const PlaneGraph& g0) {
    if (!g0.graph().connected()) throw std::invalid_argument("triangulate requires a connected graph");

    Graph g = g0.graph();
    std::vector<std::vector<int>> rot(g.n());
    for (int v = 0; v < g.n(); ++v) rot[v] = g0.rotation(v);
    std::set<std::pair<int, int>> delta = g0.delta();

    // anchor the outer face by one of its darts so rebuilds keep it
    std::optional<Dart> outer;
    if (g0.outer_face() >= 0 && !g0.face_darts(g0.outer_face()).empty())
        outer = g0.face_darts(g0.outer_face())[0];

    auto insert_after = [&](int v, int anchor, int nb) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), anchor);
        r.insert(it + 1, nb);
    };

    while (true) {
        PlaneGraph pg(g, rot, outer);
        int target = -1;
        for (int f = 0; f < pg.face_count(); ++f) {
            if (pg.face_is_outer(f)) continue;
            if (pg.face_darts(f).size() > 3) {
                target = f;
                break;
            }
        }
        if (target < 0) {
            PlaneGraph out(std::move(g), std::move(rot), outer);
            out.set_delta(std::move(delta));
            out.set_labels(g0.labels());
            return out;
        }
        const auto walk = pg.face_darts(target);
        int t = static_cast<int>(walk.size());

        // chord candidates ordered fan-first from the smallest face vertex
        std::vector<int> order(t);
        for (int i = 0; i < t; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return walk[a].u < walk[b].u; });

        bool added = false;
        for (int oi = 0; oi < t && !added; ++oi) {
            int i = order[oi];
            int a = walk[i].u;
            for (int d = 2; d <= t - 2 && !added; ++d) {
                int j = (i + d) % t;
                int b = walk[j].u;
                if (a == b || g.has_edge(a, b)) continue;
                insert_after(a, walk[(i - 1 + t) % t].u, b);
                insert_after(b, walk[(j - 1 + t) % t].u, a);
                g.add_edge(a, b);
                delta.insert({std::min(a, b), std::max(a, b)});
                added = true;
            }
        }
        if (!added) throw std::runtime_error("triangulation stuck on a chordless face walk");
    }
}

}  // namespace plic
