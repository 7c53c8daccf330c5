#include <queue>

#include "plic/planar_ops.hpp"

namespace plic {

void validate_cycle(const PlaneGraph& g, const Cycle& c) {
    int l = c.size();
    if (l < 3) throw std::invalid_argument("cycle too short");
    std::vector<char> seen(g.n(), 0);
    for (int v : c.verts) {
        if (v < 0 || v >= g.n() || seen[v]) throw std::invalid_argument("cycle not simple");
        seen[v] = 1;
    }
    for (int i = 0; i < l; ++i)
        if (!g.graph().has_edge(c.verts[i], c.verts[(i + 1) % l]))
            throw std::invalid_argument("cycle uses a non-edge");
}

Cycle fundamental_cycle(const Graph& g, const std::set<std::pair<int, int>>& tree_edges,
                        std::pair<int, int> nontree_edge) {
    auto [eu, ev] = nontree_edge;
    auto norm = std::make_pair(std::min(eu, ev), std::max(eu, ev));
    if (tree_edges.count(norm)) throw std::invalid_argument("edge already in the tree");
    if (!g.has_edge(eu, ev)) throw std::invalid_argument("nontree edge missing from graph");

    // path eu -> ev through tree edges
    std::vector<int> par(g.n(), -2);
    std::queue<int> q;
    par[eu] = -1;
    q.push(eu);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == ev) break;
        for (int v : g.neighbors(u)) {
            if (par[v] != -2) continue;
            if (!tree_edges.count({std::min(u, v), std::max(u, v)})) continue;
            par[v] = u;
            q.push(v);
        }
    }
    if (par[ev] == -2) throw std::invalid_argument("spanning tree does not connect edge endpoints");
    Cycle c;
    for (int w = ev; w != -1; w = par[w]) c.verts.push_back(w);
    return c;
}

CycleSides cycle_sides(const PlaneGraph& g, const Cycle& c) {
    validate_cycle(g, c);
    int l = c.size();
    std::set<std::pair<int, int>> cyc_edges;
    std::vector<char> on_cycle(g.n(), 0);
    for (int i = 0; i < l; ++i) {
        int u = c.verts[i], v = c.verts[(i + 1) % l];
        cyc_edges.insert({std::min(u, v), std::max(u, v)});
        on_cycle[u] = 1;
    }

    // dual reachability from the outer faces, not crossing cycle edges
    std::vector<char> outside(g.face_count(), 0);
    std::queue<int> q;
    for (int comp = 0; comp < g.component_count(); ++comp) {
        int f = g.outer_face_of_component(comp);
        if (f >= 0 && !outside[f]) {
            outside[f] = 1;
            q.push(f);
        }
    }
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (const Dart& d : g.face_darts(f)) {
            if (cyc_edges.count({std::min(d.u, d.v), std::max(d.u, d.v)})) continue;
            int f2 = g.face_of(d.v, d.u);
            if (!outside[f2]) {
                outside[f2] = 1;
                q.push(f2);
            }
        }
    }

    CycleSides out;
    out.face_inside.assign(g.face_count(), 0);
    for (int f = 0; f < g.face_count(); ++f) out.face_inside[f] = !outside[f];

    std::vector<char> inside_v(g.n(), 0), outside_v(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (on_cycle[v]) {
            inside_v[v] = outside_v[v] = 1;
            continue;
        }
        if (g.graph().degree(v) == 0) {
            outside_v[v] = 1;  // isolated vertices sit in the outer region
            continue;
        }
        bool any_in = false, any_out = false;
        for (int u : g.rotation(v)) {
            int f = g.face_of(v, u);
            (out.face_inside[f] ? any_in : any_out) = true;
        }
        if (any_in && any_out) throw std::runtime_error("vertex straddles the cycle");
        (any_in ? inside_v : outside_v)[v] = 1;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (inside_v[v]) out.interior.push_back(v);
        if (outside_v[v]) out.exterior.push_back(v);
        if (inside_v[v] && !on_cycle[v]) out.strict_interior.push_back(v);
        if (outside_v[v] && !on_cycle[v]) out.strict_exterior.push_back(v);
    }
    return out;
}

PlaneGraph extract_side(const PlaneGraph& g, const Cycle& c, bool interior) {
    CycleSides s = cycle_sides(g, c);
    const VList& keep = interior ? s.interior : s.exterior;
    // hint: a cycle dart whose face lies on the removed side becomes the walk
    // of the new outer face
    int l = c.size();
    std::optional<Dart> hint;
    for (int i = 0; i < l && !hint; ++i) {
        int u = c.verts[i], v = c.verts[(i + 1) % l];
        bool fi = s.face_inside[g.face_of(u, v)];
        if (interior ? !fi : fi) hint = Dart{u, v};
        else {
            fi = s.face_inside[g.face_of(v, u)];
            if (interior ? !fi : fi) hint = Dart{v, u};
        }
    }
    if (!hint) throw std::runtime_error("cycle has no dart facing the removed side");
    if (interior) {
        // drop exterior components entirely: restrict to the cycle component
        VList comp = g.graph().component_of(c.verts[0]);
        return g.subgraph(vset_intersect(keep, comp), hint);
    }
    return g.subgraph(keep, hint);
}

}  // namespace plic
