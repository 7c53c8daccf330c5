#include "plic/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace plic {

namespace {
std::int64_t dart_key(int u, int v) { return (std::int64_t(u) << 32) | std::uint32_t(v); }
}  // namespace

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<int>> rot, std::optional<Dart> outer_hint)
    : g_(std::move(g)), rot_(std::move(rot)) {
    int n = g_.n();
    if (static_cast<int>(rot_.size()) != n) throw std::invalid_argument("rotation size mismatch");
    pos_.resize(n);
    for (int v = 0; v < n; ++v) {
        if (rot_[v].size() != g_.neighbors(v).size())
            throw std::invalid_argument("rotation arity mismatch");
        for (std::size_t i = 0; i < rot_[v].size(); ++i) {
            int u = rot_[v][i];
            if (!g_.has_edge(u, v)) throw std::invalid_argument("rotation lists non-edge");
            if (pos_[v].count(u)) throw std::invalid_argument("duplicate rotation entry");
            pos_[v][u] = static_cast<int>(i);
        }
    }
    label_.resize(n);
    std::iota(label_.begin(), label_.end(), 0);

    // components
    comp_of_.assign(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp_of_[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp_of_[s] = nc;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g_.neighbors(u))
                if (comp_of_[w] < 0) {
                    comp_of_[w] = nc;
                    q.push(w);
                }
        }
        ++nc;
    }
    comp_outer_.assign(nc, -1);

    build_faces(outer_hint);
    validate();
}

void PlaneGraph::build_faces(std::optional<Dart> outer_hint) {
    faces_.clear();
    dart_face_.clear();
    int n = g_.n();
    for (int u = 0; u < n; ++u) {
        for (int v : rot_[u]) {
            if (dart_face_.count(dart_key(u, v))) continue;
            std::vector<Dart> walk;
            int a = u, b = v;
            do {
                walk.push_back({a, b});
                dart_face_[dart_key(a, b)] = static_cast<int>(faces_.size());
                int i = pos_[b].at(a);
                int deg = static_cast<int>(rot_[b].size());
                int c = rot_[b][(i + 1) % deg];
                a = b;
                b = c;
            } while (!(a == u && b == v));
            faces_.push_back(std::move(walk));
        }
    }
    // isolated-vertex components own a single conceptual face; represent it
    // as an empty walk so Euler bookkeeping works out
    std::vector<char> comp_has_face(comp_outer_.size(), 0);
    for (std::size_t f = 0; f < faces_.size(); ++f)
        comp_has_face[comp_of_[faces_[f][0].u]] = 1;
    for (std::size_t c = 0; c < comp_outer_.size(); ++c)
        if (!comp_has_face[c]) {
            faces_.push_back({});
            comp_outer_[c] = static_cast<int>(faces_.size()) - 1;
        }

    // pick outer faces: hint wins for its component, otherwise the largest
    // walk (ties: lexicographically smallest normalized walk)
    auto norm_walk = [&](int f) {
        std::vector<int> seq;
        for (const Dart& d : faces_[f]) seq.push_back(label_[d.u]);
        if (seq.empty()) return seq;
        std::vector<int> best = seq;
        for (std::size_t s = 1; s < seq.size(); ++s) {
            std::vector<int> rotv(seq.begin() + s, seq.end());
            rotv.insert(rotv.end(), seq.begin(), seq.begin() + s);
            if (rotv < best) best = rotv;
        }
        return best;
    };
    std::vector<int> comp_of_face(faces_.size(), -1);
    for (std::size_t f = 0; f < faces_.size(); ++f)
        if (!faces_[f].empty()) comp_of_face[f] = comp_of_[faces_[f][0].u];
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        int c = comp_of_face[f];
        if (c < 0) continue;
        if (comp_outer_[c] < 0)
            comp_outer_[c] = static_cast<int>(f);
        else {
            int cur = comp_outer_[c];
            if (faces_[f].size() > faces_[cur].size() ||
                (faces_[f].size() == faces_[cur].size() && norm_walk(static_cast<int>(f)) < norm_walk(cur)))
                comp_outer_[c] = static_cast<int>(f);
        }
    }
    if (outer_hint) {
        auto it = dart_face_.find(dart_key(outer_hint->u, outer_hint->v));
        if (it == dart_face_.end()) throw std::invalid_argument("outer hint dart missing");
        comp_outer_[comp_of_[outer_hint->u]] = it->second;
    }
    outer_face_ = comp_outer_.empty() ? -1 : comp_outer_[0];
}

VList PlaneGraph::face_vertices(int f) const {
    VList out;
    for (const Dart& d : faces_[f]) out.push_back(d.u);
    return vset_sorted(out);
}

int PlaneGraph::face_of(int u, int v) const {
    auto it = dart_face_.find(dart_key(u, v));
    if (it == dart_face_.end()) throw std::invalid_argument("no such dart");
    return it->second;
}

bool PlaneGraph::face_is_outer(int f) const {
    for (int of : comp_outer_)
        if (of == f) return true;
    return false;
}

VList PlaneGraph::outer_vertices() const {
    VList out;
    for (std::size_t c = 0; c < comp_outer_.size(); ++c) {
        if (comp_outer_[c] < 0) continue;
        for (const Dart& d : faces_[comp_outer_[c]]) out.push_back(d.u);
    }
    // isolated vertices sit on the outer face of their component
    for (int v = 0; v < n(); ++v)
        if (g_.degree(v) == 0) out.push_back(v);
    return vset_sorted(out);
}

void PlaneGraph::validate() const {
    // Euler per component: n - m + f = 2
    int nc = component_count();
    std::vector<int> cn(nc, 0), cm(nc, 0), cf(nc, 0);
    for (int v = 0; v < n(); ++v) cn[comp_of_[v]]++;
    for (auto [u, v] : g_.edges()) cm[comp_of_[u]]++, (void)v;
    for (const auto& fd : faces_)
        if (!fd.empty()) cf[comp_of_[fd[0].u]]++;
    for (int c = 0; c < nc; ++c) {
        int f = cf[c] == 0 ? 1 : cf[c];
        if (cn[c] - cm[c] + f != 2) throw std::runtime_error("embedding violates Euler's formula");
    }
    std::size_t total_darts = 0;
    for (const auto& fd : faces_) total_darts += fd.size();
    if (total_darts != std::size_t(2) * g_.m()) throw std::runtime_error("face walk dart count mismatch");
}

const std::vector<int>& PlaneGraph::peel_layers() const {
    if (!peel_cache_.empty() || n() == 0) return peel_cache_;
    peel_cache_.assign(n(), 0);
    std::vector<char> face_outside(faces_.size(), 0);
    for (int f : comp_outer_)
        if (f >= 0) face_outside[f] = 1;
    std::vector<char> removed(n(), 0);
    int remaining = n();
    int round = 0;
    while (remaining > 0) {
        ++round;
        VList layer;
        for (std::size_t f = 0; f < faces_.size(); ++f) {
            if (!face_outside[f]) continue;
            for (const Dart& d : faces_[f])
                if (!removed[d.u]) layer.push_back(d.u);
        }
        for (int v = 0; v < n(); ++v)
            if (!removed[v] && g_.degree(v) == 0) layer.push_back(v);
        layer = vset_sorted(layer);
        if (layer.empty()) throw std::runtime_error("peeling stalled");
        for (int v : layer) {
            removed[v] = 1;
            peel_cache_[v] = round;
            --remaining;
            for (int u : rot_[v]) {
                face_outside[dart_face_.at(dart_key(v, u))] = 1;
                face_outside[dart_face_.at(dart_key(u, v))] = 1;
            }
        }
    }
    return peel_cache_;
}

int PlaneGraph::outerplanarity_index() const {
    if (n() == 0) return 1;
    const auto& L = peel_layers();
    return *std::max_element(L.begin(), L.end());
}

int PlaneGraph::outerplanarity_index_best() const {
    if (n() == 0) return 1;
    // per component, try each face of that component as the outer face
    int nc = component_count();
    std::vector<int> best(nc, -1);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        if (faces_[f].empty()) continue;
        int c = comp_of_[faces_[f][0].u];
        PlaneGraph tmp = *this;
        tmp.comp_outer_.assign(nc, -1);
        for (int cc = 0; cc < nc; ++cc) tmp.comp_outer_[cc] = comp_outer_[cc];
        tmp.comp_outer_[c] = static_cast<int>(f);
        tmp.peel_cache_.clear();
        const auto& L = tmp.peel_layers();
        int rounds = 0;
        for (int v = 0; v < n(); ++v)
            if (comp_of_[v] == c) rounds = std::max(rounds, L[v]);
        if (best[c] < 0 || rounds < best[c]) best[c] = rounds;
    }
    int out = 1;
    for (int c = 0; c < nc; ++c) out = std::max(out, best[c] < 0 ? 1 : best[c]);
    return out;
}

PlaneGraph PlaneGraph::subgraph(const VList& keep, std::optional<Dart> outer_dart) const {
    std::vector<int> old_to_new(n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) old_to_new[keep[i]] = static_cast<int>(i);
    Graph sg(static_cast<int>(keep.size()));
    std::vector<std::vector<int>> srot(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        for (int u : rot_[v])
            if (old_to_new[u] >= 0) {
                srot[i].push_back(old_to_new[u]);
                if (old_to_new[u] > static_cast<int>(i)) sg.add_edge(static_cast<int>(i), old_to_new[u]);
            }
    }
    std::optional<Dart> hint;
    if (outer_dart) {
        if (old_to_new[outer_dart->u] < 0 || old_to_new[outer_dart->v] < 0)
            throw std::invalid_argument("outer dart removed by subgraph");
        hint = Dart{old_to_new[outer_dart->u], old_to_new[outer_dart->v]};
    }
    PlaneGraph out(std::move(sg), std::move(srot), hint);
    std::vector<int> lbl(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) lbl[i] = label_[keep[i]];
    out.set_labels(std::move(lbl));
    std::set<std::pair<int, int>> d;
    for (auto [u, v] : delta_)
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0) {
            int a = old_to_new[u], b = old_to_new[v];
            d.insert({std::min(a, b), std::max(a, b)});
        }
    out.set_delta(std::move(d));

    if (!outer_dart) {
        // designate, per component, a face that borders deleted territory
        // (the region the removed vertices occupied merges into it)
        std::vector<char> removed_face(faces_.size(), 0);
        for (int v = 0; v < n(); ++v)
            if (old_to_new[v] < 0)
                for (int u : rot_[v]) {
                    removed_face[dart_face_.at(dart_key(v, u))] = 1;
                    removed_face[dart_face_.at(dart_key(u, v))] = 1;
                }
        for (int f : comp_outer_)
            if (f >= 0) removed_face[f] = 1;
        for (int c = 0; c < out.component_count(); ++c) {
            int pick = -1;
            for (std::size_t f = 0; f < out.faces_.size() && pick < 0; ++f) {
                if (out.faces_[f].empty()) continue;
                if (out.comp_of_[out.faces_[f][0].u] != c) continue;
                for (const Dart& d2 : out.faces_[f]) {
                    // a dart of the new embedding whose old face was dissolved
                    int ou = keep[d2.u], ov = keep[d2.v];
                    int oldf = dart_face_.at(dart_key(ou, ov));
                    if (removed_face[oldf]) {
                        pick = static_cast<int>(f);
                        break;
                    }
                }
            }
            if (pick >= 0) out.comp_outer_[c] = pick;
        }
        out.outer_face_ = out.comp_outer_.empty() ? -1 : out.comp_outer_[0];
        out.peel_cache_.clear();
    }
    return out;
}

VList PlaneGraph::labels_of(const VList& local) const {
    VList out;
    out.reserve(local.size());
    for (int v : local) out.push_back(label_[v]);
    return vset_sorted(out);
}

}  // namespace plic
