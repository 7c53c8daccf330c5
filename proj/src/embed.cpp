#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

#include "plic/plane_graph.hpp"

namespace plic {

namespace {

// Demoucron-Malgrange-Pertuiset face insertion for a biconnected graph with
// local ids 0..n-1. Returns rotations; throws NonPlanarError.
class DmpEmbedder {
  public:
    explicit DmpEmbedder(const Graph& g) : g_(g), n_(g.n()) {}

    std::vector<std::vector<int>> run() {
        rot_.assign(n_, {});
        in_h_.assign(n_, 0);
        init_cycle();
        while (true) {
            auto frags = fragments();
            if (frags.empty()) break;
            // admissibility per fragment; bail out on the first impossible one
            std::vector<std::vector<int>> adm(frags.size());
            for (std::size_t i = 0; i < frags.size(); ++i) {
                for (std::size_t f = 0; f < faces_.size(); ++f) {
                    VList fv = face_verts(f);
                    if (vset_subset(frags[i].attachments, fv)) adm[i].push_back(static_cast<int>(f));
                }
                if (adm[i].empty()) throw NonPlanarError();
            }
            std::size_t pick = 0;
            for (std::size_t i = 0; i < frags.size(); ++i)
                if (adm[i].size() == 1) {
                    pick = i;
                    break;
                }
            embed_path(alpha_path(frags[pick]), adm[pick][0]);
        }
        return rot_;
    }

  private:
    struct Fragment {
        VList attachments;     // H-vertices
        VList interior;        // non-H component (empty for a chord)
        std::pair<int, int> chord{-1, -1};
    };

    void init_cycle() {
        // proper DFS: in an undirected graph the first visited non-parent
        // neighbor closes a cycle through tree ancestors
        std::vector<int> par(n_, -2);
        std::vector<int> cyc;
        struct Frame {
            int v;
            std::size_t i;
        };
        std::vector<Frame> st{{0, 0}};
        par[0] = -1;
        int cu = -1, cv = -1;
        while (!st.empty() && cu < 0) {
            auto& [u, i] = st.back();
            if (i >= g_.neighbors(u).size()) {
                st.pop_back();
                continue;
            }
            int v = g_.neighbors(u)[i++];
            if (par[v] == -2) {
                par[v] = u;
                st.push_back({v, 0});
            } else if (v != par[u]) {
                cu = u;  // back edge to an ancestor (no cross edges in undirected DFS)
                cv = v;
            }
        }
        if (cu < 0) throw std::logic_error("biconnected block without cycle");
        for (int w = cu; w != cv; w = par[w]) cyc.push_back(w);
        cyc.push_back(cv);

        int l = static_cast<int>(cyc.size());
        for (int i = 0; i < l; ++i) {
            int v = cyc[i];
            in_h_[v] = 1;
            rot_[v] = {cyc[(i - 1 + l) % l], cyc[(i + 1) % l]};
            h_edges_.insert(ekey(v, cyc[(i + 1) % l]));
        }
        std::vector<Dart> fwd, bwd;
        for (int i = 0; i < l; ++i) fwd.push_back({cyc[i], cyc[(i + 1) % l]});
        for (int i = l - 1; i >= 0; --i) bwd.push_back({cyc[(i + 1) % l], cyc[i]});
        faces_ = {fwd, bwd};
    }

    static std::int64_t ekey(int u, int v) {
        if (u > v) std::swap(u, v);
        return (std::int64_t(u) << 32) | std::uint32_t(v);
    }

    VList face_verts(std::size_t f) const {
        VList out;
        for (const Dart& d : faces_[f]) out.push_back(d.u);
        return vset_sorted(out);
    }

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        // chords
        for (int u = 0; u < n_; ++u)
            for (int v : g_.neighbors(u)) {
                if (u >= v) continue;
                if (in_h_[u] && in_h_[v] && !h_edges_.count(ekey(u, v))) {
                    Fragment fr;
                    fr.attachments = {u, v};
                    fr.chord = {u, v};
                    out.push_back(std::move(fr));
                }
            }
        // components of g - V(H)
        VList rest;
        for (int v = 0; v < n_; ++v)
            if (!in_h_[v]) rest.push_back(v);
        for (const VList& comp : g_.components_within(rest)) {
            Fragment fr;
            fr.interior = comp;
            VList att;
            for (int v : comp)
                for (int u : g_.neighbors(v))
                    if (in_h_[u]) att.push_back(u);
            fr.attachments = vset_sorted(att);
            out.push_back(std::move(fr));
        }
        std::sort(out.begin(), out.end(), [](const Fragment& a, const Fragment& b) {
            if (a.attachments != b.attachments) return a.attachments < b.attachments;
            return a.interior < b.interior;
        });
        return out;
    }

    // path between two attachments whose interior avoids H
    std::vector<int> alpha_path(const Fragment& fr) const {
        if (fr.chord.first >= 0) return {fr.chord.first, fr.chord.second};
        assert(fr.attachments.size() >= 2);
        int a = fr.attachments[0], b = fr.attachments[1];
        std::vector<int> par(n_, -2);
        std::queue<int> q;
        par[a] = -1;
        q.push(a);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (u == b) break;
            for (int v : g_.neighbors(u)) {
                if (par[v] != -2) continue;
                bool interior_ok = !in_h_[v] && vset_contains(fr.interior, v);
                if (v == b && u != a) interior_ok = true;  // arrive at b from interior
                if (v == b && u == a) continue;            // chord handled separately
                if (interior_ok) {
                    par[v] = u;
                    q.push(v);
                }
            }
        }
        if (par[b] == -2) throw std::logic_error("fragment path not found");
        std::vector<int> path;
        for (int w = b; w != -1; w = par[w]) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return path;
    }

    void insert_after(int v, int anchor, int nb) {
        auto& r = rot_[v];
        auto it = std::find(r.begin(), r.end(), anchor);
        assert(it != r.end());
        r.insert(it + 1, nb);
    }

    void embed_path(const std::vector<int>& path, int face_id) {
        int a = path.front(), b = path.back();
        const auto walk = faces_[face_id];
        int t = static_cast<int>(walk.size());
        int ia = -1, ib = -1;
        for (int i = 0; i < t; ++i) {
            if (walk[i].u == a) ia = i;
            if (walk[i].u == b) ib = i;
        }
        assert(ia >= 0 && ib >= 0 && ia != ib);
        int prev_a = walk[(ia - 1 + t) % t].u;
        int prev_b = walk[(ib - 1 + t) % t].u;

        insert_after(a, prev_a, path[1]);
        insert_after(b, prev_b, path[path.size() - 2]);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            rot_[path[i]] = {path[i - 1], path[i + 1]};
            in_h_[path[i]] = 1;
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) h_edges_.insert(ekey(path[i], path[i + 1]));

        // split face: segment a..b plus reversed path, segment b..a plus path
        std::vector<Dart> f1, f2;
        for (int i = ia; i != ib; i = (i + 1) % t) f1.push_back(walk[i]);
        for (std::size_t i = path.size() - 1; i > 0; --i) f1.push_back({path[i], path[i - 1]});
        for (int i = ib; i != ia; i = (i + 1) % t) f2.push_back(walk[i]);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) f2.push_back({path[i], path[i + 1]});

        faces_[face_id] = std::move(f1);
        faces_.push_back(std::move(f2));
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> rot_;
    std::vector<char> in_h_;
    std::set<std::int64_t> h_edges_;
    std::vector<std::vector<Dart>> faces_;
};

// Biconnected blocks (as edge lists) via the classic DFS edge stack.
std::vector<std::vector<std::pair<int, int>>> blocks_of(const Graph& g) {
    int n = g.n();
    std::vector<int> num(n, -1), low(n, 0), par(n, -1);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    struct Frame {
        int v;
        std::size_t i;
    };
    for (int s = 0; s < n; ++s) {
        if (num[s] >= 0) continue;
        std::vector<Frame> st{{s, 0}};
        num[s] = low[s] = timer++;
        while (!st.empty()) {
            auto& [v, i] = st.back();
            if (i < g.neighbors(v).size()) {
                int w = g.neighbors(v)[i++];
                if (num[w] < 0) {
                    estack.push_back({v, w});
                    par[w] = v;
                    num[w] = low[w] = timer++;
                    st.push_back({w, 0});
                } else if (w != par[v] && num[w] < num[v]) {
                    estack.push_back({v, w});
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                st.pop_back();
                if (!st.empty()) {
                    int u = st.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= num[u]) {
                        std::vector<std::pair<int, int>> blk;
                        while (true) {
                            auto e = estack.back();
                            estack.pop_back();
                            blk.push_back(e);
                            if (e == std::make_pair(u, v)) break;
                        }
                        blocks.push_back(std::move(blk));
                    }
                }
            }
        }
    }
    return blocks;
}

}  // namespace

PlaneGraph embed(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> rot(n);
    for (const auto& blk : blocks_of(g)) {
        VList verts;
        for (auto [u, v] : blk) {
            verts.push_back(u);
            verts.push_back(v);
        }
        verts = vset_sorted(verts);
        if (blk.size() == 1) {
            rot[blk[0].first].push_back(blk[0].second);
            rot[blk[0].second].push_back(blk[0].first);
            continue;
        }
        std::vector<int> old_of = verts;
        std::vector<int> new_of(n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) new_of[verts[i]] = static_cast<int>(i);
        Graph bg(static_cast<int>(verts.size()));
        for (auto [u, v] : blk) bg.add_edge(new_of[u], new_of[v]);
        DmpEmbedder dmp(bg);
        auto brot = dmp.run();
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (int w : brot[i]) rot[old_of[i]].push_back(old_of[w]);
    }
    return PlaneGraph(g, std::move(rot));
}

}  // namespace plic
