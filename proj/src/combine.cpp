#include "plic/kernel.hpp"

namespace plic {

SplitParts derive_split_subproblems(const Subproblem& pi, const VList& V1, const VList& V2,
                                    int b) {
    if (vset_union(V1, V2) != pi.verts()) throw std::invalid_argument("split does not cover");
    VList sep = vset_intersect(V1, V2);
    for (int u : vset_minus(V1, sep))
        for (int w : pi.root().neighbors(u))
            if (pi.has_vertex(w) && vset_contains(V2, w) && !vset_contains(sep, w))
                throw std::invalid_argument("split is not a separation");

    SplitParts out;
    out.b = std::min(b, pi.k());
    auto build = [&](const VList& Vi) {
        std::vector<Monitor> mons;
        for (const auto& m : pi.monitors().mons()) {
            VList s = vset_intersect(m.set, Vi);
            if (s.empty()) continue;
            int low = vset_subset(m.set, Vi) ? m.low : 0;
            mons.push_back({std::move(s), low, m.upp});
        }
        if (!sep.empty()) mons.push_back({sep, 0, out.b});
        return Subproblem::make(pi.root_ptr(), Vi, vset_union(vset_intersect(pi.boundary(), Vi), sep),
                                std::move(mons), pi.k());
    };
    out.child1 = build(V1);
    out.child2 = build(V2);
    // folding is symmetric on the separator: both children delete sep when b=0
    out.sep = vset_minus(sep, out.child1.folded());

    auto mapping = [&](const Subproblem& child, const VList& Vi) {
        std::vector<int> idx;
        for (const auto& m : pi.monitors().mons()) {
            VList s = vset_minus(vset_intersect(m.set, Vi), child.folded());
            idx.push_back(s.empty() ? -1 : child.monitors().index_of(s));
        }
        return idx;
    };
    out.m1_of_parent = mapping(out.child1, V1);
    out.m2_of_parent = mapping(out.child2, V2);
    out.m1_designated = out.sep.empty() ? -1 : out.child1.monitors().index_of(out.sep);
    out.m2_designated = out.sep.empty() ? -1 : out.child2.monitors().index_of(out.sep);
    return out;
}

namespace {

struct ShapeEntry {
    const TableKey* key;
    const Count* val;
};

using ShapeIndex = std::unordered_map<std::uint64_t, std::vector<ShapeEntry>>;

std::uint64_t shape_key(Mask X, Mask T) { return (std::uint64_t(X) << 32) | T; }

ShapeIndex index_table(const AnswerTable& a) {
    ShapeIndex out;
    for (const auto& [k, v] : a.entries()) out[shape_key(k.X, k.T)].push_back({&k, &v});
    return out;
}

}  // namespace

AnswerTable sparse_separation_combine(const PatternCtx& ctx, const Subproblem& pi,
                                      const SplitParts& split, const AnswerTable& a1,
                                      const AnswerTable& a2) {
    AnswerTable out(pi);
    const int ord = std::min(pi.order_bound(), ctx.k());
    const auto& pmons = pi.monitors().mons();
    const VList& sep = split.sep;
    const int dmax = std::min<int>(split.b, static_cast<int>(sep.size()));

    ShapeIndex idx1 = index_table(a1);
    ShapeIndex idx2 = index_table(a2);

    for (const auto& [Xstar, T] : ctx.table_classes(ord)) {
        VList tlist = mask_to_list(T);
        for (const auto& dc : ctx.decomp_classes(Xstar, T)) {
            if (popcount(dc.D) > dmax) continue;
            Mask X1 = dc.X1, D = dc.D;
            Mask X2 = (Xstar & ~X1) | D;
            Mask T1 = D | (T & X1);
            Mask T2 = D | (T & ~X1);
            Mask cx1 = ctx.canon_xside(T1, X1);
            Mask cx2 = ctx.canon_xside(T2, X2);
            auto it1 = idx1.find(shape_key(cx1, T1));
            auto it2 = idx2.find(shape_key(cx2, T2));
            if (it1 == idx1.end() || it2 == idx2.end()) continue;

            VList t1list = mask_to_list(T1);
            VList t2list = mask_to_list(T2);
            // positions of D vertices inside the child key f-arrays
            std::vector<int> dpos1, dpos2;
            for (std::size_t i = 0; i < t1list.size(); ++i)
                if ((D >> t1list[i]) & 1) dpos1.push_back(static_cast<int>(i));
            for (std::size_t i = 0; i < t2list.size(); ++i)
                if ((D >> t2list[i]) & 1) dpos2.push_back(static_cast<int>(i));
            const int dsz = popcount(D);

            for (const ShapeEntry& e1 : it1->second) {
                const TableKey& k1 = *e1.key;
                // designation: exactly the D vertices land on the separator
                if (split.m1_designated >= 0 && k1.r[split.m1_designated] != dsz) continue;
                if (split.m1_designated < 0 && dsz != 0) continue;
                bool ok = true;
                for (std::size_t i = 0; i < t1list.size() && ok; ++i) {
                    bool on_sep = vset_contains(sep, k1.f[i]);
                    bool is_d = (D >> t1list[i]) & 1;
                    if (on_sep != is_d) ok = false;
                }
                if (!ok) continue;

                for (const ShapeEntry& e2 : it2->second) {
                    const TableKey& k2 = *e2.key;
                    if (split.m2_designated >= 0 && k2.r[split.m2_designated] != dsz) continue;
                    if (split.m2_designated < 0 && dsz != 0) continue;
                    bool ok2 = true;
                    for (std::size_t i = 0; i < t2list.size() && ok2; ++i) {
                        bool on_sep = vset_contains(sep, k2.f[i]);
                        bool is_d = (D >> t2list[i]) & 1;
                        if (on_sep != is_d) ok2 = false;
                    }
                    for (int j = 0; j < dsz && ok2; ++j)
                        if (k1.f[dpos1[j]] != k2.f[dpos2[j]]) ok2 = false;
                    if (!ok2) continue;

                    std::vector<int> r(pmons.size());
                    bool feas = true;
                    for (std::size_t i = 0; i < pmons.size() && feas; ++i) {
                        int r1 = split.m1_of_parent[i] >= 0 ? k1.r[split.m1_of_parent[i]] : 0;
                        int r2 = split.m2_of_parent[i] >= 0 ? k2.r[split.m2_of_parent[i]] : 0;
                        int rp = 0;
                        for (int j = 0; j < dsz; ++j)
                            if (vset_contains(pmons[i].set, k1.f[dpos1[j]])) ++rp;
                        r[i] = r1 + r2 - rp;
                        if (r[i] < pmons[i].low || r[i] > pmons[i].upp) feas = false;
                    }
                    if (!feas) continue;

                    // parent boundary map over T: D-part must land in the
                    // parent boundary, the rest comes from its own side
                    std::vector<int> f;
                    f.reserve(tlist.size());
                    bool fok = true;
                    for (int v : tlist) {
                        int host = -1;
                        if ((D >> v) & 1) {
                            for (int j = 0; j < dsz; ++j)
                                if (t1list[dpos1[j]] == v) host = k1.f[dpos1[j]];
                            if (!pi.in_boundary(host)) {
                                fok = false;
                                break;
                            }
                        } else if ((X1 >> v) & 1) {
                            for (std::size_t i = 0; i < t1list.size(); ++i)
                                if (t1list[i] == v) host = k1.f[i];
                        } else {
                            for (std::size_t i = 0; i < t2list.size(); ++i)
                                if (t2list[i] == v) host = k2.f[i];
                        }
                        f.push_back(host);
                    }
                    if (!fok) continue;

                    TableKey key;
                    key.r = std::move(r);
                    key.X = Xstar;
                    key.T = T;
                    key.f = std::move(f);
                    out.add(key, Count(dc.mu) * (*e1.val) * (*e2.val));
                }
            }
        }
    }
    return out;
}

}  // namespace plic
