#include "plic/kernel.hpp"

namespace plic {

namespace {

// recursive injective-map enumeration over the pattern vertices in `order`
void enum_maps(const PatternCtx& ctx, const Graph& g, const VList& verts, MapSemantics sem,
               const std::vector<int>& order, std::size_t depth, std::vector<int>& img,
               std::vector<char>& used, const std::function<void()>& sink) {
    if (depth == order.size()) {
        sink();
        return;
    }
    int v = order[depth];
    const Pattern& p = ctx.pattern();
    for (std::size_t wi = 0; wi < verts.size(); ++wi) {
        if (used[wi]) continue;
        int w = verts[wi];
        bool ok = true;
        for (std::size_t j = 0; j < depth && ok; ++j) {
            int u = order[j];
            bool pe = p.has_edge(v, u);
            bool ge = g.has_edge(w, img[u]);
            ok = (sem == MapSemantics::Induced) ? (pe == ge) : (!pe || ge);
        }
        if (!ok) continue;
        used[wi] = 1;
        img[v] = w;
        enum_maps(ctx, g, verts, sem, order, depth + 1, img, used, sink);
        used[wi] = 0;
        img[v] = -1;
    }
}

}  // namespace

AnswerTable enumerate_table(const PatternCtx& ctx, const Subproblem& pi, MapSemantics sem) {
    AnswerTable table(pi);
    const int ord = std::min(pi.order_bound(), ctx.k());
    const Mask full = ctx.full();
    const auto& mons = pi.monitors().mons();

    std::vector<int> img(ctx.k(), -1);
    std::vector<char> used(pi.verts().size(), 0);

    for (Mask X = 0;; ++X) {
        Mask bd = ctx.pattern().boundary(X);
        if (popcount(bd) > ord) {
            if (X == full) break;
            continue;  // no admissible T for this X
        }
        std::vector<int> order = mask_to_list(X);
        auto sink = [&]() {
            // monitor feasibility
            std::vector<int> r(mons.size());
            for (std::size_t i = 0; i < mons.size(); ++i) {
                int c = 0;
                for (int v : order)
                    if (vset_contains(mons[i].set, img[v])) ++c;
                if (c < mons[i].low || c > mons[i].upp) return;
                r[i] = c;
            }
            Mask Q = 0;
            for (int v : order)
                if (pi.in_boundary(img[v])) Q |= Mask(1) << v;
            if (bd & ~Q) return;
            Mask extra = Q & ~bd;
            for (Mask e = extra;; e = (e - 1) & extra) {
                Mask T = bd | e;
                if (popcount(T) <= ord && ctx.canon_xside(T, X) == X) {
                    TableKey key;
                    key.r = r;
                    key.X = X;
                    key.T = T;
                    for (Mask m = T; m;) {
                        int v = lowbit_index(m);
                        m &= m - 1;
                        key.f.push_back(img[v]);
                    }
                    table.add(key, 1);
                }
                if (e == 0) break;
            }
        };
        enum_maps(ctx, pi.root(), pi.verts(), sem, order, 0, img, used, sink);
        if (X == full) break;
    }
    return table;
}

}  // namespace plic
