#include "plic/oracle.hpp"

namespace plic {

namespace {

// plain nested backtracking over pattern vertices 0..k-1 restricted to X
struct Enumerator {
    const Graph& p;
    const Graph& g;
    MapSemantics sem;
    std::vector<int> domain;  // pattern vertices to place
    VList hosts;
    std::vector<int> img;
    std::vector<char> used;
    long long steps = 0;
    long long budget;

    template <class Fn>
    void run(std::size_t depth, const Fn& fn) {
        if (depth == domain.size()) {
            fn(img);
            return;
        }
        int v = domain[depth];
        for (std::size_t wi = 0; wi < hosts.size(); ++wi) {
            if (used[wi]) continue;
            if (++steps > budget) throw OracleBudgetExceeded();
            int w = hosts[wi];
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j) {
                int u = domain[j];
                bool pe = p.has_edge(v, u);
                bool ge = g.has_edge(w, img[u]);
                ok = sem == MapSemantics::Induced ? pe == ge : (!pe || ge);
            }
            if (!ok) continue;
            used[wi] = 1;
            img[v] = w;
            run(depth + 1, fn);
            used[wi] = 0;
            img[v] = -1;
        }
    }
};

}  // namespace

Count oracle_count(const Graph& pattern, const Graph& host, MapSemantics sem,
                   const std::optional<OracleConstraints>& cons, long long budget) {
    Mask X = cons && !cons->whole_pattern ? cons->X : (pattern.n() ? (Mask(1) << pattern.n()) - 1 : 0);
    Enumerator e{pattern, host, sem, mask_to_list(X), {}, std::vector<int>(pattern.n(), -1),
                 std::vector<char>(host.n(), 0), 0, budget};
    for (int v = 0; v < host.n(); ++v) e.hosts.push_back(v);
    Count out = 0;
    e.run(0, [&](const std::vector<int>& img) {
        if (cons) {
            for (auto [pv, hv] : cons->pins)
                if (img[pv] != hv) return;
            for (const auto& m : cons->hits) {
                int c = 0;
                for (int v : e.domain)
                    if (vset_contains(m.set, img[v])) ++c;
                if (c < m.low || c > m.upp) return;
            }
        }
        out += 1;
    });
    return out;
}

AnswerTable oracle_table(const PatternCtx& ctx, const Subproblem& pi, MapSemantics sem) {
    AnswerTable table(pi);
    const int ord = std::min(pi.order_bound(), ctx.k());
    const Mask full = ctx.full();
    const auto& mons = pi.monitors().mons();

    for (Mask X = 0;; ++X) {
        std::vector<int> domain = mask_to_list(X);
        Enumerator e{ctx.pattern().g, pi.root(), sem, domain, pi.verts(),
                     std::vector<int>(ctx.k(), -1), std::vector<char>(pi.verts().size(), 0), 0,
                     400000000LL};
        e.run(0, [&](const std::vector<int>& img) {
            std::vector<int> r(mons.size());
            for (std::size_t i = 0; i < mons.size(); ++i) {
                int c = 0;
                for (int v : domain)
                    if (vset_contains(mons[i].set, img[v])) ++c;
                if (c < mons[i].low || c > mons[i].upp) return;
                r[i] = c;
            }
            // every T between the pattern boundary of X and the boundary
            // preimage yields a key this map belongs to
            Mask bd = 0;
            for (int v : domain)
                if (ctx.pattern().adj[v] & ~X) bd |= Mask(1) << v;
            Mask Q = 0;
            for (int v : domain)
                if (pi.in_boundary(img[v])) Q |= Mask(1) << v;
            if (bd & ~Q) return;
            Mask extra = Q & ~bd;
            for (Mask ex = extra;; ex = (ex - 1) & extra) {
                Mask T = bd | ex;
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
                if (ex == 0) break;
            }
        });
        if (X == full) break;
    }
    return table;
}

Count grid_independent_sets_enumerative(int rows, int cols, int k) {
    if (rows * cols > 36) throw std::invalid_argument("enumerative mode capped at 36 cells");
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    Count out = 0;
    std::vector<int> pick;
    std::function<void(int, int)> rec = [&](int from, int left) {
        if (left == 0) {
            out += 1;
            return;
        }
        for (int v = from; v <= g.n() - left; ++v) {
            bool ok = true;
            for (int u : pick)
                if (g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(v);
            rec(v + 1, left - 1);
            pick.pop_back();
        }
    };
    rec(0, k);
    return out;
}

Count grid_independent_set_oracle(int rows, int cols, int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    // transfer over columns: per-column independent masks, no horizontal clash
    int R = rows;
    std::vector<int> masks;
    for (int m = 0; m < (1 << R); ++m)
        if ((m & (m << 1)) == 0) masks.push_back(m);
    // dp[mask][cnt]
    std::vector<std::vector<Count>> dp(masks.size(), std::vector<Count>(k + 1, 0));
    for (std::size_t i = 0; i < masks.size(); ++i) {
        int c = __builtin_popcount(static_cast<unsigned>(masks[i]));
        if (c <= k) dp[i][c] = 1;
    }
    for (int col = 1; col < cols; ++col) {
        std::vector<std::vector<Count>> next(masks.size(), std::vector<Count>(k + 1, 0));
        for (std::size_t i = 0; i < masks.size(); ++i)
            for (std::size_t j = 0; j < masks.size(); ++j) {
                if (masks[i] & masks[j]) continue;
                int c = __builtin_popcount(static_cast<unsigned>(masks[j]));
                for (int t = 0; t + c <= k; ++t)
                    if (dp[i][t] != 0) next[j][t + c] += dp[i][t];
            }
        dp = std::move(next);
    }
    Count out = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) out += dp[i][k];
    return out;
}

}  // namespace plic
