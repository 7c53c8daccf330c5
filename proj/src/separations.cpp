#include <algorithm>
#include <functional>
#include <numeric>

#include "plic/catalog.hpp"

namespace plic {

namespace {

Count binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    Count out = 1;
    for (int i = 0; i < r; ++i) {
        out *= (n - i);
        out /= (i + 1);
    }
    return out;
}

}  // namespace

PatternCtx::PatternCtx(const Graph& pattern) : p_(pattern) {
    int k = p_.k;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    // degree pruning keeps the k! scan tolerable for the k <= 8 zoo
    do {
        bool ok = true;
        for (int v = 0; v < k && ok; ++v)
            if (p_.g.degree(v) != p_.g.degree(perm[v])) ok = false;
        for (int u = 0; u < k && ok; ++u)
            for (int v = u + 1; v < k && ok; ++v)
                if (p_.g.has_edge(u, v) != p_.g.has_edge(perm[u], perm[v])) ok = false;
        if (ok) autos_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Mask PatternCtx::apply_auto(const std::vector<int>& a, Mask X) const {
    Mask out = 0;
    for (Mask m = X; m;) {
        int v = lowbit_index(m);
        m &= m - 1;
        out |= Mask(1) << a[v];
    }
    return out;
}

bool PatternCtx::valid_sep(Mask X, Mask T) const {
    if ((T & ~X) != 0) return false;
    return p_.no_edges_between(X & ~T, full() & ~X);
}

Mask PatternCtx::canon_xside(Mask T, Mask X) const {
    auto it = canon_cache_.find({T, X});
    if (it != canon_cache_.end()) return it->second;
    Mask best = X;
    for (const auto& a : autos_) {
        bool fixes = true;
        for (Mask m = T; m && fixes;) {
            int v = lowbit_index(m);
            m &= m - 1;
            if (a[v] != v) fixes = false;
        }
        if (!fixes) continue;
        Mask img = apply_auto(a, X);
        if (img < best) best = img;
    }
    canon_cache_[{T, X}] = best;
    return best;
}

const std::vector<SepClass>& PatternCtx::catalog(int max_order, Mask Z) const {
    auto key = std::make_pair(max_order, Z);
    auto it = catalog_cache_.find(key);
    if (it != catalog_cache_.end()) return it->second;

    std::vector<SepClass> out;
    int k = p_.k;
    // iterate separators S <= Z with |S| <= max_order
    for (Mask S = 0;; S = ((S | ~Z) + 1) & Z) {  // subsets of Z
        if (popcount(S) <= max_order) {
            // group components of P - S by canonical string with S pinned
            auto comps = p_.component_masks_within(full() & ~S);
            VList s_list = mask_to_list(S);
            std::vector<std::string> cstr;
            std::vector<char> in_z;
            for (Mask c : comps) {
                VList verts = mask_to_list(Mask(c | S));
                Graph cg(static_cast<int>(verts.size()));
                std::vector<long> colors(verts.size());
                for (std::size_t i = 0; i < verts.size(); ++i) {
                    for (std::size_t j = i + 1; j < verts.size(); ++j)
                        if (p_.g.has_edge(verts[i], verts[j]))
                            cg.add_edge(static_cast<int>(i), static_cast<int>(j));
                    auto pos = std::find(s_list.begin(), s_list.end(), verts[i]);
                    colors[i] = pos == s_list.end() ? 0 : 1 + (pos - s_list.begin());
                }
                cstr.push_back(canonize({std::move(cg), std::move(colors)}));
                in_z.push_back((c & ~Z) == 0);
            }
            // class ids in first-seen order; components sorted by string for
            // deterministic nested representatives
            std::map<std::string, std::vector<int>> by_class;
            for (std::size_t i = 0; i < comps.size(); ++i) by_class[cstr[i]].push_back(static_cast<int>(i));

            std::vector<std::pair<std::vector<int>, std::vector<int>>> classes;  // (all, inZ)
            for (auto& [s, idxs] : by_class) {
                std::vector<int> inz;
                for (int i : idxs)
                    if (in_z[i]) inz.push_back(i);
                classes.push_back({idxs, inz});
            }
            // enumerate q^X <= q^Z componentwise
            std::vector<int> qx(classes.size(), 0);
            while (true) {
                Mask X = S;
                Count mu = 1;
                for (std::size_t ci = 0; ci < classes.size(); ++ci) {
                    for (int t = 0; t < qx[ci]; ++t) X |= comps[classes[ci].second[t]];
                    mu *= binomial(static_cast<int>(classes[ci].second.size()), qx[ci]);
                }
                SepClass sc;
                sc.X = canon_xside(S, X);  // align with the min-mask representative
                sc.T = S;
                sc.mu = mu;
                out.push_back(std::move(sc));
                // next vector
                std::size_t ci = 0;
                while (ci < classes.size()) {
                    if (qx[ci] < static_cast<int>(classes[ci].second.size())) {
                        ++qx[ci];
                        break;
                    }
                    qx[ci++] = 0;
                }
                if (ci == classes.size()) break;
            }
        }
        if (S == Z) break;
    }
    std::sort(out.begin(), out.end(), [](const SepClass& a, const SepClass& b) {
        if (a.T != b.T) return a.T < b.T;
        return a.X < b.X;
    });
    return catalog_cache_.emplace(key, std::move(out)).first->second;
}

const std::vector<std::pair<Mask, Mask>>& PatternCtx::table_classes(int bound) const {
    auto it = table_class_cache_.find(bound);
    if (it != table_class_cache_.end()) return it->second;
    std::vector<std::pair<Mask, Mask>> out;
    Mask V = full();
    for (Mask T = 0;; ++T) {
        if (popcount(T) <= bound) {
            // X ranges over supersets of T
            Mask rest = V & ~T;
            for (Mask r = 0;; r = ((r | ~rest) + 1) & rest) {
                Mask X = T | r;
                if (valid_sep(X, T) && canon_xside(T, X) == X) out.push_back({X, T});
                if (r == rest) break;
            }
        }
        if (T == V) break;
    }
    std::sort(out.begin(), out.end());
    return table_class_cache_.emplace(bound, std::move(out)).first->second;
}

std::vector<std::size_t> PatternCtx::sigma_profile(int l) const {
    std::vector<std::size_t> out;
    for (int j = 0; j <= l; ++j) out.push_back(catalog(j, full()).size());
    return out;
}

std::vector<SepClass> PatternCtx::catalog_bruteforce(int max_order, Mask Z) const {
    std::vector<SepClass> out;
    Mask V = full();
    for (Mask X = 0;; X = ((X | ~Z) + 1) & Z) {  // X below Z
        for (Mask T = X;; T = (T - 1) & X) {
            if (popcount(T) <= max_order && valid_sep(X, T)) {
                Mask cx = canon_xside(T, X);
                bool found = false;
                for (auto& sc : out)
                    if (sc.T == T && sc.X == cx) {
                        sc.mu += 1;
                        found = true;
                        break;
                    }
                if (!found) {
                    SepClass sc;
                    sc.X = cx;
                    sc.T = T;
                    sc.mu = 1;
                    out.push_back(std::move(sc));
                }
            }
            if (T == 0) break;
        }
        if (X == Z) break;
    }
    std::sort(out.begin(), out.end(), [](const SepClass& a, const SepClass& b) {
        if (a.T != b.T) return a.T < b.T;
        return a.X < b.X;
    });
    return out;
}

const std::vector<PatternCtx::DecompClass>& PatternCtx::decomp_classes(Mask X, Mask T) const {
    auto key = std::make_pair(X, T);
    auto it = decomp_cache_.find(key);
    if (it != decomp_cache_.end()) return it->second;

    std::vector<DecompClass> out;
    for (Mask D = X;; D = (D - 1) & X) {
        // automorphisms fixing T+D pointwise and X setwise
        Mask pins = T | D;
        std::vector<const std::vector<int>*> gamma;
        for (const auto& a : autos_) {
            bool ok = apply_auto(a, X) == X;
            for (Mask m = pins; m && ok;) {
                int v = lowbit_index(m);
                m &= m - 1;
                if (a[v] != v) ok = false;
            }
            if (ok) gamma.push_back(&a);
        }
        Mask free = X & ~D;
        std::map<Mask, char> seen;
        for (Mask fr = free;; fr = (fr - 1) & free) {
            Mask X1 = D | fr;
            if (!seen.count(X1) && p_.no_edges_between(X1 & ~D, X & ~X1)) {
                // orbit of X1 under gamma
                std::vector<Mask> orbit;
                for (const auto* a : gamma) {
                    Mask img = apply_auto(*a, X1);
                    if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
                        orbit.push_back(img);
                }
                Mask rep = *std::min_element(orbit.begin(), orbit.end());
                for (Mask o : orbit) seen[o] = 1;
                out.push_back({rep, D, static_cast<long>(orbit.size())});
            }
            if (fr == 0) break;
        }
        if (D == 0) break;
    }
    std::sort(out.begin(), out.end(), [](const DecompClass& a, const DecompClass& b) {
        if (a.D != b.D) return a.D < b.D;
        return a.X1 < b.X1;
    });
    return decomp_cache_.emplace(key, std::move(out)).first->second;
}

std::size_t PatternCtx::raw_separation_count(int max_order, Mask Z) const {
    std::size_t cnt = 0;
    for (Mask X = 0;; X = ((X | ~Z) + 1) & Z) {
        for (Mask T = X;; T = (T - 1) & X) {
            if (popcount(T) <= max_order && valid_sep(X, T)) ++cnt;
            if (T == 0) break;
        }
        if (X == Z) break;
    }
    return cnt;
}

}  // namespace plic
