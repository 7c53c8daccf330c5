#include "plic/kernel.hpp"
#include "plic/planar_ops.hpp"

namespace plic {

namespace {

// best tree-decomposition edge split of the subproblem's vertex set:
// minimizes the larger side, skipping trivial splits
bool pick_split(const Subproblem& pi, VList& V1, VList& V2) {
    std::vector<int> new_to_old;
    Graph local = pi.root().induced(pi.verts(), &new_to_old);
    TreeDecomposition td = tree_decomposition_of(local);
    int nb = static_cast<int>(td.bags.size());
    if (nb < 2) return false;

    std::vector<std::vector<int>> children(nb);
    for (int b = 0; b < nb; ++b)
        if (td.parent[b] >= 0) children[td.parent[b]].push_back(b);

    auto to_orig = [&](const VList& local_set) {
        VList out;
        for (int lv : local_set) out.push_back(new_to_old[lv]);
        return vset_sorted(out);
    };

    std::size_t best = pi.verts().size() + 1;
    bool found = false;
    for (int b = 0; b < nb; ++b) {
        if (td.parent[b] < 0) continue;
        // subtree membership below b
        std::vector<char> in_sub(nb, 0);
        std::vector<int> stack{b};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            in_sub[x] = 1;
            for (int c : children[x]) stack.push_back(c);
        }
        VList s1, s2;
        for (int x = 0; x < nb; ++x)
            (in_sub[x] ? s1 : s2) = vset_union(in_sub[x] ? s1 : s2, td.bags[x]);
        VList o1 = to_orig(s1), o2 = to_orig(s2);
        if (o1.size() >= pi.verts().size() || o2.size() >= pi.verts().size()) continue;
        std::size_t sz = std::max(o1.size(), o2.size());
        if (sz < best) {
            best = sz;
            V1 = o1;
            V2 = o2;
            found = true;
        }
    }
    return found;
}

}  // namespace

AnswerTable base_case_solve(const PatternCtx& ctx, const Subproblem& pi, MapSemantics sem,
                            int leaf_threshold) {
    int interior = static_cast<int>(vset_minus(pi.verts(), pi.boundary()).size());
    if (static_cast<int>(pi.verts().size()) <= leaf_threshold || interior <= 1)
        return enumerate_table(ctx, pi, sem);

    // components first: a component split carries an empty separator
    auto comps = pi.root().components_within(pi.verts());
    if (comps.size() > 1) {
        VList V1 = comps[0];
        VList V2 = vset_minus(pi.verts(), V1);
        SplitParts split = derive_split_subproblems(pi, V1, V2, 0);
        AnswerTable a1 = base_case_solve(ctx, split.child1, sem, leaf_threshold);
        AnswerTable a2 = base_case_solve(ctx, split.child2, sem, leaf_threshold);
        return sparse_separation_combine(ctx, pi, split, a1, a2);
    }

    VList V1, V2;
    if (!pick_split(pi, V1, V2)) return enumerate_table(ctx, pi, sem);
    int b = pi.upp_of_set(vset_intersect(V1, V2));
    SplitParts split = derive_split_subproblems(pi, V1, V2, b);
    AnswerTable a1 = base_case_solve(ctx, split.child1, sem, leaf_threshold);
    AnswerTable a2 = base_case_solve(ctx, split.child2, sem, leaf_threshold);
    return sparse_separation_combine(ctx, pi, split, a1, a2);
}

}  // namespace plic
