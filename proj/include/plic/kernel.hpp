#pragma once

#include <functional>
#include <memory>
#include <unordered_map>

#include "plic/catalog.hpp"
#include "plic/graph.hpp"
#include "plic/util.hpp"

namespace plic {

enum class MapSemantics { Induced, Sub };

/// Vertex set with an admissible range of pattern-intersection counts.
struct Monitor {
    VList set;
    int low = 0;
    int upp = 0;
};

/// Canonical monitor family: sorted by set, same-set monitors merged to
/// [max low, min upp].
class MonitorSet {
  public:
    MonitorSet() = default;
    static MonitorSet make(std::vector<Monitor> mons);

    const std::vector<Monitor>& mons() const { return mons_; }
    int size() const { return static_cast<int>(mons_.size()); }
    int index_of(const VList& set) const;
    bool any_zero_upp() const;

    /// All vectors in the product of the per-monitor ranges.
    void for_each_feasible(const std::function<void(const std::vector<int>&)>& fn) const;
    std::vector<std::vector<int>> feasible_vectors() const;
    Count feasible_count() const;

  private:
    std::vector<Monitor> mons_;
};

/// Recursion unit: host-vertex subset, boundary, monitors. Vertices keep
/// root-graph ids throughout; zero-upp monitors are folded into vertex
/// deletions at construction.
class Subproblem {
  public:
    Subproblem() = default;
    static Subproblem make(std::shared_ptr<const Graph> root, VList verts, VList boundary,
                           std::vector<Monitor> mons, int k);

    const Graph& root() const { return *root_; }
    std::shared_ptr<const Graph> root_ptr() const { return root_; }
    const VList& verts() const { return verts_; }
    const VList& boundary() const { return boundary_; }
    const MonitorSet& monitors() const { return mons_; }
    int k() const { return k_; }
    const VList& folded() const { return folded_; }

    bool has_vertex(int v) const { return vset_contains(verts_, v); }
    bool in_boundary(int v) const { return vset_contains(boundary_, v); }

    /// Valid upper bound on |g(X) ∩ s| for counted maps: min over monitors
    /// whose set contains s, clipped to k.
    int upp_of_set(const VList& s) const;
    int upp_of_all() const { return upp_of_set(verts_); }
    int order_bound() const { return upp_of_set(boundary_); }

    int small_monitor_count() const;  // upp > 0 and |set| <= k^4
    int large_monitor_count() const;  // upp > 0 and |set| > k

    std::size_t fingerprint() const;
    bool operator==(const Subproblem& o) const;

  private:
    std::shared_ptr<const Graph> root_;
    VList verts_;
    VList boundary_;
    MonitorSet mons_;
    int k_ = 0;
    VList folded_;
};

struct TableKey {
    std::vector<int> r;
    Mask X = 0;
    Mask T = 0;
    std::vector<int> f;  // image of the i-th set bit of T
    bool operator==(const TableKey& o) const {
        return X == o.X && T == o.T && r == o.r && f == o.f;
    }
};

struct TableKeyHash {
    std::size_t operator()(const TableKey& k) const {
        std::size_t h = std::hash<Mask>()(k.X * 1315423911u + k.T);
        for (int x : k.r) hash_mix(h, std::size_t(x) + 1);
        for (int x : k.f) hash_mix(h, std::size_t(x) + 131);
        return h;
    }
};

/// Sparse answer map: absent key = 0. Keys carry canonical (X, T) pairs.
class AnswerTable {
  public:
    AnswerTable() = default;
    explicit AnswerTable(Subproblem pi) : pi_(std::move(pi)) {}

    const Subproblem& subproblem() const { return pi_; }
    const std::unordered_map<TableKey, Count, TableKeyHash>& entries() const { return map_; }

    Count get(const TableKey& k) const {
        auto it = map_.find(k);
        return it == map_.end() ? Count(0) : it->second;
    }
    void add(const TableKey& k, const Count& c) {
        if (c == 0) return;
        auto [it, fresh] = map_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) map_.erase(it);
        }
    }
    std::size_t size() const { return map_.size(); }

    /// Lookup routed through canonization for possibly-raw (X, T) keys.
    Count get_canonical(const PatternCtx& ctx, std::vector<int> r, Mask X, Mask T,
                        std::vector<int> f) const;

  private:
    Subproblem pi_;
    std::unordered_map<TableKey, Count, TableKeyHash> map_;
};

/// Exact table by enumeration of injective maps; the base-case leaf solver.
AnswerTable enumerate_table(const PatternCtx& ctx, const Subproblem& pi, MapSemantics sem);

/// Split of a subproblem along a separation of its vertex set. The children
/// carry a designation monitor on the separator so recombination can pin the
/// exact separator preimage.
struct SplitParts {
    Subproblem child1, child2;
    VList sep;  // effective separator after folding
    int b = 0;
    std::vector<int> m1_of_parent, m2_of_parent;  // child monitor index per parent monitor
    int m1_designated = -1, m2_designated = -1;
};

SplitParts derive_split_subproblems(const Subproblem& pi, const VList& V1, const VList& V2, int b);

AnswerTable sparse_separation_combine(const PatternCtx& ctx, const Subproblem& pi,
                                      const SplitParts& split, const AnswerTable& a1,
                                      const AnswerTable& a2);

/// Tree-decomposition driven exact solver (splits + leaf enumeration).
AnswerTable base_case_solve(const PatternCtx& ctx, const Subproblem& pi, MapSemantics sem,
                            int leaf_threshold = 9);

/// sum over x_1..x_h of prod T[x_i][x_{i+1}] via the forward recurrence.
Count ie_sum_product(const std::vector<std::vector<Count>>& T, int h);
/// closed-walk variant: additionally weights by T[x_h][x_1].
Count ie_sum_product_wrap(const std::vector<std::vector<Count>>& T, int h);
/// closed-walk with a separate wrap matrix W[x_h][x_1].
Count ie_sum_product_wrap2(const std::vector<std::vector<Count>>& T,
                           const std::vector<std::vector<Count>>& W, int h);

}  // namespace plic
