#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>

#include "plic/graph.hpp"
#include "plic/util.hpp"

namespace plic {

struct ColoredGraph {
    Graph g;
    std::vector<long> colors;  // positive integers; isomorphism preserves values
};

/// Canonical string: equal iff the colored graphs are isomorphic. Color
/// refinement with individualization backtracking; works on any graph.
std::string canonize(const ColoredGraph& cg);

bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

/// One isomorphism class of separations (X, Y) with Y = (V \ X) + T; the
/// separator T is pointwise fixed inside a class.
struct SepClass {
    Mask X = 0;
    Mask T = 0;
    Count mu = 0;  // number of class members below the catalog's Z
    std::string key;
};

/// Per-pattern context: automorphisms, canonical X-side representatives,
/// separation catalogs (cached), and the no-edge validity predicate.
class PatternCtx {
  public:
    explicit PatternCtx(const Graph& pattern);

    const Pattern& pattern() const { return p_; }
    int k() const { return p_.k; }
    Mask full() const { return p_.full(); }

    const std::vector<std::vector<int>>& automorphisms() const { return autos_; }

    /// (X, (V\X)+T) is a separation: T <= X and no edges X\T <-> V\X.
    bool valid_sep(Mask X, Mask T) const;

    /// Canonical representative of X among { a(X) : a in auto(P), a|T = id }.
    Mask canon_xside(Mask T, Mask X) const;

    /// Catalog of pairwise non-isomorphic separations below Z of order <= l,
    /// with multiplicities; built by separator enumeration + component
    /// grouping by canonical string.
    const std::vector<SepClass>& catalog(int max_order, Mask Z) const;

    /// All canonical (X, T) table keys of order <= bound (Z = V(P)).
    const std::vector<std::pair<Mask, Mask>>& table_classes(int bound) const;

    /// |Sep_{<=j}| for j = 0..l.
    std::vector<std::size_t> sigma_profile(int l) const;

    /// Brute-force route: every separation below Z of order <= l, deduped by
    /// pairwise separator-fixing automorphism tests. For validation only.
    std::vector<SepClass> catalog_bruteforce(int max_order, Mask Z) const;
    std::size_t raw_separation_count(int max_order, Mask Z) const;

    Mask apply_auto(const std::vector<int>& a, Mask X) const;

    /// Ways to split P[X] into a left part X1 and a designated overlap D
    /// (D <= X1, no edges X1\D <-> X\X1), grouped into orbits under
    /// automorphisms fixing T+D pointwise and X setwise.
    struct DecompClass {
        Mask X1 = 0;
        Mask D = 0;
        long mu = 1;
    };
    const std::vector<DecompClass>& decomp_classes(Mask X, Mask T) const;

  private:
    Pattern p_;
    std::vector<std::vector<int>> autos_;
    mutable std::map<std::pair<Mask, Mask>, Mask> canon_cache_;
    mutable std::map<std::pair<int, Mask>, std::vector<SepClass>> catalog_cache_;
    mutable std::map<int, std::vector<std::pair<Mask, Mask>>> table_class_cache_;
    mutable std::map<std::pair<Mask, Mask>, std::vector<DecompClass>> decomp_cache_;
};

}  // namespace plic
