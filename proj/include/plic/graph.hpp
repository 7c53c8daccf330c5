#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plic/util.hpp"

namespace plic {

/// Simple undirected graph with adjacency bitsets (rows of 64-bit blocks).
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) { reset(n); }

    void reset(int n);
    int n() const { return n_; }
    int m() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    std::vector<std::pair<int, int>> edges() const;

    /// Induced subgraph on `verts` keeping original vertex ids valid via
    /// the returned mapping new->old. (Rarely used; most code works on
    /// vertex subsets of a fixed root graph instead.)
    Graph induced(const VList& verts, std::vector<int>* new_to_old = nullptr) const;

    bool connected() const;
    std::vector<VList> components() const;
    VList component_of(int v) const;

    bool is_connected_subset(const VList& verts) const;
    std::vector<VList> components_within(const VList& verts) const;

    /// BFS distances from src restricted to `within` (-1 = unreachable).
    std::vector<int> bfs_dist(int src, const VList* within = nullptr) const;

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<std::uint64_t>> bits_;
};

/// Pattern-side view: adjacency masks for fast induced-map checks (k <= 20).
struct Pattern {
    Graph g;
    int k = 0;
    std::vector<Mask> adj;  // adj[v] = neighbor mask

    Pattern() = default;
    explicit Pattern(const Graph& gg);

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    Mask full() const { return (k == 0) ? 0 : ((Mask(1) << k) - 1); }

    /// Vertices of X with a neighbor outside X.
    Mask boundary(Mask X) const;
    /// True iff no edges between A and B (disjoint masks assumed).
    bool no_edges_between(Mask A, Mask B) const;
    std::vector<Mask> component_masks() const;
    std::vector<Mask> component_masks_within(Mask X) const;
};

/// Directed graph for the arc-gadget counting entry point.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    void add_arc(int u, int v) { arcs.emplace_back(u, v); }
    bool has_arc(int u, int v) const;
    Graph underlying() const;
};

}  // namespace plic
