#pragma once

#include <optional>

#include "plic/plane_graph.hpp"

namespace plic {

/// Residue of BFS distance mod `modulus`, per connected component. The
/// component containing v0 is rooted at v0; other components at their
/// smallest vertex.
std::vector<int> bfs_layers(const Graph& g, int v0, int modulus);

/// Baker slices A_1..A_{k+1}: A_i drops the i-th distance-residue class.
std::vector<VList> baker_slices(const Graph& g, int k);

/// Simple cycle given by its vertex sequence (closed; edges consecutive).
struct Cycle {
    std::vector<int> verts;
    int size() const { return static_cast<int>(verts.size()); }
};

void validate_cycle(const PlaneGraph& g, const Cycle& c);

/// The unique cycle in spanning_tree + nontree_edge.
Cycle fundamental_cycle(const Graph& g, const std::set<std::pair<int, int>>& tree_edges,
                        std::pair<int, int> nontree_edge);

/// BFS spanning tree edge set rooted at `root`.
std::set<std::pair<int, int>> bfs_tree(const Graph& g, int root);

/// Partition of the embedding along a cycle.
struct CycleSides {
    VList interior;    // includes V(C)
    VList exterior;    // includes V(C)
    VList strict_interior;
    VList strict_exterior;
    std::vector<char> face_inside;  // per face id of the host embedding
};

CycleSides cycle_sides(const PlaneGraph& g, const Cycle& c);

/// The closed side of `c` as a plane graph whose outer face is the cycle
/// (interior side when `interior`, otherwise the exterior flipped into a
/// disk). Labels carry the host's vertex ids.
PlaneGraph extract_side(const PlaneGraph& g, const Cycle& c, bool interior);

struct TreeDecomposition {
    std::vector<VList> bags;
    std::vector<int> parent;  // -1 at the root
    int width() const;
};

void validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Valid tree decomposition via greedy min-fill elimination. Width is
/// certified by the validator and recorded by callers; on peel-bounded
/// embeddings it lands well under 3x the outerplanarity index.
TreeDecomposition tree_decomposition_of(const Graph& g);
TreeDecomposition tree_decomposition_kouterplanar(const PlaneGraph& g);

}  // namespace plic
