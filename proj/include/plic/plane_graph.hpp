#pragma once

#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "plic/graph.hpp"
#include "plic/util.hpp"

namespace plic {

struct NonPlanarError : std::runtime_error {
    NonPlanarError() : std::runtime_error("input graph is not planar") {}
};

/// Dart = directed edge (u -> v), the unit of face traversal.
struct Dart {
    int u = -1, v = -1;
    bool operator==(const Dart& o) const { return u == o.u && v == o.v; }
};

/// Embedded planar graph: per-vertex clockwise neighbor rotations plus a
/// designated outer face (one per connected component). Immutable once built.
class PlaneGraph {
  public:
    PlaneGraph() = default;

    /// Builds from rotations; validates Euler's formula per component.
    /// `outer_hint`: dart known to lie on the outer face (optional).
    PlaneGraph(Graph g, std::vector<std::vector<int>> rot,
               std::optional<Dart> outer_hint = std::nullopt);

    const Graph& graph() const { return g_; }
    int n() const { return g_.n(); }
    int m() const { return g_.m(); }

    const std::vector<int>& rotation(int v) const { return rot_[v]; }

    int face_count() const { return static_cast<int>(faces_.size()); }
    const std::vector<Dart>& face_darts(int f) const { return faces_[f]; }
    VList face_vertices(int f) const;
    int face_of(int u, int v) const;  // face of dart u->v
    int outer_face() const { return outer_face_; }
    int outer_face_of_component(int comp) const { return comp_outer_[comp]; }
    int component_of_vertex(int v) const { return comp_of_[v]; }
    int component_count() const { return static_cast<int>(comp_outer_.size()); }
    bool face_is_outer(int f) const;

    /// Vertices on the outer face walk of any component.
    VList outer_vertices() const;

    /// Edges added by triangulation (empty unless produced by triangulate()).
    const std::set<std::pair<int, int>>& delta() const { return delta_; }

    /// External labels (defaults to identity); subgraph extraction composes them.
    const std::vector<int>& labels() const { return label_; }
    VList labels_of(const VList& local) const;

    /// Peeling depth per vertex w.r.t. the designated outer faces (1-based).
    const std::vector<int>& peel_layers() const;
    int outerplanarity_index() const;

    /// Minimum peeling rounds over all outer-face choices (per component).
    int outerplanarity_index_best() const;

    /// Plane subgraph induced on `keep` (sorted local ids). The new outer
    /// face is the face containing `outer_dart` (a surviving dart), or the
    /// face absorbing deleted territory when the hint is omitted.
    PlaneGraph subgraph(const VList& keep, std::optional<Dart> outer_dart = std::nullopt) const;

    void validate() const;

    // used by builders (embed/triangulate/io); not part of the public contract
    void set_delta(std::set<std::pair<int, int>> d) { delta_ = std::move(d); }
    void set_labels(std::vector<int> l) { label_ = std::move(l); }

  private:
    void build_faces(std::optional<Dart> outer_hint);
    friend class PlaneBuilder;

    Graph g_;
    std::vector<std::vector<int>> rot_;
    std::vector<std::unordered_map<int, int>> pos_;  // pos_[v][u] = index of u in rot_[v]
    std::vector<std::vector<Dart>> faces_;
    std::unordered_map<std::int64_t, int> dart_face_;
    std::vector<int> comp_of_;
    std::vector<int> comp_outer_;
    int outer_face_ = -1;
    std::set<std::pair<int, int>> delta_;
    std::vector<int> label_;
    mutable std::vector<int> peel_cache_;
};

/// Planarity test + combinatorial embedding. Throws NonPlanarError.
PlaneGraph embed(const Graph& g);

/// Fan-triangulates every inner face (connected input only); added chords
/// are recorded in delta().
PlaneGraph triangulate(const PlaneGraph& g);

}  // namespace plic
