#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "plic/graph.hpp"
#include "plic/plane_graph.hpp"

namespace plic {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct GraphText {
    Graph g;
    std::optional<std::vector<std::vector<int>>> rotations;
};

/// Text format: line `n m`, then m lines `u v` (0 <= u < v < n), then an
/// optional `embedding` section with n rotation lines. `#` starts a comment.
GraphText read_graph_text(std::istream& in);
GraphText read_graph_file(const std::string& path);
std::string write_graph_text(const Graph& g,
                             const std::vector<std::vector<int>>* rotations = nullptr);

/// Directed variant: edge lines are arcs `u v` without the u < v restriction.
Digraph read_digraph_text(std::istream& in);
Digraph read_digraph_file(const std::string& path);

}  // namespace plic
