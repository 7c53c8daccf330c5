#pragma once

#include <string>

#include "plic/graph.hpp"
#include "plic/util.hpp"

namespace plic {

Graph grid_graph(int rows, int cols);
Graph path_graph_n(int n);
Graph cycle_graph_n(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph ladder_graph(int rungs);

/// Spine path with triangle pages stacked along consecutive spine edges.
Graph stacked_book_graph(int spine, int pages_per_edge);

/// Random maximal planar graph via repeated face splits of a triangle.
Graph random_maximal_planar(int n, Rng& rng);

/// Random planar graph: maximal planar minus a random edge subset.
Graph random_planar_graph(int n, Rng& rng);

/// Same but guaranteed connected.
Graph random_planar_connected(int n, Rng& rng);

/// Random outerplanar: polygon plus random non-crossing chords.
Graph random_outerplanar(int n, Rng& rng);

enum class PatternKind { Path, Cycle, Matching, IndependentSet, Triangles, RandomConnected };
enum class HostKind { RandomPlanar, Grid, Outerplanar, Ladder, StackedBook };

const char* to_string(PatternKind k);
const char* to_string(HostKind k);

struct InstanceSpec {
    HostKind host = HostKind::RandomPlanar;
    int n = 10;
    PatternKind pattern = PatternKind::Path;
    int k = 3;
    std::uint64_t seed = 1;
};

struct Instance {
    Graph host;
    Graph pattern;
    InstanceSpec spec;
};

Graph make_pattern(PatternKind kind, int k, Rng& rng);
Graph make_host(HostKind kind, int n, Rng& rng);
Instance make_instance(const InstanceSpec& spec);

}  // namespace plic
