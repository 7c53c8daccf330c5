#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "plic/graph_io.hpp"
#include "plic/planar_ops.hpp"
#include "plic/plane_graph.hpp"

using namespace plic;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph grid(int rows, int cols) {
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        if (n > 2 || i + 1 < n) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_CASE("embed K4 yields 4 faces") {
    PlaneGraph pg = embed(complete(4));
    CHECK(pg.face_count() == 4);
    pg.validate();
}

TEST_CASE("embed rejects K5 and K33") {
    CHECK_THROWS_AS(embed(complete(5)), NonPlanarError);
    Graph k33(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK_THROWS_AS(embed(k33), NonPlanarError);
}

TEST_CASE("embed of edgeless graph has one face per component") {
    Graph g(3);
    PlaneGraph pg = embed(g);
    CHECK(pg.face_count() == 3);  // one conceptual face per isolated vertex
    CHECK(pg.outer_vertices() == VList{0, 1, 2});
}

TEST_CASE("embed larger planar graphs") {
    for (auto g : {grid(3, 3), grid(4, 5), cycle_graph(9), path_graph(7)}) {
        PlaneGraph pg = embed(g);
        pg.validate();
        std::size_t darts = 0;
        for (int f = 0; f < pg.face_count(); ++f) darts += pg.face_darts(f).size();
        CHECK(darts == std::size_t(2) * g.m());
    }
}

TEST_CASE("petersen graph rejected") {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        g.add_edge(i, i + 5);
        g.add_edge(std::min(i + 5, (i + 2) % 5 + 5), std::max(i + 5, (i + 2) % 5 + 5));
    }
    CHECK_THROWS_AS(embed(g), NonPlanarError);
}

TEST_CASE("triangulate: triangle unchanged") {
    PlaneGraph pg = triangulate(embed(complete(3)));
    CHECK(pg.delta().empty());
}

TEST_CASE("triangulate: 4-cycle gains one chord") {
    PlaneGraph pg = triangulate(embed(cycle_graph(4)));
    CHECK(pg.delta().size() == 1);
    for (int f = 0; f < pg.face_count(); ++f)
        if (!pg.face_is_outer(f)) CHECK(pg.face_darts(f).size() == 3);
}

TEST_CASE("triangulate idempotent") {
    PlaneGraph pg = triangulate(embed(grid(3, 3)));
    std::size_t d1 = pg.delta().size();
    PlaneGraph pg2 = triangulate(pg);
    CHECK(pg2.delta().size() == d1);
}

TEST_CASE("outerplanarity: cycle is 1, 3x3 grid is 2, 7x7 grid is 4") {
    CHECK(embed(cycle_graph(6)).outerplanarity_index_best() == 1);
    CHECK(embed(grid(3, 3)).outerplanarity_index_best() == 2);
    CHECK(embed(grid(7, 7)).outerplanarity_index_best() == 4);
}

TEST_CASE("bfs layers: path and triangle") {
    Graph p = path_graph(3);
    auto r = bfs_layers(p, 0, 2);
    CHECK(r == std::vector<int>{0, 1, 0});
    Graph t = complete(3);
    auto r2 = bfs_layers(t, 0, 3);
    CHECK(r2 == std::vector<int>{0, 1, 1});
}

TEST_CASE("bfs layers: removing a residue class bounds outerplanarity") {
    Graph g = grid(5, 5);
    int modulus = 3;
    auto res = bfs_layers(g, 0, modulus);
    for (int drop = 0; drop < modulus; ++drop) {
        VList keep;
        for (int v = 0; v < g.n(); ++v)
            if (res[v] != drop) keep.push_back(v);
        Graph h = g.induced(keep);
        CHECK(embed(h).outerplanarity_index_best() <= modulus);
    }
}

TEST_CASE("baker slices cover all small subsets") {
    Graph g = grid(4, 4);
    int k = 2;
    auto slices = baker_slices(g, k);
    REQUIRE(slices.size() == std::size_t(k + 1));
    for (const auto& a : slices) CHECK(embed(g.induced(a)).outerplanarity_index_best() <= k);
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool covered = false;
            for (const auto& a : slices)
                if (vset_contains(a, u) && vset_contains(a, v)) covered = true;
            CHECK(covered);
        }
}

TEST_CASE("fundamental cycle of triangle and K4") {
    Graph t = complete(3);
    auto tree = bfs_tree(t, 0);
    std::pair<int, int> nt{1, 2};
    if (tree.count(nt)) nt = {0, 1};
    Cycle c = fundamental_cycle(t, tree, nt);
    CHECK(c.size() == 3);

    Graph k4 = complete(4);
    std::set<std::pair<int, int>> star{{0, 1}, {0, 2}, {0, 3}};
    Cycle c2 = fundamental_cycle(k4, star, {1, 2});
    CHECK(c2.size() == 3);
    CHECK_THROWS(fundamental_cycle(k4, star, {0, 1}));
}

TEST_CASE("cycle sides on 3x3 grid middle cycle") {
    Graph g = grid(3, 3);
    PlaneGraph pg = embed(g);
    // the 8-cycle around the centre vertex 4
    Cycle c{{0, 1, 2, 5, 8, 7, 6, 3}};
    CycleSides s = cycle_sides(pg, c);
    CHECK(s.strict_interior == VList{4});
    CHECK(s.strict_exterior.empty());
    CHECK(vset_union(s.interior, s.exterior) == VList{0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(vset_intersect(s.interior, s.exterior) == VList{0, 1, 2, 3, 5, 6, 7, 8});
}

TEST_CASE("interior and exterior extraction keep embeddings valid") {
    Graph g = grid(4, 4);
    PlaneGraph pg = embed(g);
    Cycle c{{5, 6, 10, 9}};
    PlaneGraph inside = extract_side(pg, c, true);
    PlaneGraph outside = extract_side(pg, c, false);
    inside.validate();
    outside.validate();
    CHECK(inside.labels_of({0, 1, 2, 3}) == VList{5, 6, 9, 10});
    CHECK(vset_contains(outside.labels(), 0));
    CHECK(inside.face_vertices(inside.outer_face()).size() == 4);
}

TEST_CASE("tree decomposition widths") {
    Graph tr = path_graph(6);
    auto td = tree_decomposition_of(tr);
    CHECK(td.width() == 1);
    auto td2 = tree_decomposition_of(cycle_graph(8));
    CHECK(td2.width() == 2);
    Graph g = grid(4, 4);
    auto td3 = tree_decomposition_of(g);
    validate_tree_decomposition(g, td3);
    CHECK(td3.width() <= 3 * embed(g).outerplanarity_index_best());
}

TEST_CASE("graph text round trip") {
    Graph g = grid(2, 3);
    std::string s = write_graph_text(g);
    std::istringstream in(s);
    GraphText gt = read_graph_text(in);
    CHECK(gt.g.n() == g.n());
    CHECK(gt.g.edges() == g.edges());
    CHECK(!gt.rotations.has_value());

    PlaneGraph pg = embed(g);
    std::vector<std::vector<int>> rot(g.n());
    for (int v = 0; v < g.n(); ++v) rot[v] = pg.rotation(v);
    std::string s2 = write_graph_text(g, &rot);
    std::istringstream in2(s2);
    GraphText gt2 = read_graph_text(in2);
    REQUIRE(gt2.rotations.has_value());
    PlaneGraph pg2(gt2.g, *gt2.rotations);
    pg2.validate();
    CHECK(write_graph_text(gt2.g, &*gt2.rotations) == s2);
}

TEST_CASE("plane subgraph peels consistently after deletions") {
    Graph g = grid(5, 5);
    PlaneGraph pg = embed(g);
    VList keep;
    for (int v = 0; v < g.n(); ++v)
        if (v != 12) keep.push_back(v);
    PlaneGraph sub = pg.subgraph(keep);
    sub.validate();
    CHECK(sub.outerplanarity_index_best() <= 2);
}
