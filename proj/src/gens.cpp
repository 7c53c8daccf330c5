#include "plic/gens.hpp"

#include <array>

namespace plic {

Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

Graph path_graph_n(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph_n(int n) {
    if (n < 3) return path_graph_n(n);
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph ladder_graph(int rungs) { return grid_graph(2, std::max(1, rungs)); }

Graph stacked_book_graph(int spine, int pages_per_edge) {
    spine = std::max(2, spine);
    int n = spine + (spine - 1) * pages_per_edge;
    Graph g(n);
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    int next = spine;
    for (int i = 0; i + 1 < spine; ++i)
        for (int p = 0; p < pages_per_edge; ++p) {
            g.add_edge(i, next);
            g.add_edge(i + 1, next);
            ++next;
        }
    return g;
}

Graph random_maximal_planar(int n, Rng& rng) {
    if (n <= 0) return Graph(0);
    if (n == 1) return Graph(1);
    if (n == 2) {
        Graph g(2);
        g.add_edge(0, 1);
        return g;
    }
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    // triangulated faces as corner triples; splitting any keeps maximality
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
    for (int v = 3; v < n; ++v) {
        std::size_t fi = rng.below(faces.size());
        auto [a, b, c] = faces[fi];
        g.add_edge(std::min(a, v), std::max(a, v));
        g.add_edge(std::min(b, v), std::max(b, v));
        g.add_edge(std::min(c, v), std::max(c, v));
        faces[fi] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    return g;
}

Graph random_planar_graph(int n, Rng& rng) {
    Graph full = random_maximal_planar(n, rng);
    Graph g(n);
    for (auto [u, v] : full.edges())
        if (rng.below(100) < 70) g.add_edge(u, v);
    return g;
}

Graph random_planar_connected(int n, Rng& rng) {
    Graph full = random_maximal_planar(n, rng);
    auto edges = full.edges();
    rng.shuffle(edges);
    Graph g = full;
    for (auto [u, v] : edges) {
        if (rng.below(100) >= 40) continue;
        // drop the edge only if connectivity survives
        Graph h(n);
        for (auto [a, b] : g.edges())
            if (!(a == u && b == v)) h.add_edge(a, b);
        if (h.connected()) g = std::move(h);
    }
    return g;
}

Graph random_outerplanar(int n, Rng& rng) {
    if (n < 3) return path_graph_n(n);
    Graph g = cycle_graph_n(n);
    // random fan decomposition of the polygon: non-crossing chords
    std::vector<std::pair<int, int>> stack{{0, n - 1}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (b - a < 2) continue;
        int m = a + 1 + static_cast<int>(rng.below(std::uint64_t(b - a - 1)));
        if (rng.below(100) < 55) {
            if (!g.has_edge(std::min(a, m), std::max(a, m)) && m - a >= 2)
                g.add_edge(std::min(a, m), std::max(a, m));
            if (!g.has_edge(std::min(m, b), std::max(m, b)) && b - m >= 2)
                g.add_edge(std::min(m, b), std::max(m, b));
        }
        stack.push_back({a, m});
        stack.push_back({m, b});
    }
    return g;
}

const char* to_string(PatternKind k) {
    switch (k) {
        case PatternKind::Path: return "path";
        case PatternKind::Cycle: return "cycle";
        case PatternKind::Matching: return "matching";
        case PatternKind::IndependentSet: return "independent-set";
        case PatternKind::Triangles: return "triangles";
        case PatternKind::RandomConnected: return "random-connected";
    }
    return "?";
}

const char* to_string(HostKind k) {
    switch (k) {
        case HostKind::RandomPlanar: return "random-planar";
        case HostKind::Grid: return "grid";
        case HostKind::Outerplanar: return "outerplanar";
        case HostKind::Ladder: return "ladder";
        case HostKind::StackedBook: return "stacked-book";
    }
    return "?";
}

Graph make_pattern(PatternKind kind, int k, Rng& rng) {
    switch (kind) {
        case PatternKind::Path: return path_graph_n(k);
        case PatternKind::Cycle: return k >= 3 ? cycle_graph_n(k) : path_graph_n(k);
        case PatternKind::Matching: {
            Graph g(k);
            for (int i = 0; i + 1 < k; i += 2) g.add_edge(i, i + 1);
            return g;
        }
        case PatternKind::IndependentSet: return Graph(k);
        case PatternKind::Triangles: {
            Graph g(k);
            int i = 0;
            for (; i + 2 < k; i += 3) {
                g.add_edge(i, i + 1);
                g.add_edge(i, i + 2);
                g.add_edge(i + 1, i + 2);
            }
            if (i + 1 < k) g.add_edge(i, i + 1);
            return g;
        }
        case PatternKind::RandomConnected: return random_planar_connected(k, rng);
    }
    throw std::logic_error("unknown pattern kind");
}

Graph make_host(HostKind kind, int n, Rng& rng) {
    switch (kind) {
        case HostKind::RandomPlanar: return random_planar_graph(n, rng);
        case HostKind::Grid: {
            int rows = 2 + static_cast<int>(rng.below(3));
            int cols = std::max(1, (n + rows - 1) / rows);
            return grid_graph(rows, cols);
        }
        case HostKind::Outerplanar: return random_outerplanar(n, rng);
        case HostKind::Ladder: return ladder_graph(std::max(1, n / 2));
        case HostKind::StackedBook: {
            int spine = std::max(2, n / 3);
            int pages = std::max(1, (n - spine) / std::max(1, spine - 1));
            return stacked_book_graph(spine, pages);
        }
    }
    throw std::logic_error("unknown host kind");
}

Instance make_instance(const InstanceSpec& spec) {
    Rng rng(spec.seed);
    Instance inst;
    inst.spec = spec;
    inst.host = make_host(spec.host, spec.n, rng);
    inst.pattern = make_pattern(spec.pattern, spec.k, rng);
    return inst;
}

}  // namespace plic
