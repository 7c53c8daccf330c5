#include "plic/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace plic {

namespace {

// next content line with comments and blanks stripped; false at EOF
bool next_line(std::istream& in, std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        out = line.substr(a, b - a + 1);
        return true;
    }
    return false;
}

std::vector<long> ints_of(const std::string& s) {
    std::istringstream ss(s);
    std::vector<long> out;
    long x;
    while (ss >> x) out.push_back(x);
    if (!ss.eof()) throw ParseError("malformed integer line: " + s);
    return out;
}

}  // namespace

GraphText read_graph_text(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("empty input");
    auto hdr = ints_of(line);
    if (hdr.size() != 2 || hdr[0] < 0 || hdr[1] < 0) throw ParseError("expected header 'n m'");
    int n = static_cast<int>(hdr[0]);
    long m = hdr[1];
    GraphText out;
    out.g.reset(n);
    for (long i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw ParseError("missing edge line");
        auto e = ints_of(line);
        if (e.size() != 2) throw ParseError("expected edge 'u v'");
        long u = e[0], v = e[1];
        if (!(0 <= u && u < v && v < n)) throw ParseError("edge endpoints out of range or unordered");
        out.g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(in, line)) {
        if (line != "embedding") throw ParseError("unexpected trailing content: " + line);
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) {
            if (out.g.degree(v) == 0) {
                rot[v] = {};
                // a rotation line must still be present (possibly blank means
                // skipped by the comment stripper), so only read when needed
                continue;
            }
            if (!next_line(in, line)) throw ParseError("missing rotation line");
            auto r = ints_of(line);
            for (long x : r) {
                if (x < 0 || x >= n) throw ParseError("rotation vertex out of range");
                rot[v].push_back(static_cast<int>(x));
            }
        }
        out.rotations = std::move(rot);
    }
    return out;
}

GraphText read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return read_graph_text(f);
}

std::string write_graph_text(const Graph& g, const std::vector<std::vector<int>>* rotations) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (rotations) {
        out << "embedding\n";
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) == 0) continue;
            const auto& r = (*rotations)[v];
            for (std::size_t i = 0; i < r.size(); ++i) out << r[i] << (i + 1 < r.size() ? ' ' : '\n');
        }
    }
    return out.str();
}

Digraph read_digraph_text(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("empty input");
    auto hdr = ints_of(line);
    if (hdr.size() != 2 || hdr[0] < 0 || hdr[1] < 0) throw ParseError("expected header 'n m'");
    Digraph d;
    d.n = static_cast<int>(hdr[0]);
    for (long i = 0; i < hdr[1]; ++i) {
        if (!next_line(in, line)) throw ParseError("missing arc line");
        auto e = ints_of(line);
        if (e.size() != 2) throw ParseError("expected arc 'u v'");
        if (e[0] < 0 || e[0] >= d.n || e[1] < 0 || e[1] >= d.n || e[0] == e[1])
            throw ParseError("arc endpoints out of range");
        if (d.has_arc(static_cast<int>(e[0]), static_cast<int>(e[1]))) throw ParseError("duplicate arc");
        d.add_arc(static_cast<int>(e[0]), static_cast<int>(e[1]));
    }
    return d;
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return read_digraph_text(f);
}

}  // namespace plic
