#include "pairdom/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace pairdom {

namespace {

[[noreturn]] void syntax(int line_no, const std::string& what) {
    throw Error(Errc::syntax, "line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph read_graph(std::istream& in) {
    bool have_header = false;
    int n = 0;
    long declared_m = 0;
    std::vector<Edge> edges;
    VertexLabels labels;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string type;
        if (!(ls >> type)) continue; // blank line
        if (type == "c") continue;

        if (type == "p") {
            if (have_header) syntax(line_no, "duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge")
                syntax(line_no, "expected 'p edge <n> <m>'");
            if (n < 0 || declared_m < 0) syntax(line_no, "negative count in header");
            std::string extra;
            if (ls >> extra) syntax(line_no, "trailing token '" + extra + "'");
            have_header = true;
        } else if (type == "e") {
            if (!have_header) syntax(line_no, "edge before header");
            int u, v;
            if (!(ls >> u >> v)) syntax(line_no, "expected 'e <u> <v>'");
            std::string extra;
            if (ls >> extra) syntax(line_no, "trailing token '" + extra + "'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw Error(Errc::out_of_range,
                            "line " + std::to_string(line_no) + ": vertex out of 1.." +
                                std::to_string(n));
            edges.emplace_back(u - 1, v - 1);
        } else if (type == "l") {
            if (!have_header) syntax(line_no, "label before header");
            int v;
            std::string role;
            if (!(ls >> v >> role)) syntax(line_no, "expected 'l <v> <role>'");
            std::string extra;
            if (ls >> extra) syntax(line_no, "trailing token '" + extra + "'");
            if (v < 1 || v > n)
                throw Error(Errc::out_of_range,
                            "line " + std::to_string(line_no) + ": vertex out of 1.." +
                                std::to_string(n));
            if (labels.count(v - 1)) syntax(line_no, "duplicate label for vertex");
            labels[v - 1] = role;
        } else {
            syntax(line_no, "unknown line type '" + type + "'");
        }
    }
    if (!have_header) throw Error(Errc::syntax, "missing 'p edge' header");
    if (long(edges.size()) != declared_m)
        throw Error(Errc::syntax, "header declares " + std::to_string(declared_m) +
                                      " edges, file has " + std::to_string(edges.size()));
    return Graph(n, edges, std::move(labels));
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edge_list()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    for (const auto& [v, role] : g.labels()) out << "l " << v + 1 << ' ' << role << '\n';
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io, "cannot open " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io, "cannot open " + path + " for writing");
    write_graph(out, g);
    if (!out) throw Error(Errc::io, "write failed for " + path);
}

} // namespace pairdom
