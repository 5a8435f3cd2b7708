#pragma once

#include <climits>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcs/graph.hpp"
#include "mcs/solver.hpp"

namespace mcs {

enum class GraphFormat { edgelist, lad };

inline GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "lad") return GraphFormat::lad;
    throw std::runtime_error("unknown graph format '" + name + "'");
}

namespace detail {

inline std::vector<std::string> content_lines(const std::string& text, bool allow_comments) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        if (allow_comments && line[pos] == '#') continue;
        out.push_back(line);
    }
    return out;
}

inline std::vector<int> int_tokens(const std::string& line, const char* what) {
    std::istringstream in(line);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = -1;
        try {
            v = std::stoll(tok, &used);
        } catch (...) {
            used = 0;
        }
        if (used != tok.size() || v < 0 || v > INT_MAX)
            throw std::runtime_error(std::string(what) + ": bad token '" + tok + "'");
        out.push_back(int(v));
    }
    return out;
}

}  // namespace detail

// First non-comment line "n m", then m lines "a b", 0-based; '#' comments.
inline Graph parse_edgelist(const std::string& text) {
    auto lines = detail::content_lines(text, true);
    if (lines.empty()) throw std::runtime_error("edgelist: missing header");
    auto head = detail::int_tokens(lines[0], "edgelist header");
    if (head.size() != 2) throw std::runtime_error("edgelist: header must be 'n m'");
    int n = head[0], m = head[1];
    if (int(lines.size()) - 1 != m)
        throw std::runtime_error("edgelist: expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(lines.size() - 1));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 1; i <= m; ++i) {
        auto t = detail::int_tokens(lines[i], "edgelist edge");
        if (t.size() != 2) throw std::runtime_error("edgelist: edge line must be 'a b'");
        edges.emplace_back(t[0], t[1]);
    }
    try {
        return build_graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edgelist: ") + e.what());
    }
}

// Line 1 "n"; line i+1 "deg neighbors..." for vertex i, 0-based; adjacency
// lists must be mutually consistent.
inline Graph parse_lad(const std::string& text) {
    auto lines = detail::content_lines(text, false);
    if (lines.empty()) throw std::runtime_error("lad: missing vertex count");
    auto head = detail::int_tokens(lines[0], "lad header");
    if (head.size() != 1) throw std::runtime_error("lad: first line must be the vertex count");
    int n = head[0];
    if (int(lines.size()) - 1 != n)
        throw std::runtime_error("lad: expected " + std::to_string(n) + " adjacency lines, got " +
                                 std::to_string(lines.size() - 1));
    std::vector<Bitset> listed(n, Bitset(n));
    for (int u = 0; u < n; ++u) {
        auto t = detail::int_tokens(lines[u + 1], "lad row");
        if (t.empty() || int(t.size()) - 1 != t[0])
            throw std::runtime_error("lad: row " + std::to_string(u) +
                                     " does not match its declared degree");
        for (std::size_t j = 1; j < t.size(); ++j) {
            int w = t[j];
            if (w < 0 || w >= n)
                throw std::runtime_error("lad: neighbor out of range in row " + std::to_string(u));
            if (w == u) throw std::runtime_error("lad: self-loop in row " + std::to_string(u));
            if (listed[u].test(w))
                throw std::runtime_error("lad: duplicate neighbor in row " + std::to_string(u));
            listed[u].set(w);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            if (listed[u].test(w) != listed[w].test(u))
                throw std::runtime_error("lad: asymmetric adjacency between " + std::to_string(u) +
                                         " and " + std::to_string(w));
            if (listed[u].test(w)) edges.emplace_back(u, w);
        }
    return build_graph(n, edges);
}

inline Graph parse_graph(const std::string& text, GraphFormat f) {
    return f == GraphFormat::edgelist ? parse_edgelist(text) : parse_lad(text);
}

inline Graph load_graph(const std::string& path, GraphFormat f) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str(), f);
}

inline std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m << '\n';
    for (int u = 0; u < g.n; ++u)
        g.adj[u].for_each([&](int v) {
            if (v > u) out << u << ' ' << v << '\n';
        });
    return out.str();
}

inline std::string emit_lad(const Graph& g) {
    std::ostringstream out;
    out << g.n << '\n';
    for (int u = 0; u < g.n; ++u) {
        out << g.deg[u];
        g.adj[u].for_each([&](int v) { out << ' ' << v; });
        out << '\n';
    }
    return out.str();
}

struct ReportRow {
    std::string instance;
    std::string algorithm;
    int nq = 0;
    int ng = 0;
    SolveReport report;
};

inline std::string csv_header() {
    return "instance,algorithm,nq,ng,best_size,branches,elapsed_s,terminated,similarity";
}

inline std::string format_csv_row(const ReportRow& r) {
    char elapsed[32], sim[32];
    std::snprintf(elapsed, sizeof elapsed, "%.6f", r.report.elapsed_s);
    sim[0] = '\0';
    if (r.report.similarity) std::snprintf(sim, sizeof sim, "%.6g", *r.report.similarity);
    std::ostringstream out;
    out << r.instance << ',' << r.algorithm << ',' << r.nq << ',' << r.ng << ','
        << r.report.best_size << ',' << r.report.branches << ',' << elapsed << ','
        << to_string(r.report.terminated) << ',' << sim;
    return out.str();
}

inline std::string write_report_csv(const std::vector<ReportRow>& rows) {
    std::string out = csv_header() + "\n";
    for (const auto& r : rows) out += format_csv_row(r) + "\n";
    return out;
}

}  // namespace mcs
