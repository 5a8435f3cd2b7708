#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "mcs/bounds.hpp"
#include "mcs/graph.hpp"
#include "mcs/oracle.hpp"
#include "mcs/state.hpp"

namespace support {

inline mcs::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return mcs::build_graph(n, edges);
}

inline mcs::Bitset bs(int width, std::initializer_list<int> ids) {
    mcs::Bitset b(width);
    for (int i : ids) b.set(i);
    return b;
}

inline std::vector<mcs::VertexPair> flatten(const mcs::CandidatePartition& c) {
    std::vector<mcs::VertexPair> out;
    for (const auto& cls : c.classes)
        cls.x.for_each([&](int u) { cls.y.for_each([&](int v) { out.push_back({u, v}); }); });
    return out;
}

// O(n^3) pairwise comparison; classes listed by smallest member.
inline std::vector<std::vector<int>> brute_equiv(const mcs::Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> assigned(g.n, 0);
    for (int u = 0; u < g.n; ++u) {
        if (assigned[u]) continue;
        out.push_back({u});
        assigned[u] = 1;
        for (int v = u + 1; v < g.n; ++v) {
            if (assigned[v]) continue;
            bool same = true;
            for (int w = 0; w < g.n; ++w)
                if (g.adjacent(u, w) != g.adjacent(v, w)) {
                    same = false;
                    break;
                }
            if (same) {
                out.back().push_back(v);
                assigned[v] = 1;
            }
        }
    }
    return out;
}

// Size of the best common subgraph completing S from the candidate pairs of C,
// where a pair <u,v> is unusable if v lies in an exclusion row keyed by any
// vertex equivalent to u (the exclusions the ub_ve derivation relies on).
inline int best_completion(const mcs::Graph& q, const mcs::Graph& g, const mcs::PartialSolution& s,
                           const mcs::CandidatePartition& c, const mcs::ExclusionSet& d,
                           const mcs::EquivalenceClasses& psi) {
    std::vector<mcs::VertexPair> pairs;
    for (const auto& cls : c.classes)
        cls.x.for_each([&](int u) {
            mcs::Bitset excl = mcs::excluded_values(d, psi, u, g.n);
            cls.y.for_each([&](int v) {
                if (!excl.test(v)) pairs.push_back({u, v});
            });
        });
    // how many distinct Q vertices remain from index i on, for pruning
    std::vector<int> suffix_u(pairs.size() + 1, 0);
    for (int i = int(pairs.size()) - 1; i >= 0; --i) {
        bool seen = false;
        for (int j = i + 1; j < int(pairs.size()) && !seen; ++j) seen = pairs[j].u == pairs[i].u;
        suffix_u[i] = suffix_u[i + 1] + (seen ? 0 : 1);
    }
    std::vector<mcs::VertexPair> chosen;
    int best = 0;
    std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
        best = std::max(best, int(chosen.size()));
        if (idx == pairs.size() || int(chosen.size()) + suffix_u[idx] <= best) return;
        mcs::VertexPair p = pairs[idx];
        bool ok = true;
        for (const auto& e : s)
            if (e.u == p.u || e.v == p.v || q.adjacent(e.u, p.u) != g.adjacent(e.v, p.v)) {
                ok = false;
                break;
            }
        if (ok)
            for (const auto& e : chosen)
                if (e.u == p.u || e.v == p.v || q.adjacent(e.u, p.u) != g.adjacent(e.v, p.v)) {
                    ok = false;
                    break;
                }
        if (ok) {
            chosen.push_back(p);
            dfs(idx + 1);
            chosen.pop_back();
        }
        dfs(idx + 1);
    };
    dfs(0);
    return int(s.size()) + best;
}

struct CommandResult {
    int status = -1;
    std::string out;
};

inline CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace support
