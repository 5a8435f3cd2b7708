#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcs/bitset.hpp"

namespace mcs {

// Undirected simple graph, vertices 0..n-1, adjacency as per-vertex bitsets.
struct Graph {
    int n = 0;
    int m = 0;
    std::vector<Bitset> adj;  // open neighborhoods; adj[u].test(u) is always false
    std::vector<int> deg;
    int max_degree = 0;
    int degeneracy = 0;

    bool adjacent(int u, int v) const { return adj[u].test(v); }
};

inline Bitset vertex_set(const Graph& g) {
    Bitset s(g.n);
    for (int u = 0; u < g.n; ++u) s.set(u);
    return s;
}

namespace detail {

inline int compute_degeneracy(const Graph& g) {
    if (g.n == 0) return 0;
    Bitset alive = vertex_set(g);
    std::vector<int> d = g.deg;
    int k = 0;
    for (int round = 0; round < g.n; ++round) {
        int best = -1;
        alive.for_each([&](int u) {
            if (best < 0 || d[u] < d[best]) best = u;
        });
        k = std::max(k, d[best]);
        alive.reset(best);
        g.adj[best].for_each([&](int w) {
            if (alive.test(w)) --d[w];
        });
    }
    return k;
}

}  // namespace detail

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, Bitset(n));
    g.deg.assign(n, 0);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("build_graph: endpoint out of range: (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b)
            throw std::invalid_argument("build_graph: self-loop at " + std::to_string(a));
        if (g.adj[a].test(b))
            throw std::invalid_argument("build_graph: duplicate edge (" + std::to_string(a) +
                                        "," + std::to_string(b) + ")");
        g.adj[a].set(b);
        g.adj[b].set(a);
        ++g.deg[a];
        ++g.deg[b];
        ++g.m;
    }
    for (int u = 0; u < n; ++u) g.max_degree = std::max(g.max_degree, g.deg[u]);
    g.degeneracy = detail::compute_degeneracy(g);
    return g;
}

// N(u) ∩ X
inline Bitset neighbors_in(const Graph& g, int u, const Bitset& x) {
    return g.adj[u] & x;
}

// X \ N(u) \ {u}
inline Bitset non_neighbors_in(const Graph& g, int u, const Bitset& x) {
    Bitset out = difference(x, g.adj[u]);
    if (u < out.width()) out.reset(u);
    return out;
}

// Partition of vertices into structural-equivalence classes: u ~ v iff the
// open neighborhoods are identical. Class ids are ordered by smallest member.
struct EquivalenceClasses {
    std::vector<int> class_of;    // vertex -> class id
    std::vector<Bitset> members;  // class id -> member set

    int count() const { return int(members.size()); }
    const Bitset& psi(int u) const { return members[class_of[u]]; }
    bool equivalent(int u, int v) const { return class_of[u] == class_of[v]; }
};

inline EquivalenceClasses equivalence_classes(const Graph& g) {
    EquivalenceClasses ec;
    ec.class_of.assign(g.n, -1);
    std::vector<int> rep;  // first member of each class, for exact verification
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    for (int u = 0; u < g.n; ++u) {
        std::uint64_t h = 1469598103934665603ull;
        g.adj[u].for_each([&](int w) {
            h ^= std::uint64_t(w) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        });
        int cls = -1;
        for (int c : buckets[h])
            if (g.adj[rep[c]] == g.adj[u]) {
                cls = c;
                break;
            }
        if (cls < 0) {
            cls = int(rep.size());
            rep.push_back(u);
            ec.members.emplace_back(g.n);
            buckets[h].push_back(cls);
        }
        ec.class_of[u] = cls;
        ec.members[cls].set(u);
    }
    return ec;
}

}  // namespace mcs
