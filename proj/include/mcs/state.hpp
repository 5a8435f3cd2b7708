#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mcs/graph.hpp"

namespace mcs {

struct VertexPair {
    int u;  // vertex of Q
    int v;  // vertex of G
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

// Pairs in inclusion order; injective on both sides and isomorphism-consistent
// by construction in the solver (verify_mapping checks it independently).
using PartialSolution = std::vector<VertexPair>;

struct LabelClass {
    Bitset x;  // vertices of Q
    Bitset y;  // vertices of G
    friend bool operator==(const LabelClass&, const LabelClass&) = default;
};

// Refined candidate set C as disjoint label classes; classes with an empty
// side are never stored.
struct CandidatePartition {
    std::vector<LabelClass> classes;

    bool empty() const { return classes.empty(); }
    int find_class_with(int u) const {
        for (int i = 0; i < int(classes.size()); ++i)
            if (classes[i].x.test(u)) return i;
        return -1;
    }
    friend bool operator==(const CandidatePartition&, const CandidatePartition&) = default;
};

struct ExclusionRow {
    int u;          // vertex of Q; row keys always lie on S's Q side
    Bitset values;  // A_u, vertices of G
};

// Forbidden pairs D stored row-wise as {u} x A_u.
struct ExclusionSet {
    std::vector<ExclusionRow> rows;

    bool empty() const { return rows.empty(); }
    const Bitset* row(int u) const {
        for (const auto& r : rows)
            if (r.u == u) return &r.values;
        return nullptr;
    }
};

struct Branch {
    PartialSolution s;
    CandidatePartition c;
    ExclusionSet d;
};

inline Branch initial_branch(const Graph& q, const Graph& g) {
    if (q.n == 0 || g.n == 0)
        throw std::invalid_argument("initial_branch: graphs must be nonempty");
    Branch b;
    b.c.classes.push_back({vertex_set(q), vertex_set(g)});
    return b;
}

// Split every class into its neighbor and non-neighbor halves with respect to
// the included pair; halves with an empty side are dropped. The result equals
// C\u\v with incompatible pairs removed.
inline CandidatePartition refine_include(const CandidatePartition& c, VertexPair pair,
                                         const Graph& q, const Graph& g) {
    int k = c.find_class_with(pair.u);
    if (k < 0 || !c.classes[k].y.test(pair.v))
        throw std::invalid_argument("refine_include: pair not in any class");
    CandidatePartition out;
    for (const auto& cls : c.classes) {
        Bitset nx = neighbors_in(q, pair.u, cls.x);
        Bitset ny = neighbors_in(g, pair.v, cls.y);
        if (nx.any() && ny.any()) out.classes.push_back({std::move(nx), std::move(ny)});
        Bitset bx = non_neighbors_in(q, pair.u, cls.x);
        Bitset by = non_neighbors_in(g, pair.v, cls.y);
        if (bx.any() && by.any()) out.classes.push_back({std::move(bx), std::move(by)});
    }
    return out;
}

inline CandidatePartition exclude_vertex(const CandidatePartition& c, int u) {
    CandidatePartition out;
    for (const auto& cls : c.classes) {
        if (!cls.x.test(u)) {
            out.classes.push_back(cls);
            continue;
        }
        Bitset x = cls.x;
        x.reset(u);
        if (x.any()) out.classes.push_back({std::move(x), cls.y});
    }
    return out;
}

inline CandidatePartition exclude_equivalents(const CandidatePartition& c, int u,
                                              const EquivalenceClasses& psi) {
    CandidatePartition out;
    for (const auto& cls : c.classes) {
        if (!cls.x.intersects(psi.psi(u))) {
            out.classes.push_back(cls);
            continue;
        }
        Bitset x = difference(cls.x, psi.psi(u));
        if (x.any()) out.classes.push_back({std::move(x), cls.y});
    }
    return out;
}

inline ExclusionSet extend_exclusion(const ExclusionSet& d, int u, const Bitset& tried) {
    if (tried.none()) return d;
    ExclusionSet out = d;
    for (auto& r : out.rows)
        if (r.u == u) {
            r.values |= tried;
            return out;
        }
    out.rows.push_back({u, tried});
    return out;
}

// Union of rows keyed by vertices equivalent to u (including u's own row).
inline Bitset excluded_values(const ExclusionSet& d, const EquivalenceClasses& psi, int u,
                              int g_width) {
    Bitset acc(g_width);
    for (const auto& r : d.rows)
        if (psi.class_of[r.u] == psi.class_of[u]) acc |= r.values;
    return acc;
}

}  // namespace mcs
