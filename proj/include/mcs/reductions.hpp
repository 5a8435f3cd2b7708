#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mcs/state.hpp"

namespace mcs {

// True iff some exclusion row keyed by a vertex equivalent to u contains v:
// the first-group child for <u,v> would only revisit subgraphs isomorphic to
// ones covered when <u',v> was expanded.
inline bool first_group_prunable(int u, int v, const ExclusionSet& d,
                                 const EquivalenceClasses& psi) {
    for (const auto& r : d.rows)
        if (psi.class_of[r.u] == psi.class_of[u] && r.values.test(v)) return true;
    return false;
}

// First v of `order` (the first-group value order over Y_of_u) such that for
// every class either u,v are adjacent to everything else in it on both sides,
// or to nothing on both sides; such a pair belongs to some largest common
// subgraph in the branch, so siblings can be skipped.
inline std::optional<int> maximality_pair(const CandidatePartition& c, int u,
                                          const Bitset& y_of_u, const Graph& q, const Graph& g,
                                          const std::vector<int>& order) {
    if (c.find_class_with(u) < 0)
        throw std::invalid_argument("maximality_pair: u not in any class");
    for (int v : order) {
        if (!y_of_u.test(v)) continue;
        bool ok = true;
        for (const auto& cls : c.classes) {
            Bitset nx = neighbors_in(q, u, cls.x);
            Bitset ny = neighbors_in(g, v, cls.y);
            if (nx.none() && ny.none()) continue;
            Bitset xrest = cls.x;
            xrest.reset(u);
            Bitset yrest = cls.y;
            yrest.reset(v);
            if (nx == xrest && ny == yrest) continue;
            ok = false;
            break;
        }
        if (ok) return v;
    }
    return std::nullopt;
}

// The single forced child (S+<u,v>, refine(C), D). D must stay as it is: a
// new row for u could only ever fire for a twin of u still in the class, and
// the swapped-out twin solutions live in this same subtree rather than in an
// already-explored sibling, so excluding them would discard solutions that
// are found nowhere else (e.g. two isolated vertices against four lose the
// second pair).
inline Branch apply_maximality(const Branch& b, int u, int v,
                               [[maybe_unused]] const Bitset& y_of_u,
                               const Graph& q, const Graph& g) {
    assert(y_of_u.test(v));
    Branch child;
    child.s = b.s;
    child.s.push_back({u, v});
    child.c = refine_include(b.c, {u, v}, q, g);
    child.d = b.d;
    return child;
}

}  // namespace mcs
