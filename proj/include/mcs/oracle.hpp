#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mcs/state.hpp"

namespace mcs {

struct OracleResult {
    int size = 0;
    std::vector<VertexPair> mapping;
};

namespace detail {

// Extends a partial injection of qs into g, one position per call level,
// rejecting as soon as an adjacency biconditional fails.
inline bool extend_injection(const Graph& q, const Graph& g, const std::vector<int>& qs,
                             std::vector<int>& gv, std::vector<char>& used) {
    std::size_t i = gv.size();
    if (i == qs.size()) return true;
    for (int cand = 0; cand < g.n; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i; ++j)
            if (q.adjacent(qs[j], qs[i]) != g.adjacent(gv[j], cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        used[cand] = 1;
        gv.push_back(cand);
        if (extend_injection(q, g, qs, gv, used)) return true;
        gv.pop_back();
        used[cand] = 0;
    }
    return false;
}

}  // namespace detail

// Exhaustive maximum common induced subgraph: all vertex subsets of Q by
// decreasing size, all injections into G. Deliberately naive; the reference
// answer the solvers are tested against.
inline OracleResult brute_force_mcs(const Graph& q, const Graph& g, int cap = 8) {
    if (q.n > 8 || g.n > 8)
        throw std::invalid_argument("brute_force_mcs: at most 8 vertices per side");
    int hi = std::min({q.n, g.n, cap});
    for (int k = hi; k >= 1; --k) {
        std::vector<int> qs(k);
        for (int i = 0; i < k; ++i) qs[i] = i;
        while (true) {
            std::vector<int> gv;
            gv.reserve(k);
            std::vector<char> used(g.n, 0);
            if (detail::extend_injection(q, g, qs, gv, used)) {
                OracleResult r;
                r.size = k;
                for (int i = 0; i < k; ++i) r.mapping.push_back({qs[i], gv[i]});
                return r;
            }
            int i = k - 1;
            while (i >= 0 && qs[i] == q.n - k + i) --i;
            if (i < 0) break;
            ++qs[i];
            for (int j = i + 1; j < k; ++j) qs[j] = qs[j - 1] + 1;
        }
    }
    return {};
}

// True iff pairs are injective on both sides and every two pairs satisfy the
// adjacency biconditional; malformed input (ids out of range) returns false.
inline bool verify_mapping(const Graph& q, const Graph& g, const std::vector<VertexPair>& pairs) {
    std::vector<char> su(q.n, 0), sv(g.n, 0);
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= q.n || v < 0 || v >= g.n) return false;
        if (su[u] || sv[v]) return false;
        su[u] = 1;
        sv[v] = 1;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (q.adjacent(pairs[i].u, pairs[j].u) != g.adjacent(pairs[i].v, pairs[j].v))
                return false;
    return true;
}

}  // namespace mcs
