#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mcs/state.hpp"

namespace mcs {

// Per-class split used by the equivalence-aware bound:
//   X_L = X ∩ Ψ(rep), X_R = X \ X_L,
//   Y_L = Y ∩ (union of exclusion rows keyed by Ψ(rep)), Y_R = Y \ Y_L.
struct ClassSplit {
    Bitset x_left, x_right, y_left, y_right;
};

// |S| + Σ min(|X_i|,|Y_i|)
inline int ub_existing(const PartialSolution& s, const CandidatePartition& c) {
    int ub = int(s.size());
    for (const auto& cls : c.classes) ub += std::min(cls.x.count(), cls.y.count());
    return ub;
}

inline ClassSplit split_class(const Bitset& x, const Bitset& y, const ExclusionSet& d,
                              const EquivalenceClasses& psi, int rep) {
    if (rep < 0 || rep >= x.width() || !x.test(rep))
        throw std::invalid_argument("split_class: representative not in X");
    ClassSplit sp;
    sp.x_left = x & psi.psi(rep);
    sp.x_right = difference(x, sp.x_left);
    sp.y_left = y & excluded_values(d, psi, rep, y.width());
    sp.y_right = difference(y, sp.y_left);
    return sp;
}

// min{|X_R|,|Y|} + min{|X_L|,|Y_R|,max{|Y|-|X_R|,0}}
inline int ub_class_ve(const ClassSplit& sp, int y_size) {
    assert(y_size == sp.y_left.count() + sp.y_right.count());
    int xl = sp.x_left.count();
    int xr = sp.x_right.count();
    int yr = sp.y_right.count();
    return std::min(xr, y_size) + std::min({xl, yr, std::max(y_size - xr, 0)});
}

// |S| + Σ ub_class_ve; rep_of(class index, X) picks each class's representative.
template <typename RepFn>
int ub_ve(const PartialSolution& s, const CandidatePartition& c, const ExclusionSet& d,
          const EquivalenceClasses& psi, RepFn&& rep_of) {
    int ub = int(s.size());
    for (int i = 0; i < int(c.classes.size()); ++i) {
        const auto& cls = c.classes[i];
        ClassSplit sp = split_class(cls.x, cls.y, d, psi, rep_of(i, cls.x));
        ub += ub_class_ve(sp, cls.y.count());
    }
    return ub;
}

inline int ub_ve(const PartialSolution& s, const CandidatePartition& c, const ExclusionSet& d,
                 const EquivalenceClasses& psi) {
    return ub_ve(s, c, d, psi, [](int, const Bitset& x) { return x.find_first(); });
}

}  // namespace mcs
