#pragma once

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcs/bounds.hpp"
#include "mcs/reductions.hpp"
#include "mcs/state.hpp"

namespace mcs {

enum class Algorithm { mcsplit, rrsplit };
enum class RepPolicy { smallest_id, seeded_random };
enum class ClassOrder { smallest_max_side, first_class };
enum class VertexOrder { max_degree, min_id };
enum class ValueOrder { degree_desc, id_asc };
enum class Terminated { optimal, time_limit, branch_limit };

inline const char* to_string(Terminated t) {
    switch (t) {
        case Terminated::optimal: return "optimal";
        case Terminated::time_limit: return "time_limit";
        case Terminated::branch_limit: return "branch_limit";
    }
    return "?";
}

// Called once per branch entry with the branch about to be processed.
using BranchObserver =
    std::function<void(const PartialSolution&, const CandidatePartition&, const ExclusionSet&)>;

struct SolverConfig {
    Algorithm algorithm = Algorithm::rrsplit;
    // rrsplit ingredient toggles (ignored by mcsplit):
    bool ve_reductions = true;  // first-group skip + tried rows + second group drops Psi(u)
    bool maximality = true;     // forced single child when the maximality condition holds
    bool ve_bound = true;       // prune with ub_ve instead of ub_existing
    double time_limit_s = 1800.0;
    std::uint64_t branch_limit = std::numeric_limits<std::uint64_t>::max();
    RepPolicy rep_policy = RepPolicy::smallest_id;
    std::uint32_t seed = 0;
    ClassOrder class_order = ClassOrder::smallest_max_side;
    VertexOrder vertex_order = VertexOrder::max_degree;
    ValueOrder value_order = ValueOrder::degree_desc;
    BranchObserver observer;  // test instrumentation; leave empty for plain runs
};

struct SolveReport {
    int best_size = 0;
    PartialSolution best_mapping;
    std::uint64_t branches = 0;
    double elapsed_s = 0.0;
    Terminated terminated = Terminated::optimal;
    std::optional<double> similarity;  // |S*| / min(|V_Q|,|V_G|), set when optimal
};

inline std::pair<int, int> select_branch(const CandidatePartition& c, const Graph& q,
                                         ClassOrder class_order, VertexOrder vertex_order) {
    if (c.empty()) throw std::invalid_argument("select_branch: empty candidate partition");
    int ci = 0;
    if (class_order == ClassOrder::smallest_max_side) {
        int best = INT_MAX;
        for (int i = 0; i < int(c.classes.size()); ++i) {
            int mx = std::max(c.classes[i].x.count(), c.classes[i].y.count());
            if (mx < best) {
                best = mx;
                ci = i;
            }
        }
    }
    const Bitset& x = c.classes[ci].x;
    int u = -1;
    if (vertex_order == VertexOrder::max_degree) {
        x.for_each([&](int w) {
            if (u < 0 || q.deg[w] > q.deg[u]) u = w;  // ascending visit keeps smallest id on ties
        });
    } else {
        u = x.find_first();
    }
    return {ci, u};
}

inline std::vector<int> order_values(const Bitset& y, const Graph& g, ValueOrder policy) {
    std::vector<int> out = y.to_vector();
    if (policy == ValueOrder::degree_desc)
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            if (g.deg[a] != g.deg[b]) return g.deg[a] > g.deg[b];
            return a < b;
        });
    return out;
}

namespace detail {

class SearchContext {
public:
    SearchContext(const Graph& q, const Graph& g, const SolverConfig& cfg)
        : q_(q),
          g_(g),
          cfg_(cfg),
          psi_(equivalence_classes(q)),
          rng_(cfg.seed),
          max_size_(std::min(q.n, g.n)) {}

    SolveReport run() {
        auto t0 = std::chrono::steady_clock::now();
        deadline_ = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(cfg_.time_limit_s));
        Branch root = initial_branch(q_, g_);
        if (cfg_.algorithm == Algorithm::mcsplit)
            mcsplit_rec(root.s, root.c);
        else
            rrsplit_rec(root.s, root.c, root.d);
        SolveReport rep;
        rep.best_size = int(best_.size());
        rep.best_mapping = best_;
        rep.branches = branches_;
        rep.terminated = reason_;
        rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (rep.terminated == Terminated::optimal)
            rep.similarity = double(rep.best_size) / double(max_size_);
        return rep;
    }

private:
    // Entry bookkeeping shared by both procedures: count the branch, update
    // the incumbent, stop on limits. Returns false if the caller must return.
    bool enter(const PartialSolution& s, const CandidatePartition& c, const ExclusionSet& d) {
        ++branches_;
        if (cfg_.observer) cfg_.observer(s, c, d);
        if (int(s.size()) > int(best_.size())) {
            best_ = s;
            if (int(best_.size()) == max_size_) {  // nothing larger exists
                stop_ = true;
                return false;
            }
        }
        if (branches_ >= cfg_.branch_limit) {
            stop_ = true;
            reason_ = Terminated::branch_limit;
            return false;
        }
        if (std::chrono::steady_clock::now() >= deadline_) {
            stop_ = true;
            reason_ = Terminated::time_limit;
            return false;
        }
        return true;
    }

    void mcsplit_rec(PartialSolution& s, const CandidatePartition& c) {
        if (stop_) return;
        if (!enter(s, c, empty_d_)) return;
        if (c.empty()) return;
        if (ub_existing(s, c) <= int(best_.size())) return;
        auto [ci, u] = select_branch(c, q_, cfg_.class_order, cfg_.vertex_order);
        for (int v : order_values(c.classes[ci].y, g_, cfg_.value_order)) {
            CandidatePartition child = refine_include(c, {u, v}, q_, g_);
            s.push_back({u, v});
            mcsplit_rec(s, child);
            s.pop_back();
            if (stop_) return;
        }
        mcsplit_rec(s, exclude_vertex(c, u));
    }

    void rrsplit_rec(PartialSolution& s, const CandidatePartition& c, const ExclusionSet& d) {
        if (stop_) return;
        if (!enter(s, c, d)) return;
        if (c.empty()) return;
        int ub = cfg_.ve_bound ? ub_ve(s, c, d, psi_, [this](int, const Bitset& x) {
            return choose_rep(x);
        })
                               : ub_existing(s, c);
        if (ub <= int(best_.size())) return;
        auto [ci, u] = select_branch(c, q_, cfg_.class_order, cfg_.vertex_order);
        const Bitset& y = c.classes[ci].y;
        std::vector<int> order = order_values(y, g_, cfg_.value_order);
        if (cfg_.maximality) {
            if (auto v = maximality_pair(c, u, y, q_, g_, order)) {
                Branch child = apply_maximality({s, c, d}, u, *v, y, q_, g_);
                rrsplit_rec(child.s, child.c, child.d);
                return;
            }
        }
        Bitset tried(g_.n);
        for (int v : order) {
            if (cfg_.ve_reductions && first_group_prunable(u, v, d, psi_)) continue;
            CandidatePartition child_c = refine_include(c, {u, v}, q_, g_);
            ExclusionSet child_d = cfg_.ve_reductions ? extend_exclusion(d, u, tried) : d;
            s.push_back({u, v});
            rrsplit_rec(s, child_c, child_d);
            s.pop_back();
            if (stop_) return;
            if (cfg_.ve_reductions) tried.set(v);
        }
        rrsplit_rec(s, cfg_.ve_reductions ? exclude_equivalents(c, u, psi_) : exclude_vertex(c, u),
                    d);
    }

    int choose_rep(const Bitset& x) {
        if (cfg_.rep_policy == RepPolicy::smallest_id) return x.find_first();
        std::vector<int> ids = x.to_vector();
        return ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng_)];
    }

    const Graph& q_;
    const Graph& g_;
    const SolverConfig& cfg_;
    EquivalenceClasses psi_;
    std::mt19937 rng_;
    int max_size_;
    std::chrono::steady_clock::time_point deadline_;
    ExclusionSet empty_d_;
    PartialSolution best_;
    std::uint64_t branches_ = 0;
    bool stop_ = false;
    Terminated reason_ = Terminated::optimal;
};

}  // namespace detail

inline SolveReport solve(const Graph& q, const Graph& g, const SolverConfig& cfg) {
    if (q.n == 0 || g.n == 0) throw std::invalid_argument("solve: graphs must be nonempty");
    if (cfg.time_limit_s <= 0 || cfg.branch_limit == 0)
        throw std::invalid_argument("solve: limits must be positive");
    if (q.n > g.n) {  // Theorem assumes |V_Q| <= |V_G|; normalize and un-swap the mapping
        SolveReport rep = solve(g, q, cfg);
        for (auto& p : rep.best_mapping) std::swap(p.u, p.v);
        return rep;
    }
    detail::SearchContext ctx(q, g, cfg);
    return ctx.run();
}

inline SolveReport solve_mcsplit(const Graph& q, const Graph& g, SolverConfig cfg = {}) {
    cfg.algorithm = Algorithm::mcsplit;
    return solve(q, g, cfg);
}

inline SolveReport solve_rrsplit(const Graph& q, const Graph& g, SolverConfig cfg = {}) {
    cfg.algorithm = Algorithm::rrsplit;
    return solve(q, g, cfg);
}

}  // namespace mcs
