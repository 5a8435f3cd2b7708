#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "mcs/oracle.hpp"
#include "mcs/solver.hpp"
#include "support.hpp"

using namespace mcs;
using support::bs;

namespace {

std::vector<SolverConfig> variant_configs() {
    std::vector<SolverConfig> out(5);
    out[0].algorithm = Algorithm::mcsplit;
    out[1].algorithm = Algorithm::rrsplit;
    out[2].algorithm = Algorithm::rrsplit;
    out[2].ve_reductions = false;
    out[3].algorithm = Algorithm::rrsplit;
    out[3].maximality = false;
    out[4].algorithm = Algorithm::rrsplit;
    out[4].ve_bound = false;
    return out;
}

}  // namespace

TEST_CASE("select_branch", "[solver]") {
    Graph q = build_graph(3, {{0, 1}, {1, 2}});
    SECTION("prefers the class with the smaller larger side") {
        CandidatePartition c;
        c.classes.push_back({bs(3, {0, 1}), bs(4, {0, 1, 2})});
        c.classes.push_back({bs(3, {2}), bs(4, {3})});
        auto [k, u] = select_branch(c, q, ClassOrder::smallest_max_side,
                                    VertexOrder::max_degree);
        CHECK(k == 1);
        CHECK(u == 2);
    }
    SECTION("ties fall to the earlier class and the smaller vertex id") {
        CandidatePartition c;
        c.classes.push_back({bs(3, {0, 2}), bs(4, {0, 1})});
        c.classes.push_back({bs(3, {1}), bs(4, {2, 3})});
        auto [k, u] = select_branch(c, q, ClassOrder::smallest_max_side,
                                    VertexOrder::max_degree);
        CHECK(k == 0);
        CHECK(u == 0);
    }
    SECTION("max_degree picks the busiest vertex") {
        CandidatePartition c;
        c.classes.push_back({bs(3, {0, 1, 2}), bs(4, {0, 1, 2})});
        auto [k, u] = select_branch(c, q, ClassOrder::first_class,
                                    VertexOrder::max_degree);
        CHECK(k == 0);
        CHECK(u == 1);
    }
    SECTION("min_id ignores degrees") {
        CandidatePartition c;
        c.classes.push_back({bs(3, {1, 2}), bs(4, {0, 1})});
        auto [k, u] =
            select_branch(c, q, ClassOrder::first_class, VertexOrder::min_id);
        CHECK(u == 1);
    }
    SECTION("empty partition is rejected") {
        CHECK_THROWS_AS(select_branch(CandidatePartition{}, q,
                                      ClassOrder::smallest_max_side,
                                      VertexOrder::max_degree),
                        std::invalid_argument);
    }
}

TEST_CASE("order_values", "[solver]") {
    Graph g = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(order_values(bs(3, {0, 1, 2}), g, ValueOrder::degree_desc) ==
          std::vector<int>{1, 0, 2});
    CHECK(order_values(bs(3, {0, 1, 2}), g, ValueOrder::id_asc) ==
          std::vector<int>{0, 1, 2});
    CHECK(order_values(bs(3, {0, 2}), g, ValueOrder::degree_desc) ==
          std::vector<int>{0, 2});
    CHECK(order_values(Bitset(3), g, ValueOrder::degree_desc).empty());
}

TEST_CASE("solve on fixed instances", "[solver]") {
    Graph k1 = build_graph(1, {});
    Graph k2 = build_graph(2, {{0, 1}});
    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    Graph i2 = build_graph(2, {});

    SECTION("identical triangles") {
        for (Algorithm a : {Algorithm::mcsplit, Algorithm::rrsplit}) {
            SolverConfig cfg;
            cfg.algorithm = a;
            SolveReport r = solve(k3, k3, cfg);
            CHECK(r.best_size == 3);
            CHECK(r.best_mapping.size() == 3);
            CHECK(verify_mapping(k3, k3, r.best_mapping));
            CHECK(r.terminated == Terminated::optimal);
            REQUIRE(r.similarity.has_value());
            CHECK(*r.similarity == Catch::Approx(1.0));
        }
    }
    SECTION("single vertices") {
        SolveReport r = solve_rrsplit(k1, k1);
        CHECK(r.best_size == 1);
        CHECK(r.branches >= 1);
    }
    SECTION("path into triangle") {
        SolveReport r = solve_mcsplit(p3, k3);
        CHECK(r.best_size == 2);
        CHECK(verify_mapping(p3, k3, r.best_mapping));
        REQUIRE(r.similarity.has_value());
        CHECK(*r.similarity == Catch::Approx(2.0 / 3.0).epsilon(1e-12));
    }
    SECTION("independent pair into an edge") {
        SolveReport r = solve_rrsplit(i2, k2);
        CHECK(r.best_size == 1);
        CHECK(verify_mapping(i2, k2, r.best_mapping));
    }
    SECTION("larger query is flipped internally") {
        SolveReport r = solve_rrsplit(k3, k2);
        CHECK(r.best_size == 2);
        CHECK(verify_mapping(k3, k2, r.best_mapping));
    }
}

TEST_CASE("every variant matches the brute-force optimum", "[solver]") {
    std::mt19937 rng(31847);
    for (int it = 0; it < 60; ++it) {
        int nq = 1 + int(rng() % 7);
        int ng = nq + int(rng() % (9 - nq));
        double p = (it % 3 == 0) ? 0.2 : (it % 3 == 1) ? 0.5 : 0.8;
        Graph q = support::random_graph(nq, p, rng);
        Graph g = support::random_graph(ng, p, rng);
        OracleResult want = brute_force_mcs(q, g);

        CAPTURE(it, nq, ng, p);
        for (const SolverConfig& cfg : variant_configs()) {
            SolveReport r = solve(q, g, cfg);
            CHECK(r.best_size == want.size);
            CHECK(int(r.best_mapping.size()) == want.size);
            CHECK(verify_mapping(q, g, r.best_mapping));
            CHECK(r.terminated == Terminated::optimal);
            if (nq <= 5) {
                double cap = nq * std::pow(double(ng) + 1.0, nq);
                CHECK(double(r.branches) <= cap);
            }
        }
    }
}

TEST_CASE("the incumbent is the largest partial solution ever visited", "[solver]") {
    std::mt19937 rng(55020);
    for (int it = 0; it < 20; ++it) {
        int nq = 1 + int(rng() % 6);
        int ng = nq + int(rng() % (8 - nq));
        Graph q = support::random_graph(nq, 0.5, rng);
        Graph g = support::random_graph(ng, 0.5, rng);
        int max_seen = 0;
        SolverConfig cfg;
        cfg.algorithm = (it % 2 == 0) ? Algorithm::rrsplit : Algorithm::mcsplit;
        cfg.observer = [&](const PartialSolution& s, const CandidatePartition&,
                           const ExclusionSet&) {
            max_seen = std::max(max_seen, int(s.size()));
        };
        SolveReport r = solve(q, g, cfg);
        CHECK(r.best_size == max_seen);
    }
}

TEST_CASE("policy and representative choices never change the optimum", "[solver]") {
    std::mt19937 rng(60914);
    for (int it = 0; it < 10; ++it) {
        int nq = 1 + int(rng() % 5);
        int ng = nq + int(rng() % (7 - nq));
        Graph q = support::random_graph(nq, 0.5, rng);
        Graph g = support::random_graph(ng, 0.5, rng);
        int want = brute_force_mcs(q, g).size;

        CAPTURE(it, nq, ng);
        for (ClassOrder co : {ClassOrder::smallest_max_side, ClassOrder::first_class})
            for (VertexOrder vo : {VertexOrder::max_degree, VertexOrder::min_id})
                for (ValueOrder vl : {ValueOrder::degree_desc, ValueOrder::id_asc}) {
                    SolverConfig cfg;
                    cfg.class_order = co;
                    cfg.vertex_order = vo;
                    cfg.value_order = vl;
                    CHECK(solve(q, g, cfg).best_size == want);
                }
        SolverConfig rnd;
        rnd.rep_policy = RepPolicy::seeded_random;
        rnd.seed = 7 * it + 1;
        CHECK(solve(q, g, rnd).best_size == want);
    }
}

TEST_CASE("repeated runs are deterministic", "[solver]") {
    std::mt19937 rng(4417);
    Graph q = support::random_graph(6, 0.5, rng);
    Graph g = support::random_graph(8, 0.5, rng);
    SolverConfig cfg;
    SolveReport a = solve(q, g, cfg);
    SolveReport b = solve(q, g, cfg);
    CHECK(a.best_size == b.best_size);
    CHECK(a.branches == b.branches);
    CHECK(a.best_mapping == b.best_mapping);
}

TEST_CASE("limits stop the search and are reported", "[solver]") {
    std::mt19937 rng(9902);
    Graph q = support::random_graph(7, 0.5, rng);
    Graph g = support::random_graph(10, 0.5, rng);

    SECTION("branch limit") {
        SolverConfig cfg;
        cfg.branch_limit = 1;
        SolveReport r = solve(q, g, cfg);
        CHECK(r.branches == 1);
        CHECK(r.terminated == Terminated::branch_limit);
        CHECK_FALSE(r.similarity.has_value());
    }
    SECTION("time limit") {
        SolverConfig cfg;
        cfg.time_limit_s = 1e-9;
        SolveReport r = solve(q, g, cfg);
        CHECK(r.terminated == Terminated::time_limit);
        CHECK_FALSE(r.similarity.has_value());
    }
    SECTION("generous limits finish normally") {
        SolverConfig cfg;
        cfg.branch_limit = 100000000;
        SolveReport r = solve(q, g, cfg);
        CHECK(r.terminated == Terminated::optimal);
    }
}

TEST_CASE("solve rejects unusable inputs", "[solver]") {
    Graph k1 = build_graph(1, {});
    Graph none = build_graph(0, {});
    CHECK_THROWS_AS(solve(none, k1, SolverConfig{}), std::invalid_argument);
    CHECK_THROWS_AS(solve(k1, none, SolverConfig{}), std::invalid_argument);
    SolverConfig bad_time;
    bad_time.time_limit_s = 0.0;
    CHECK_THROWS_AS(solve(k1, k1, bad_time), std::invalid_argument);
    SolverConfig bad_branches;
    bad_branches.branch_limit = 0;
    CHECK_THROWS_AS(solve(k1, k1, bad_branches), std::invalid_argument);
}
