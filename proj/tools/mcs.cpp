#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mcs/io.hpp"
#include "mcs/oracle.hpp"
#include "mcs/solver.hpp"

namespace fs = std::filesystem;

namespace {

mcs::Graph load(const std::string& path, const std::string& format) {
    return mcs::load_graph(path, mcs::parse_format(format));
}

void print_mapping(std::vector<mcs::VertexPair> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](mcs::VertexPair a, mcs::VertexPair b) { return a.u < b.u; });
    for (auto p : pairs) std::cout << p.u << "->" << p.v << "\n";
}

std::string basename_of(const std::string& path) {
    return fs::path(path).filename().string();
}

// Bench algorithm tokens: the two base solvers plus one token per disabled
// RRSplit ingredient (rrsplit-ve, rrsplit-mb, rrsplit-ub).
mcs::SolverConfig config_for_token(const std::string& token) {
    mcs::SolverConfig cfg;
    if (token == "mcsplit") {
        cfg.algorithm = mcs::Algorithm::mcsplit;
        return cfg;
    }
    cfg.algorithm = mcs::Algorithm::rrsplit;
    if (token == "rrsplit") return cfg;
    if (token == "rrsplit-ve") {
        cfg.ve_reductions = false;
        return cfg;
    }
    if (token == "rrsplit-mb") {
        cfg.maximality = false;
        return cfg;
    }
    if (token == "rrsplit-ub") {
        cfg.ve_bound = false;
        return cfg;
    }
    throw std::runtime_error("unknown algorithm token '" + token + "'");
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::string> files_in(const fs::path& dir) {
    std::vector<std::string> out;
    if (!fs::is_directory(dir)) return out;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) out.push_back(entry.path().string());
    std::sort(out.begin(), out.end(),
              [](const std::string& a, const std::string& b) {
                  return basename_of(a) < basename_of(b);
              });
    return out;
}

struct SolveArgs {
    std::string q_path, g_path;
    std::string format = "edgelist";
    std::string algo = "rrsplit";
    bool no_ve = false, no_mb = false, no_ub = false;
    double time_limit = 1800.0;
    std::uint64_t branch_limit = std::numeric_limits<std::uint64_t>::max();
    unsigned seed = 0;
    bool csv = false;
};

int run_solve(const SolveArgs& a) {
    mcs::Graph q = load(a.q_path, a.format);
    mcs::Graph g = load(a.g_path, a.format);
    mcs::SolverConfig cfg;
    cfg.algorithm =
        a.algo == "mcsplit" ? mcs::Algorithm::mcsplit : mcs::Algorithm::rrsplit;
    cfg.ve_reductions = !a.no_ve;
    cfg.maximality = !a.no_mb;
    cfg.ve_bound = !a.no_ub;
    cfg.time_limit_s = a.time_limit;
    cfg.branch_limit = a.branch_limit;
    cfg.seed = a.seed;
    mcs::SolveReport r = mcs::solve(q, g, cfg);

    if (a.csv) {
        mcs::ReportRow row{basename_of(a.q_path) + "|" + basename_of(a.g_path),
                           a.algo, q.n, g.n, r};
        std::cout << mcs::csv_header() << "\n" << mcs::format_csv_row(row) << "\n";
    } else {
        std::cout << "best_size " << r.best_size << "\n";
        print_mapping(r.best_mapping);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", r.elapsed_s);
        std::cout << "branches " << r.branches << "\n"
                  << "elapsed_s " << buf << "\n"
                  << "terminated " << mcs::to_string(r.terminated) << "\n";
        if (r.similarity) {
            std::snprintf(buf, sizeof buf, "%.6g", *r.similarity);
            std::cout << "similarity " << buf << "\n";
        }
    }
    return r.terminated == mcs::Terminated::optimal ? 0 : 2;
}

struct BenchArgs {
    std::string dir;
    std::string pairing = "all";
    std::string format = "edgelist";
    std::string algos = "mcsplit,rrsplit";
    double time_limit = 1800.0;
    std::uint64_t branch_limit = std::numeric_limits<std::uint64_t>::max();
    int jobs = 1;
};

int run_bench(const BenchArgs& a) {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (a.pairing == "all") {
        auto files = files_in(a.dir);
        if (files.size() < 2)
            throw std::runtime_error("bench: need at least two graphs in '" + a.dir + "'");
        for (std::size_t i = 0; i < files.size(); ++i)
            for (std::size_t j = i + 1; j < files.size(); ++j)
                pairs.emplace_back(files[i], files[j]);
    } else {
        auto patterns = files_in(fs::path(a.dir) / "pattern");
        auto targets = files_in(fs::path(a.dir) / "target");
        if (patterns.empty() || targets.empty())
            throw std::runtime_error("bench: need pattern/ and target/ graphs in '" +
                                     a.dir + "'");
        for (const auto& p : patterns)
            for (const auto& t : targets) pairs.emplace_back(p, t);
    }

    auto tokens = split_list(a.algos);
    if (tokens.empty()) throw std::runtime_error("bench: --algos list is empty");
    std::vector<mcs::SolverConfig> configs;
    for (const auto& t : tokens) {
        mcs::SolverConfig cfg = config_for_token(t);
        cfg.time_limit_s = a.time_limit;
        cfg.branch_limit = a.branch_limit;
        configs.push_back(cfg);
    }

    struct Job {
        std::string instance;
        const mcs::Graph* q;
        const mcs::Graph* g;
        std::size_t algo;
    };
    std::vector<mcs::Graph> graphs;
    std::vector<Job> jobs;
    mcs::GraphFormat fmt = mcs::parse_format(a.format);
    graphs.reserve(pairs.size() * 2);
    for (const auto& [qp, gp] : pairs) {
        graphs.push_back(mcs::load_graph(qp, fmt));
        graphs.push_back(mcs::load_graph(gp, fmt));
        const mcs::Graph* q = &graphs[graphs.size() - 2];
        const mcs::Graph* g = &graphs[graphs.size() - 1];
        std::string instance = basename_of(qp) + "|" + basename_of(gp);
        for (std::size_t k = 0; k < configs.size(); ++k)
            jobs.push_back({instance, q, g, k});
    }

    std::cout << mcs::csv_header() << "\n" << std::flush;
    std::mutex write_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
            const Job& job = jobs[i];
            mcs::SolveReport r = mcs::solve(*job.q, *job.g, configs[job.algo]);
            mcs::ReportRow row{job.instance, tokens[job.algo], job.q->n, job.g->n, r};
            std::lock_guard<std::mutex> lock(write_mutex);
            std::cout << mcs::format_csv_row(row) << "\n" << std::flush;
        }
    };
    int nthreads = std::max(1, std::min<int>(a.jobs, int(jobs.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return 0;
}

struct VerifyArgs {
    std::string q_path, g_path, mapping_path;
    std::string format = "edgelist";
};

int run_verify(const VerifyArgs& a) {
    mcs::Graph q = load(a.q_path, a.format);
    mcs::Graph g = load(a.g_path, a.format);
    std::ifstream in(a.mapping_path);
    if (!in) throw std::runtime_error("cannot open '" + a.mapping_path + "'");
    std::vector<mcs::VertexPair> pairs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto t = mcs::detail::int_tokens(line, "mapping line");
        if (t.size() != 2) throw std::runtime_error("mapping line must be 'u v'");
        pairs.push_back({t[0], t[1]});
    }
    return mcs::verify_mapping(q, g, pairs) ? 0 : 3;
}

struct OracleArgs {
    std::string q_path, g_path;
    std::string format = "edgelist";
};

int run_oracle(const OracleArgs& a) {
    mcs::Graph q = load(a.q_path, a.format);
    mcs::Graph g = load(a.g_path, a.format);
    mcs::OracleResult r = mcs::brute_force_mcs(q, g);
    std::cout << "best_size " << r.size << "\n";
    print_mapping(r.mapping);
    return 0;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "graph file format")
        ->check(CLI::IsMember({"edgelist", "lad"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum common induced subgraph solver"};
    app.require_subcommand(1);

    SolveArgs sa;
    CLI::App* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("--q", sa.q_path, "query graph file")->required();
    solve->add_option("--g", sa.g_path, "target graph file")->required();
    add_format_flag(solve, sa.format);
    solve->add_option("--algo", sa.algo, "algorithm")
        ->check(CLI::IsMember({"mcsplit", "rrsplit"}));
    solve->add_flag("--no-ve", sa.no_ve, "disable vertex-equivalence reductions");
    solve->add_flag("--no-mb", sa.no_mb, "disable the maximality reduction");
    solve->add_flag("--no-ub", sa.no_ub, "disable the tightened upper bound");
    solve->add_option("--time-limit", sa.time_limit, "time limit in seconds");
    solve->add_option("--branch-limit", sa.branch_limit, "branch budget");
    solve->add_option("--seed", sa.seed, "seed for randomized policies");
    solve->add_flag("--csv", sa.csv, "emit a CSV row instead of human output");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand("bench", "run all pairs in a directory");
    bench->add_option("--dir", ba.dir, "instance directory")->required();
    bench->add_option("--pairing", ba.pairing, "instance pairing scheme")
        ->check(CLI::IsMember({"all", "qg"}));
    add_format_flag(bench, ba.format);
    bench->add_option("--algos", ba.algos, "comma-separated algorithm list");
    bench->add_option("--time-limit", ba.time_limit, "per-instance time limit");
    bench->add_option("--branch-limit", ba.branch_limit, "per-instance branch budget");
    bench->add_option("--jobs", ba.jobs, "parallel workers")->check(CLI::PositiveNumber);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "check a mapping file");
    verify->add_option("--q", va.q_path, "query graph file")->required();
    verify->add_option("--g", va.g_path, "target graph file")->required();
    verify->add_option("--mapping", va.mapping_path, "mapping file, lines 'u v'")
        ->required();
    add_format_flag(verify, va.format);

    OracleArgs oa;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference answer");
    oracle->add_option("--q", oa.q_path, "query graph file")->required();
    oracle->add_option("--g", oa.g_path, "target graph file")->required();
    add_format_flag(oracle, oa.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve) return run_solve(sa);
        if (*bench) return run_bench(ba);
        if (*verify) return run_verify(va);
        return run_oracle(oa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
