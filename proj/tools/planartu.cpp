// planartu: double-star planar Turan verification and search tool.
//
// Exit codes: 0 success / all checks pass, 1 violations found, 2 usage or
// input error, 3 budget truncation (result flagged non-exhaustive).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "planartu/bounds.hpp"
#include "planartu/canonical.hpp"
#include "planartu/double_star.hpp"
#include "planartu/enumerate.hpp"
#include "planartu/graph6.hpp"
#include "planartu/planarity.hpp"
#include "planartu/report.hpp"
#include "planartu/structure.hpp"

using namespace planartu;

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
        .count();
}

std::pair<int, int> parse_pattern(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("pattern", "expected m,n (e.g. 2,5)");
    int m = std::stoi(text.substr(0, comma));
    int n = std::stoi(text.substr(comma + 1));
    if (m < 1 || n < 1)
        throw CLI::ValidationError("pattern", "m and n must be >= 1");
    return {m, n};
}

FeatureSpec parse_feature(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("feature",
                                   "expected edge:k,l or path:k,l,s");
    std::string kind = text.substr(0, colon);
    std::vector<int> nums;
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto next = rest.find(',', pos);
        if (next == std::string::npos) next = rest.size();
        nums.push_back(std::stoi(rest.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (kind == "edge" && nums.size() == 2)
        return {FeatureSpec::Kind::kl_edge, nums[0], nums[1], 0};
    if (kind == "path" && nums.size() == 3)
        return {FeatureSpec::Kind::kls_path, nums[0], nums[1], nums[2]};
    throw CLI::ValidationError("feature", "expected edge:k,l or path:k,l,s");
}

void print_report(const Json& report, std::ostream& os = std::cout) {
    os << report.dump(2) << "\n";
}

Budget budget_from_env() {
    Budget b;
    if (const char* nodes = std::getenv("PLANARTU_BUDGET_NODES"))
        b.max_nodes = std::strtoull(nodes, nullptr, 10);
    if (const char* secs = std::getenv("PLANARTU_BUDGET_SECONDS"))
        b.max_seconds = std::strtod(secs, nullptr);
    return b;
}

int run_bound(long long n, std::optional<long long> m) {
    auto start = Clock::now();
    Json results;
    results["max_planar_edges"] = max_planar_edges(n);
    results["turan_edge_cap"] = turan_edge_cap(n);
    results["crossover"] = to_json(crossover_facts());
    Json inputs{{"n", n}};
    if (m) {
        inputs["m"] = *m;
        results["verdict"] = to_json(turan_verdict(n, *m));
    }
    print_report(make_report("bound", inputs, results, ms_since(start)));
    return kExitOk;
}

int run_check(const std::string& path, std::pair<int, int> pattern) {
    auto start = Clock::now();
    std::ifstream in(path);
    if (!in) {
        std::cerr << "planartu: cannot read " << path << "\n";
        return kExitUsage;
    }
    Json lines = Json::array();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Graph g;
        try {
            g = graph6_decode(line);
        } catch (const Graph6Error& e) {
            std::cerr << "planartu: " << path << ":" << lineno << ": "
                      << e.what() << "\n";
            return kExitUsage;
        }
        Json entry;
        entry["line"] = lineno;
        entry["graph6"] = line;
        entry["n"] = g.order();
        entry["m"] = g.size();
        entry["planar"] = is_planar(g);
        auto witness = contains_double_star(g, pattern.first, pattern.second);
        entry["free"] = !witness.has_value();
        if (witness) entry["witness"] = to_json(*witness);
        entry["flags"] = to_json(hypothesis_class(g));
        entry["degrees"] = to_json(degree_histogram(g));
        entry["bound"] = to_json(turan_verdict(g.order(), g.size()));
        lines.push_back(entry);
    }
    Json inputs{{"file", path},
                {"pattern", Json::array({pattern.first, pattern.second})}};
    print_report(make_report("check", inputs, Json{{"graphs", lines}},
                             ms_since(start)));
    return kExitOk;
}

int run_witness() {
    auto start = Clock::now();
    Graph icosa = build_icosahedron();
    std::string g6 = graph6_encode(icosa);
    std::cout << g6 << "\n";
    Json results;
    results["graph6"] = g6;
    results["n"] = icosa.order();
    results["m"] = icosa.size();
    results["degrees"] = to_json(degree_histogram(icosa));
    results["planar"] = is_planar(icosa);
    results["connected"] = is_connected(icosa);
    results["bridgeless"] = !has_bridge(icosa);
    results["s25_free"] = !contains_double_star(icosa, 2, 5).has_value();
    results["bound"] = to_json(turan_verdict(icosa.order(), icosa.size()));
    results["round_trip_identical"] = graph6_decode(g6) == icosa;
    print_report(make_report("witness", Json{{"name", "icosahedron"}}, results,
                             ms_since(start)));
    bool ok = results["planar"].get<bool>() && results["s25_free"].get<bool>() &&
              results["bound"]["tight"].get<bool>();
    return ok ? kExitOk : kExitViolation;
}

Json constraints_json(const EnumerationConstraints& c) {
    Json forbid = Json::array();
    for (auto [a, b] : c.forbid) forbid.push_back(Json::array({a, b}));
    Json j{{"n", c.n},
           {"min_degree", c.min_degree},
           {"max_degree", c.max_degree},
           {"connected", c.require_connected},
           {"bridgeless", c.require_bridgeless},
           {"planar", c.require_planar},
           {"forbid", forbid}};
    if (c.require_feature) j["require_feature"] = c.require_feature->describe();
    Json forbidden_features = Json::array();
    for (const auto& f : c.forbid_feature)
        forbidden_features.push_back(f.describe());
    j["forbid_features"] = forbidden_features;
    return j;
}

int run_enumerate(const EnumerationConstraints& c, const EnumerateOptions& opt) {
    auto start = Clock::now();
    std::mutex out_mutex;
    std::function<void(const Graph&)> emit = [&](const Graph& g) {
        std::string line = graph6_encode(g);
        std::lock_guard<std::mutex> lock(out_mutex);
        std::cout << line << "\n";
    };
    auto stats = enumerate_graphs(c, emit, opt);
    Json results{{"visited", stats.visited},
                 {"nodes", stats.nodes},
                 {"exhaustive", stats.exhaustive}};
    Json report = make_report("enumerate", constraints_json(c), results,
                              ms_since(start));
    report["exhaustive"] = stats.exhaustive;
    print_report(report, std::cerr);
    return stats.exhaustive ? kExitOk : kExitTruncated;
}

int run_ex(int n, std::pair<int, int> forbid, bool planar,
           const std::string& mode, const EnumerateOptions& opt) {
    auto start = Clock::now();
    ExMode m = mode == "bnb" ? ExMode::branch_and_bound : ExMode::exhaustive;
    auto rec = ex_search(n, forbid, planar, m, opt);
    Json inputs{{"n", n},
                {"forbid", Json::array({forbid.first, forbid.second})},
                {"planar", planar},
                {"mode", mode}};
    Json report = make_report("ex", inputs, to_json(rec), ms_since(start));
    report["exhaustive"] = rec.exhaustive;
    print_report(report);
    return rec.exhaustive ? kExitOk : kExitTruncated;
}

int run_verify_lemma3(int nmax, const EnumerateOptions& opt) {
    auto start = Clock::now();
    auto rep = verify_lemma3_classes(nmax, opt);
    Json report = make_report("verify lemma3", Json{{"nmax", nmax}},
                              to_json(rep), ms_since(start));
    report["exhaustive"] = rep.exhaustive;
    print_report(report);
    if (rep.total_violations > 0) return kExitViolation;
    return rep.exhaustive ? kExitOk : kExitTruncated;
}

int run_verify_claim4(int nmax, const EnumerateOptions& opt) {
    auto start = Clock::now();
    auto rep = verify_claim_degree4(nmax, opt);
    Json report = make_report("verify claim-degree4", Json{{"nmax", nmax}},
                              to_json(rep), ms_since(start));
    report["exhaustive"] = rep.exhaustive;
    print_report(report);
    if (rep.total_violations > 0) return kExitViolation;
    return rep.exhaustive ? kExitOk : kExitTruncated;
}

int run_verify_small_n(int nmax) {
    auto start = Clock::now();
    auto rep = verify_small_n_claim(nmax);
    for (const auto& row : rep.rows)
        std::cout << "n=" << row.n << " planar_max=" << row.planar_max
                  << " cap=" << row.edge_cap << " "
                  << (row.ok ? "pass" : "FAIL") << "\n";
    Json report = make_report("verify small-n", Json{{"nmax", nmax}},
                              to_json(rep), ms_since(start));
    print_report(report);
    return rep.all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-star planar Turan verification and search"};
    app.require_subcommand(1);

    Budget env_budget = budget_from_env();

    long long bound_n = 0;
    std::optional<long long> bound_m;
    auto* bound = app.add_subcommand("bound", "bound arithmetic for one n");
    bound->add_option("n", bound_n, "vertex count")->required();
    bound->add_option("m", bound_m, "edge count to test");

    std::string check_file;
    std::string check_pattern = "2,5";
    auto* check = app.add_subcommand("check", "verify graph6 lines from a file");
    check->add_option("file", check_file, "graph6 file, one graph per line")
        ->required();
    check->add_option("--pattern", check_pattern, "forbidden star m,n");

    std::string witness_name;
    auto* witness = app.add_subcommand("witness", "emit a built-in witness");
    witness->add_option("name", witness_name, "witness name (icosahedron)")
        ->required();

    EnumerationConstraints ec;
    std::vector<std::string> en_forbid;
    std::string en_require_feature;
    std::vector<std::string> en_forbid_feature;
    std::uint64_t en_nodes = env_budget.max_nodes;
    double en_seconds = env_budget.max_seconds;
    int en_threads = 1;
    auto* enumerate = app.add_subcommand(
        "enumerate", "stream constrained graphs as graph6 lines");
    enumerate->add_option("--n", ec.n, "vertex count")->required();
    enumerate->add_option("--min-deg", ec.min_degree, "minimum degree");
    enumerate->add_option("--max-deg", ec.max_degree, "maximum degree");
    enumerate->add_flag("--planar", ec.require_planar, "planar hosts only");
    enumerate->add_flag("--connected", ec.require_connected, "connected only");
    enumerate->add_flag("--bridgeless", ec.require_bridgeless, "no cut edges");
    enumerate->add_option("--forbid", en_forbid,
                          "forbidden double star m,n (repeatable)");
    enumerate->add_option("--require-feature", en_require_feature,
                          "required feature, edge:k,l or path:k,l,s");
    enumerate->add_option("--forbid-feature", en_forbid_feature,
                          "forbidden feature (repeatable)");
    enumerate->add_option("--budget-nodes", en_nodes, "node budget");
    enumerate->add_option("--budget-seconds", en_seconds, "time budget");
    enumerate->add_option("--threads", en_threads, "worker threads");

    int ex_n = 0;
    std::string ex_forbid;
    std::string ex_mode = "exhaustive";
    bool ex_planar = true;
    std::uint64_t ex_nodes = env_budget.max_nodes;
    double ex_seconds = env_budget.max_seconds;
    int ex_threads = 1;
    auto* ex = app.add_subcommand("ex", "extremal edge count search");
    ex->add_option("--n", ex_n, "vertex count")->required();
    ex->add_option("--forbid", ex_forbid, "forbidden double star m,n")
        ->required();
    ex->add_option("--mode", ex_mode, "exhaustive or bnb")
        ->check(CLI::IsMember({"exhaustive", "bnb"}));
    ex->add_flag("--planar,!--no-planar", ex_planar,
                 "restrict hosts to planar graphs (default on)");
    ex->add_option("--budget-nodes", ex_nodes, "node budget");
    ex->add_option("--budget-seconds", ex_seconds, "time budget");
    ex->add_option("--threads", ex_threads, "worker threads");

    auto* verify = app.add_subcommand("verify", "exhaustive verification runs");
    verify->require_subcommand(1);
    int lemma3_nmax = 10;
    int claim4_nmax = 10;
    int smalln_nmax = 12;
    std::uint64_t verify_nodes = env_budget.max_nodes;
    double verify_seconds = env_budget.max_seconds;
    int verify_threads = 1;
    auto* lemma3 = verify->add_subcommand("lemma3", "hypothesis class check");
    lemma3->add_option("--nmax", lemma3_nmax, "largest order to enumerate");
    lemma3->add_option("--budget-nodes", verify_nodes, "node budget");
    lemma3->add_option("--budget-seconds", verify_seconds, "time budget");
    lemma3->add_option("--threads", verify_threads, "worker threads");
    auto* claim4 =
        verify->add_subcommand("claim-degree4", "low-degree neighbor check");
    claim4->add_option("--nmax", claim4_nmax, "largest order to enumerate");
    claim4->add_option("--budget-nodes", verify_nodes, "node budget");
    claim4->add_option("--budget-seconds", verify_seconds, "time budget");
    claim4->add_option("--threads", verify_threads, "worker threads");
    auto* smalln = verify->add_subcommand("small-n", "arithmetic bound check");
    smalln->add_option("--nmax", smalln_nmax, "largest n to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bound->parsed()) return run_bound(bound_n, bound_m);
        if (check->parsed())
            return run_check(check_file, parse_pattern(check_pattern));
        if (witness->parsed()) {
            if (witness_name != "icosahedron") {
                std::cerr << "planartu: unknown witness '" << witness_name
                          << "'\n";
                return kExitUsage;
            }
            return run_witness();
        }
        if (enumerate->parsed()) {
            for (const auto& f : en_forbid) ec.forbid.push_back(parse_pattern(f));
            if (!en_require_feature.empty())
                ec.require_feature = parse_feature(en_require_feature);
            for (const auto& f : en_forbid_feature)
                ec.forbid_feature.push_back(parse_feature(f));
            EnumerateOptions opt;
            opt.budget = {en_nodes, en_seconds};
            opt.threads = en_threads;
            return run_enumerate(ec, opt);
        }
        if (ex->parsed()) {
            EnumerateOptions opt;
            opt.budget = {ex_nodes, ex_seconds};
            opt.threads = ex_threads;
            return run_ex(ex_n, parse_pattern(ex_forbid), ex_planar, ex_mode,
                          opt);
        }
        if (verify->parsed()) {
            EnumerateOptions opt;
            opt.budget = {verify_nodes, verify_seconds};
            opt.threads = verify_threads;
            if (lemma3->parsed()) return run_verify_lemma3(lemma3_nmax, opt);
            if (claim4->parsed()) return run_verify_claim4(claim4_nmax, opt);
            if (smalln->parsed()) return run_verify_small_n(smalln_nmax);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "planartu: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "planartu: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
