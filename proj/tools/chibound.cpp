// Command-line surface: recognition, certified coloring, instance
// generation, the lemma harness, exact oracles, and timing sweeps.
// Exit codes: 0 success, 2 input error, 3 bound not established,
// 4 class violation.
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "chibound/io.hpp"

using namespace chibound;
using nlohmann::json;

namespace {

enum ExitCode { exit_ok = 0, exit_input = 2, exit_no_bound = 3, exit_class = 4 };

int log_level = 0; // 0 error, 1 info, 2 debug

void log_info(const std::string& msg) {
    if (log_level >= 1) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level >= 2) std::cerr << "[debug] " << msg << "\n";
}

int init_log_level() {
    const char* env = std::getenv("CHIBOUND_LOG");
    if (!env) return 0;
    std::string s(env);
    if (s == "error") return 0;
    if (s == "info") return 1;
    if (s == "debug") return 2;
    std::cerr << "CHIBOUND_LOG must be error, info, or debug (got \"" << s << "\")\n";
    return -1;
}

// --params k=v pairs, comma-separable, validated against the keys a command
// understands.
std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs,
                                                const std::vector<std::string>& known) {
    std::map<std::string, std::string> out;
    for (const auto& group : kvs) {
        std::istringstream gs(group);
        std::string kv;
        while (std::getline(gs, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("--params expects k=v, got \"" + kv + "\"");
            std::string k = kv.substr(0, eq);
            if (std::find(known.begin(), known.end(), k) == known.end()) {
                std::string hint;
                for (const auto& x : known) hint += (hint.empty() ? "" : ", ") + x;
                throw std::invalid_argument("unknown parameter \"" + k + "\" (known: " +
                                            hint + ")");
            }
            out[k] = kv.substr(eq + 1);
        }
    }
    return out;
}

int param_int(const std::map<std::string, std::string>& params, const std::string& key,
              int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        size_t pos = 0;
        int value = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing text");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("parameter " + key + " must be an integer, got \"" +
                                    it->second + "\"");
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_atomic(out_path, content);
}

// Runs fn(i) for i in [0, count) on `jobs` threads; per-index results must be
// written to pre-sized slots so the merge order is fixed.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<Family> families_from_flag(const std::string& flag) {
    if (flag.empty()) return all_families();
    auto f = family_from_name(flag);
    if (!f) {
        std::string names;
        for (Family x : all_families())
            names += (names.empty() ? "" : ", ") + std::string(family_name(x));
        throw std::invalid_argument("unknown family \"" + flag + "\" (known: " + names +
                                    ")");
    }
    return {*f};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

int cmd_recognize(const std::string& path) {
    Graph g = load_graph(path);
    json j = class_report_to_json(is_in_class(g));
    std::cout << j.dump(2) << "\n";
    return exit_ok;
}

int cmd_color(const std::string& path, bool force, const std::string& out_path,
              const OracleLimits& limits) {
    Graph g = load_graph(path);
    ClassReport report = is_in_class(g);
    if (!report.in_class() && !force) {
        std::cout << class_report_to_json(report).dump(2) << "\n";
        std::cerr << "graph is outside the class; pass --force for an uncertified "
                     "greedy coloring\n";
        return exit_class;
    }
    if (!report.in_class()) {
        // Forced path: greedy coloring, no bound claim.
        BoundCertificate cert;
        cert.coloring = dsatur_coloring(g);
        cert.omega_witness = VertexSet(g.n());
        cert.bound = 0;
        cert.class_report = report;
        cert.bound_established = false;
        emit(out_path, certificate_to_json(cert).dump(2) + "\n");
        log_info("forced greedy coloring with " + std::to_string(cert.colors_used()) +
                 " colors; no bound established");
        return exit_no_bound;
    }
    BoundCertificate cert = color_in_class(g, limits);
    CertificateCheck check = verify_certificate(g, cert);
    emit(out_path, certificate_to_json(cert).dump(2) + "\n");
    if (!check.ok) {
        std::cerr << "certificate failed verification: " << check.detail << "\n";
        return exit_no_bound;
    }
    if (!cert.bound_established || cert.colors_used() > cert.bound) {
        std::cerr << "bound not established for this instance\n";
        return exit_no_bound;
    }
    log_info("colored with " + std::to_string(cert.colors_used()) + " colors, bound " +
             std::to_string(cert.bound));
    return exit_ok;
}

int cmd_generate(const std::string& family_flag, uint64_t seed,
                 const std::map<std::string, std::string>& params,
                 const std::string& out_dir) {
    if (out_dir.empty()) throw std::invalid_argument("generate needs --out <dir>");
    GenOptions opt;
    opt.count = param_int(params, "count", 10);
    opt.max_n = param_int(params, "max_n", 16);
    opt.seed = seed;
    json index;
    index["seed"] = seed;
    index["instances"] = json::array();
    for (Family f : families_from_flag(family_flag)) {
        GenStats stats;
        auto batch = generate(f, opt, &stats);
        for (const auto& inst : batch) {
            std::filesystem::path p =
                std::filesystem::path(out_dir) / (inst.id + ".col");
            write_text_atomic(p.string(), emit_dimacs(inst.graph));
            index["instances"].push_back({{"id", inst.id},
                                          {"family", family_name(f)},
                                          {"n", inst.graph.n()},
                                          {"m", inst.graph.m()}});
        }
        index["stats"][family_name(f)] = {{"candidates", stats.candidates},
                                          {"rejected", stats.rejected}};
        log_info(std::string(family_name(f)) + ": " + std::to_string(batch.size()) +
                 " instances, " + std::to_string(stats.candidates) + " candidates, " +
                 std::to_string(stats.rejected) + " rejected");
    }
    write_text_atomic((std::filesystem::path(out_dir) / "index.json").string(),
                      index.dump(2) + "\n");
    return exit_ok;
}

int cmd_harness(const std::string& family_flag, uint64_t seed,
                const std::map<std::string, std::string>& params,
                const std::string& out_dir, int jobs) {
    GenOptions opt;
    opt.count = param_int(params, "count", 25);
    opt.max_n = param_int(params, "max_n", 14);
    opt.seed = seed;
    std::vector<Instance> corpus;
    for (Family f : families_from_flag(family_flag)) {
        GenStats stats;
        for (auto& inst : generate(f, opt, &stats)) corpus.push_back(std::move(inst));
        log_info(std::string(family_name(f)) + ": " + std::to_string(stats.candidates) +
                 " candidates, " + std::to_string(stats.rejected) + " rejected");
    }

    std::vector<std::vector<LemmaReport>> results(corpus.size());
    parallel_for(int(corpus.size()), jobs, [&](int i) {
        results[i] = evaluate_lemmas(corpus[i].graph, corpus[i].id);
        log_debug(corpus[i].id + " done");
    });

    SuiteSummary summary;
    json reports = json::array();
    for (const auto& batch : results) {
        summary.absorb(batch);
        for (const auto& r : batch) reports.push_back(lemma_report_to_json(r));
    }

    json out;
    out["instances"] = summary.instances;
    out["verified"] = summary.verified;
    out["violated"] = summary.violated;
    out["skipped"] = summary.skipped;
    out["choice_sensitive"] = summary.choice_sensitive;
    out["hypothesis_held_per_lemma"] = summary.held;
    out["reports"] = reports;

    if (!out_dir.empty()) {
        write_text_atomic((std::filesystem::path(out_dir) / "reports.json").string(),
                          out.dump(2) + "\n");
        // A violation becomes a reproducible bundle: the graph, the found
        // structure, and the failing report.
        for (const auto& r : summary.violations) {
            const Instance* inst = nullptr;
            for (const auto& c : corpus)
                if (c.id == r.instance) inst = &c;
            if (!inst) continue;
            std::filesystem::path dir =
                std::filesystem::path(out_dir) / "counterexamples" / r.instance;
            write_text_atomic((dir / "graph.col").string(), emit_dimacs(inst->graph));
            SuiteContext ctx = make_suite_context(inst->graph, inst->id);
            json structure;
            structure["class"] = class_report_to_json(ctx.report);
            structure["blowups"] = json::array();
            for (const auto& bc : ctx.blowups) {
                json parts = json::array();
                for (const auto& p : bc.nb.parts) {
                    json part = json::array();
                    for (int v = p.first(); v != -1; v = p.next(v)) part.push_back(v + 1);
                    parts.push_back(part);
                }
                structure["blowups"].push_back({{"parts", parts}});
            }
            write_text_atomic((dir / "structure.json").string(),
                              structure.dump(2) + "\n");
            write_text_atomic((dir / "report.json").string(),
                              lemma_report_to_json(r).dump(2) + "\n");
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    std::cerr << "instances " << summary.instances << ", verified " << summary.verified
              << ", skipped " << summary.skipped << ", choice-sensitive "
              << summary.choice_sensitive << ", violated " << summary.violated << "\n";
    return summary.violated == 0 ? exit_ok : exit_class;
}

int cmd_oracle(const std::string& path, const OracleLimits& limits) {
    Graph g = load_graph(path);
    json j;
    j["n"] = g.n();
    j["m"] = g.m();
    try {
        ExactResult om = exact_omega(g, limits);
        j["omega"] = om.value;
        j["omega_witness"] = json::array();
        for (int v = om.witness_set.first(); v != -1; v = om.witness_set.next(v))
            j["omega_witness"].push_back(v + 1);
        ExactResult al = exact_alpha(g, limits);
        j["alpha"] = al.value;
        ExactResult ch = exact_chi(g, limits);
        j["chi"] = ch.value;
        j["chi_method"] =
            ch.method == OracleMethod::exhaustive ? "exhaustive" : "branch_and_bound";
    } catch (const oracle_limit_error& e) {
        std::cerr << e.what() << "\n";
        return exit_no_bound;
    }
    std::cout << j.dump(2) << "\n";
    return exit_ok;
}

int cmd_bench(const std::string& family_flag, uint64_t seed,
              const std::map<std::string, std::string>& params,
              const std::string& out_path, const OracleLimits& limits) {
    GenOptions opt;
    opt.count = param_int(params, "count", 10);
    opt.max_n = param_int(params, "max_n", 14);
    opt.seed = seed;
    std::ostringstream csv;
    csv << "instance,family,n,m,recognize_ms,in_class,omega,omega_ms,chi,chi_ms\n";
    for (Family f : families_from_flag(family_flag)) {
        for (const auto& inst : generate(f, opt)) {
            const Graph& g = inst.graph;
            auto t0 = std::chrono::steady_clock::now();
            ClassReport rep = is_in_class(g);
            double rec_ms = ms_since(t0);
            csv << inst.id << "," << family_name(f) << "," << g.n() << "," << g.m()
                << "," << rec_ms << "," << (rep.in_class() ? 1 : 0) << ",";
            if (g.n() <= limits.max_n_omega) {
                t0 = std::chrono::steady_clock::now();
                ExactResult om = exact_omega(g, limits);
                csv << om.value << "," << ms_since(t0) << ",";
            } else {
                csv << ",,";
            }
            if (g.n() <= limits.max_n_chi) {
                t0 = std::chrono::steady_clock::now();
                ExactResult ch = exact_chi(g, limits);
                csv << ch.value << "," << ms_since(t0) << "\n";
            } else {
                csv << ",\n";
            }
        }
    }
    emit(out_path, csv.str());
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    log_level = init_log_level();
    if (log_level < 0) return exit_input;

    CLI::App app{"Structure and coloring toolkit for hole-constrained graphs"};
    app.require_subcommand(1);

    uint64_t seed = 1;
    int jobs = 1;
    std::string out_path, family_flag, input_path;
    std::vector<std::string> param_kvs;
    bool force = false;
    OracleLimits limits;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("input", input_path, "graph file (.col DIMACS or .json)")
                ->required();
        cmd->add_option("--out", out_path, "output file or directory");
        return cmd;
    };
    auto add_gen = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_flag, "instance family (default: all)");
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--params", param_kvs, "k=v parameters (count, max_n)");
        return cmd;
    };
    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--oracle-limit-chi", limits.max_n_chi,
                        "largest n for exact chromatic number");
        cmd->add_option("--oracle-limit-omega", limits.max_n_omega,
                        "largest n for exact clique number");
        return cmd;
    };

    CLI::App* recognize = app.add_subcommand("recognize", "class membership report");
    add_common(recognize, true);

    CLI::App* color = app.add_subcommand("color", "certified bounded coloring");
    add_common(color, true);
    add_limits(color);
    color->add_flag("--force", force, "color out-of-class inputs greedily");

    CLI::App* gen = app.add_subcommand("generate", "write instance files");
    add_common(add_gen(gen), false);

    CLI::App* harness = app.add_subcommand("harness", "run the lemma suite");
    add_common(add_gen(harness), false);
    harness->add_option("--jobs", jobs, "parallelism over instances");

    CLI::App* oracle = app.add_subcommand("oracle", "exact omega, alpha, chi");
    add_common(oracle, true);
    add_limits(oracle);

    CLI::App* bench = app.add_subcommand("bench", "timing sweep as CSV");
    add_common(add_gen(bench), false);
    add_limits(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (recognize->parsed()) return cmd_recognize(input_path);
        if (color->parsed()) return cmd_color(input_path, force, out_path, limits);
        if (gen->parsed()) {
            auto params = parse_params(param_kvs, {"count", "max_n"});
            return cmd_generate(family_flag, seed, params, out_path);
        }
        if (harness->parsed()) {
            auto params = parse_params(param_kvs, {"count", "max_n"});
            return cmd_harness(family_flag, seed, params, out_path, jobs);
        }
        if (oracle->parsed()) return cmd_oracle(input_path, limits);
        if (bench->parsed()) {
            auto params = parse_params(param_kvs, {"count", "max_n"});
            return cmd_bench(family_flag, seed, params, out_path, limits);
        }
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
