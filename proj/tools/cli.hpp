#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "golden.hpp"
#include "report_json.hpp"
#include "suites.hpp"
#include "turan/turan.hpp"

namespace turan::cli {

namespace fs = std::filesystem;

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

inline constexpr const char* kBudgetEnv = "TURAN_BUDGET";

/// Default search budget, overridable through TURAN_BUDGET.
inline std::uint64_t default_budget()
{
    const char* env = std::getenv(kBudgetEnv);
    if (env == nullptr || *env == '\0')
        return kDefaultBudget;
    const std::string s(env);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v == 0)
        throw Error(ErrorCode::BadParameter, std::string(kBudgetEnv) + " must be a positive integer");
    return v;
}

/// A path to an existing file is read; anything else is a pattern name.
inline Graph load_graph(const std::string& spec)
{
    if (fs::is_regular_file(spec)) {
        std::ifstream in(spec);
        return read_graph(in);
    }
    return named_graph(spec);
}

inline TripleSystem load_triple_system(const std::string& spec)
{
    if (fs::is_regular_file(spec)) {
        std::ifstream in(spec);
        return read_triple_system(in);
    }
    return named_triple_system(spec);
}

inline std::string label_of(const std::string& spec)
{
    return fs::is_regular_file(spec) ? fs::path(spec).stem().string() : spec;
}

inline void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out)
        throw Error(ErrorCode::BadParameter, "cannot write " + path.string());
}

inline void emit_error(std::ostream& err, const std::string& code, const std::string& message)
{
    err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

struct Artifacts {
    json report;
    std::vector<std::string> files;
};

inline Artifacts write_graph_artifacts(const fs::path& dir, const std::string& stem, const GraphConstruction& c)
{
    fs::create_directories(dir);
    write_file(dir / (stem + ".g"), to_text(c.graph));
    const auto report = to_json(c.report);
    write_file(dir / (stem + ".json"), report.dump(2) + "\n");
    return {report, {(dir / (stem + ".g")).string(), (dir / (stem + ".json")).string()}};
}

inline Artifacts write_triple_artifacts(const fs::path& dir, const std::string& stem, const TripleConstruction& c)
{
    fs::create_directories(dir);
    write_file(dir / (stem + ".h3"), to_text(c.system));
    const auto report = to_json(c.report);
    write_file(dir / (stem + ".json"), report.dump(2) + "\n");
    return {report, {(dir / (stem + ".h3")).string(), (dir / (stem + ".json")).string()}};
}

inline void print_report_text(std::ostream& out, const json& r)
{
    out << r["name"].get<std::string>() << ": n=" << r["n"] << " m=" << r["m"] << '\n';
    for (const auto& c : r["checks"])
        out << "  [" << (c["pass"].get<bool>() ? "pass" : (c.contains("advisory") ? "note" : "FAIL")) << "] "
            << c["claim"].get<std::string>() << " (measured " << c["measured"].get<std::string>() << ", expected "
            << c["bound"].get<std::string>() << ")\n";
}

/// Parses and runs one command line; returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Constructions, containment searches and exhaustive checks for small graphs and triple systems",
                 "turan"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    // field
    auto* field = app.add_subcommand("field", "Describe GF(p^m) and optionally its norm tower");
    std::uint32_t field_p = 0;
    unsigned field_m = 1;
    unsigned tower_s = 0;
    field->add_option("--p", field_p, "Characteristic")->required();
    field->add_option("--m", field_m, "Extension degree");
    field->add_option("--tower-s", tower_s, "Build GF(p^(m(s-1))) over GF(p^m)")->check(CLI::Range(2U, 64U));

    // construct
    auto* construct = app.add_subcommand("construct", "Build a construction and write it with its report");
    construct->require_subcommand(1);
    std::string out_dir = ".";
    construct->add_option("--out-dir", out_dir, "Directory for artifacts");
    auto* c_pg = construct->add_subcommand("pg", "Projective norm graph PG(q,s)");
    std::uint32_t pg_q = 0;
    unsigned pg_s = 3;
    bool pg_triangles = false;
    c_pg->add_option("--q", pg_q)->required();
    c_pg->add_option("--s", pg_s);
    c_pg->add_flag("--triangles", pg_triangles, "Also write the triangle hypergraph");
    auto* c_hrq = construct->add_subcommand("hrq", "Quotient norm graph H_r(q)");
    std::uint32_t hrq_q = 0, hrq_r = 1;
    c_hrq->add_option("--q", hrq_q)->required();
    c_hrq->add_option("--r", hrq_r)->required();
    auto* c_sigma = construct->add_subcommand("sigma", "Triples meeting a core of size sigma-1 exactly once");
    std::size_t sigma_n = 0, sigma_sigma = 0;
    c_sigma->add_option("--n", sigma_n)->required();
    c_sigma->add_option("--sigma", sigma_sigma)->required();
    auto* c_layers = construct->add_subcommand("girth-layers", "High-girth bipartite layer times a free part");
    std::size_t layers_n = 0, layers_k = 0;
    std::uint64_t layers_seed = 0;
    c_layers->add_option("--n", layers_n)->required();
    c_layers->add_option("--k", layers_k)->required();
    c_layers->add_option("--seed", layers_seed);
    auto* c_del = construct->add_subcommand("random-del", "Random graph with pattern copies destroyed");
    std::size_t del_n = 0;
    std::string del_pattern;
    std::uint64_t del_seed = 0;
    std::uint64_t del_budget = 0;
    c_del->add_option("--n", del_n)->required();
    c_del->add_option("--pattern", del_pattern)->required();
    c_del->add_option("--seed", del_seed);
    c_del->add_option("--budget", del_budget);

    // verify
    auto* verify = app.add_subcommand("verify", "Search for a copy of a pattern in a host");
    std::string v_pattern, v_host, v_mode = "graph";
    std::uint64_t v_budget = 0;
    verify->add_option("--pattern", v_pattern, "Pattern file or name")->required();
    verify->add_option("--host", v_host, "Host file or name")->required();
    verify->add_option("--mode", v_mode)->check(CLI::IsMember({"graph", "triple", "expansion"}));
    verify->add_option("--budget", v_budget, "Search node budget");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exhaustive extremal number for tiny n");
    unsigned o_r = 2;
    std::size_t o_n = 0;
    std::string o_pattern, o_golden;
    bool o_no_pruning = false;
    oracle->add_option("--r", o_r)->check(CLI::IsMember({2U, 3U}));
    oracle->add_option("--n", o_n)->required();
    oracle->add_option("--pattern", o_pattern)->required();
    oracle->add_option("--golden", o_golden, "Golden results file to check or populate");
    oracle->add_flag("--no-pruning", o_no_pruning, "Disable isomorph rejection and bounding");

    // report
    auto* report = app.add_subcommand("report", "Run a named acceptance suite");
    std::string r_suite, r_golden = "golden/oracle.json";
    report->add_option("--suite", r_suite)->required();
    report->add_option("--golden", r_golden, "Golden results file for the oracle criterion");

    std::vector<std::string> argv_storage{"turan"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "UsageError", e.what());
        return kExitUsage;
    }

    const bool text = format == "text";
    auto emit = [&](const json& j) { out << j.dump(2) << '\n'; };

    try {
        if (*field) {
            const auto f = build_field(field_p, field_m);
            json j{{"p", f.characteristic()},
                   {"m", f.degree()},
                   {"order", f.order()},
                   {"modulus", f.modulus()},
                   {"modulus_string", f.modulus_string()},
                   {"generator", f.generator().code},
                   {"log_tables", f.has_log_tables()}};
            if (tower_s != 0) {
                const auto t = build_tower(field_p, field_m, tower_s);
                const auto& ext = t.extension();
                j["tower"] = {{"s", t.s()},
                              {"extension_order", ext.order()},
                              {"extension_modulus", ext.modulus_string()},
                              {"norm_exponent", t.norm_exponent()},
                              {"embedded_generator", t.embedded_generator().code},
                              {"fiber_size", norm_fiber(t, t.base().one()).size()}};
            }
            if (text) {
                out << "GF(" << f.order() << ") modulus " << f.modulus_string() << ", generator code "
                    << f.generator().code << '\n';
                if (j.contains("tower"))
                    out << "extension GF(" << j["tower"]["extension_order"] << ") modulus "
                        << j["tower"]["extension_modulus"].get<std::string>() << ", norm exponent "
                        << j["tower"]["norm_exponent"] << ", fiber size " << j["tower"]["fiber_size"] << '\n';
            } else {
                emit(j);
            }
            return kExitOk;
        }

        if (*construct) {
            const fs::path dir(out_dir);
            std::vector<Artifacts> made;
            bool pass = true;
            if (*c_pg) {
                const auto pg = projective_norm_graph(pg_q, pg_s);
                const auto stem = "pg_" + std::to_string(pg_q) + "_" + std::to_string(pg_s);
                made.push_back(write_graph_artifacts(dir, stem, pg));
                pass = pass && pg.report.all_pass();
                if (pg_triangles) {
                    const auto tri = triangle_hypergraph(pg);
                    made.push_back(write_triple_artifacts(dir, stem + "_triangles", tri));
                    pass = pass && tri.report.all_pass();
                }
            } else if (*c_hrq) {
                const auto h = quotient_norm_graph(hrq_q, hrq_r);
                made.push_back(write_graph_artifacts(dir, "hrq_" + std::to_string(hrq_q) + "_" + std::to_string(hrq_r), h));
                pass = h.report.all_pass();
            } else if (*c_sigma) {
                const auto s = sigma_construction_report(sigma_n, sigma_sigma);
                made.push_back(
                    write_triple_artifacts(dir, "sigma_" + std::to_string(sigma_n) + "_" + std::to_string(sigma_sigma), s));
                pass = s.report.all_pass();
            } else if (*c_layers) {
                const auto l = layered_girth_construction(layers_n, layers_k, layers_seed);
                made.push_back(write_triple_artifacts(dir,
                                                      "girth_layers_" + std::to_string(layers_n) + "_" +
                                                          std::to_string(layers_k) + "_" + std::to_string(layers_seed),
                                                      l));
                pass = l.report.all_pass();
            } else if (*c_del) {
                const auto budget = del_budget != 0 ? del_budget : default_budget();
                auto d = random_deletion_construction(del_n, load_graph(del_pattern), del_seed, budget);
                d.report.params.insert(d.report.params.begin() + 1, {"pattern", label_of(del_pattern)});
                made.push_back(write_triple_artifacts(dir,
                                                      "random_del_" + std::to_string(del_n) + "_" +
                                                          label_of(del_pattern) + "_" + std::to_string(del_seed),
                                                      d));
                pass = d.report.all_pass();
            }
            if (text) {
                for (const auto& a : made) {
                    print_report_text(out, a.report);
                    for (const auto& f : a.files)
                        out << "  wrote " << f << '\n';
                }
            } else {
                json j = json::array();
                for (const auto& a : made)
                    j.push_back({{"report", a.report}, {"files", a.files}});
                emit(made.size() == 1 ? j[0] : j);
            }
            return pass ? kExitOk : kExitNegative;
        }

        if (*verify) {
            const auto budget = v_budget != 0 ? v_budget : default_budget();
            SearchOutcome r;
            if (v_mode == "graph")
                r = graph_embed(load_graph(v_pattern), load_graph(v_host), budget);
            else if (v_mode == "triple")
                r = triple_embed(load_triple_system(v_pattern), load_triple_system(v_host), budget);
            else
                r = contains_expansion(load_graph(v_pattern), load_triple_system(v_host), budget);
            auto j = to_json(r);
            j["mode"] = v_mode;
            j["budget"] = budget;
            if (text) {
                out << to_string(r.verdict) << " (" << r.nodes << " nodes)\n";
                if (r.embedding) {
                    out << "map:";
                    for (auto x : r.embedding->map)
                        out << ' ' << x;
                    out << '\n';
                }
            } else {
                emit(j);
            }
            switch (r.verdict) {
            case Verdict::Found:
                return kExitOk;
            case Verdict::None:
                return kExitNegative;
            case Verdict::BudgetExhausted:
                return kExitBudget;
            }
        }

        if (*oracle) {
            const auto name = label_of(o_pattern);
            const auto r = o_r == 2 ? ex2_bruteforce(o_n, load_graph(o_pattern), !o_no_pruning, name)
                                    : ex3_bruteforce(o_n, load_triple_system(o_pattern), !o_no_pruning, name);
            auto j = to_json(r);
            int code = kExitOk;
            if (!o_golden.empty()) {
                const auto status = check_or_record(o_golden, r);
                j["golden"] = std::string(to_string(status));
                if (status == GoldenStatus::Mismatch) {
                    emit_error(err, "GoldenMismatch", "result differs from " + o_golden + " entry " + golden_key(r));
                    code = kExitNegative;
                }
            }
            if (text)
                out << "ex" << r.r << "(" << r.n << ", " << r.pattern << ") = " << r.value << " (" << r.nodes
                    << " nodes)\n";
            else
                emit(j);
            return code;
        }

        if (*report) {
            SuiteOptions opt;
            opt.golden = r_golden;
            const auto results = run_suite(r_suite, opt, [&](const CriterionResult& c) {
                if (text)
                    out << (c.pass() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
            });
            bool pass = true;
            json criteria = json::array();
            for (const auto& c : results) {
                pass = pass && c.pass();
                criteria.push_back(to_json(c));
            }
            if (!text)
                emit({{"suite", r_suite}, {"pass", pass}, {"criteria", criteria}});
            return pass ? kExitOk : kExitNegative;
        }
    } catch (const Error& e) {
        const std::string code(to_string(e.code()));
        std::string message = e.what();
        if (message.rfind(code + ": ", 0) == 0)
            message.erase(0, code.size() + 2);
        emit_error(err, code, message);
        return kExitUsage;
    } catch (const std::exception& e) {
        emit_error(err, "InternalError", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace turan::cli
