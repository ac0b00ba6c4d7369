#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "golden.hpp"
#include "report_json.hpp"
#include "turan/turan.hpp"

namespace turan::cli {

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;
    double limit_seconds = 0;

    bool pass() const
    {
        return seconds < limit_seconds &&
               std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.advisory || c.pass; });
    }
};

struct SuiteOptions {
    std::filesystem::path golden = "golden/oracle.json";
};

namespace detail {

using turan::detail::num;

inline Check check(std::string claim, std::string where, std::string measured, std::string bound, bool pass)
{
    return Check{std::move(claim), std::move(where), std::move(measured), std::move(bound), pass, false};
}

inline std::string verdict_text(Verdict v) { return std::string(to_string(v)); }

/// No vertex set of size k meets every triple exactly once.
inline bool no_crosscut_of_size(const TripleSystem& h, std::size_t k)
{
    const std::size_t n = h.vertex_count();
    if (k > n)
        return true;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<Vertex> x;
        for (Vertex v = 0; v < n; ++v)
            if (pick[v])
                x.push_back(v);
        if (is_crosscut(h, x))
            return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return true;
}

inline TripleSystem random_system(std::size_t n, double p, Rng& rng)
{
    std::vector<Triple> ts;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (rng.unit() < p)
                    ts.emplace_back(a, b, c);
    return TripleSystem(n, std::move(ts));
}

inline void append_report(std::vector<Check>& out, const ConstructionReport& r)
{
    for (auto c : r.checks) {
        c.claim = r.name + ": " + c.claim;
        out.push_back(std::move(c));
    }
}

} // namespace detail

inline std::vector<Check> norm_fiber_checks()
{
    std::vector<Check> out;
    for (auto [q, s] : {std::pair{3U, 3U}, {4U, 3U}, {5U, 3U}, {7U, 3U}, {3U, 4U}}) {
        const auto t = build_tower(q, s);
        const auto& ext = t.extension();
        std::vector<std::uint64_t> hist(q, 0);
        for (std::uint32_t c = 1; c < ext.order(); ++c)
            ++hist[t.norm(ext.element(c)).code];
        const auto lo = *std::min_element(hist.begin() + 1, hist.end());
        const auto hi = *std::max_element(hist.begin() + 1, hist.end());
        const std::uint64_t want = (ext.order() - 1) / (q - 1);
        out.push_back(detail::check("every nonzero x has (q^(s-1)-1)/(q-1) norm preimages at q=" + detail::num(std::uint64_t{q}) +
                                        ", s=" + detail::num(std::uint64_t{s}),
                                    "norm-fiber-count", detail::num(lo) + ".." + detail::num(hi), detail::num(want),
                                    lo == want && hi == want));
    }
    return out;
}

inline std::vector<Check> norm_ratio_checks()
{
    std::vector<Check> out;
    for (std::uint32_t q : {3U, 4U, 5U}) {
        const auto t = build_tower(q, 3);
        const auto& ext = t.extension();
        const auto& base = t.base();
        auto least = std::numeric_limits<std::uint64_t>::max();
        for (std::uint32_t a = 0; a < ext.order(); ++a)
            for (std::uint32_t b = 0; b < ext.order(); ++b)
                if (a != b)
                    for (std::uint32_t x = 1; x < base.order(); ++x)
                        least = std::min(least, count_norm_ratio_solutions(t, ext.element(a), ext.element(b),
                                                                           base.element(x)));
        out.push_back(detail::check("N((A+C)/(B+C)) = x has at least q^(s-2) solutions C at q=" +
                                        detail::num(std::uint64_t{q}) + ", s=3",
                                    "norm-ratio-solutions", detail::num(least), ">= " + detail::num(std::uint64_t{q}),
                                    least >= q));
    }
    return out;
}

inline std::vector<Check> norm_graph_structure_checks()
{
    std::vector<Check> out;
    for (std::uint32_t q : {3U, 4U, 5U, 7U}) {
        const auto pg = projective_norm_graph(q, 3);
        std::vector<Check> local;
        detail::append_report(local, pg.report);
        detail::append_report(local, triangle_hypergraph(pg).report);
        for (auto& c : local)
            c.claim += " (q=" + detail::num(std::uint64_t{q}) + ")";
        out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

inline std::vector<Check> norm_graph_k33_checks()
{
    std::vector<Check> out;
    for (std::uint32_t q : {3U, 5U}) {
        const auto pg = projective_norm_graph(q, 3);
        const auto r = graph_embed(complete_bipartite(3, 3), pg.graph);
        out.push_back(detail::check("exhaustive search finds no K_{3,3} in PG(" + detail::num(std::uint64_t{q}) + ",3)",
                                    "norm-graph-kst-free", detail::verdict_text(r.verdict) + " after " +
                                                               detail::num(r.nodes) + " nodes",
                                    "none", r.verdict == Verdict::None));
    }
    return out;
}

inline std::vector<Check> quotient_graph_checks()
{
    std::vector<Check> out;
    detail::append_report(out, quotient_norm_graph(5, 2).report);
    return out;
}

inline std::vector<Check> full_subgraph_checks()
{
    Rng rng(2024);
    std::size_t full_ok = 0, bound_ok = 0;
    const std::size_t total = 200;
    for (std::size_t i = 0; i < total; ++i) {
        const auto n = 4 + rng.below(11);
        const auto d = 1 + rng.below(3);
        const auto h = detail::random_system(n, 0.15 + 0.1 * static_cast<double>(rng.below(5)), rng);
        const auto r = full_subgraph(h, d);
        full_ok += is_full(r.full, d + 1);
        const auto lhs = static_cast<long long>(r.full.size());
        const auto rhs = static_cast<long long>(h.size()) -
                         static_cast<long long>(d * shadow(h).edge_count());
        bound_ok += lhs >= rhs;
    }
    return {detail::check("output is (d+1)-full on random systems", "full-subgraph-lemma", detail::num(full_ok),
                          detail::num(total), full_ok == total),
            detail::check("|F| >= |H| - d|shadow(H)| on random systems", "full-subgraph-lemma", detail::num(bound_ok),
                          detail::num(total), bound_ok == total)};
}

inline std::vector<Check> oracle_checks(const SuiteOptions& opt)
{
    std::vector<Check> out;
    auto exact = [&](const ExtremalResult& r, std::size_t want) {
        out.push_back(detail::check("ex" + detail::num(std::uint64_t{r.r}) + "(" + detail::num(std::uint64_t{r.n}) +
                                        ", " + r.pattern + ") = " + detail::num(std::uint64_t{want}),
                                    "extremal-number-definition", detail::num(std::uint64_t{r.value}),
                                    detail::num(std::uint64_t{want}), r.value == want && r.witness_verified));
    };
    exact(ex2_bruteforce(5, clique(3), true, "K3"), 6);
    exact(ex2_bruteforce(4, cycle(4), true, "C4"), 4);
    exact(ex3_bruteforce(5, expand(clique(3)), true, "K3plus"), 10);
    exact(ex3_bruteforce(6, disjoint_triples(2), true, "M2"), 10);
    const auto k3 = ex3_bruteforce(6, expand(clique(3)), true, "K3plus");
    out.push_back(detail::check("ex3(6, K3plus) >= 10", "extremal-number-definition", detail::num(std::uint64_t{k3.value}),
                                ">= 10", k3.value >= 10 && k3.witness_verified));
    const auto again = ex3_bruteforce(6, expand(clique(3)), true, "K3plus");
    const auto status = check_or_record(opt.golden, k3);
    out.push_back(detail::check("ex3(6, K3plus) matches the stored golden value and re-runs identically",
                                "extremal-number-definition", std::string(to_string(status)), "matched or recorded",
                                status != GoldenStatus::Mismatch && again.value == k3.value &&
                                    again.witness == k3.witness));
    return out;
}

inline std::vector<Check> crosscut_checks()
{
    std::vector<Check> out;
    struct Case {
        const char* name;
        TripleSystem h;
        std::size_t want;
    };
    for (const auto& c : {Case{"K3plus", expand(clique(3)), 2}, Case{"K33plus", expand(complete_bipartite(3, 3)), 3},
                          Case{"Ht2", h_t_pattern(2), 2}}) {
        const auto r = crosscut(c.h);
        const bool minimal = detail::no_crosscut_of_size(c.h, c.want - 1);
        out.push_back(detail::check(std::string("crosscut number of ") + c.name + " is " + detail::num(std::uint64_t{c.want}) +
                                        " and no smaller crosscut exists",
                                    "crosscut-definition", r.exists ? detail::num(std::uint64_t{r.size}) : "none",
                                    detail::num(std::uint64_t{c.want}),
                                    r.exists && r.size == c.want && is_crosscut(c.h, r.witness) && minimal));
    }
    return out;
}

inline std::vector<Check> sigma_freeness_checks()
{
    std::vector<Check> out;
    struct Case {
        const char* name;
        TripleSystem pattern;
        std::size_t n, sigma;
    };
    for (const auto& c : {Case{"K3plus", expand(clique(3)), 12, 2}, Case{"Ht2", h_t_pattern(2), 12, 2},
                          Case{"K33plus", expand(complete_bipartite(3, 3)), 14, 3}}) {
        const auto r = triple_embed(c.pattern, sigma_construction(c.n, c.sigma));
        out.push_back(detail::check(std::string(c.name) + " does not embed in sigma_construction(" +
                                        detail::num(std::uint64_t{c.n}) + "," + detail::num(std::uint64_t{c.sigma}) + ")",
                                    "crosscut-construction", detail::verdict_text(r.verdict), "none",
                                    r.verdict == Verdict::None));
    }
    const auto size = sigma_construction(12, 2).size();
    out.push_back(detail::check("|sigma_construction(12,2)| = 55", "crosscut-construction",
                                detail::num(std::uint64_t{size}), "55", size == 55));
    return out;
}

inline std::vector<Check> coloring_checks()
{
    std::vector<Check> out;
    const auto o = octahedron();
    std::size_t colorings = 0, all_four = 0;
    for (const auto& c : proper_3_colorings(o)) {
        ++colorings;
        const auto p = bichromatic_cycle_profile(o, c);
        all_four += std::all_of(p.begin(), p.end(), [](const auto& x) { return x && *x == 4; });
    }
    out.push_back(detail::check("every proper 3-coloring of the octahedron has bichromatic cycles of length 4",
                                "acyclic-coloring-octahedron", detail::num(std::uint64_t{all_four}) + "/" +
                                                                   detail::num(std::uint64_t{colorings}),
                                "all", colorings > 0 && all_four == colorings));
    for (std::size_t k : {4U, 6U}) {
        const auto r = has_acyclic_3_coloring(wheel(k));
        out.push_back(detail::check("wheel(" + detail::num(std::uint64_t{k}) + ") has no acyclic 3-coloring",
                                    "acyclic-coloring-even-wheels", r.exists ? "true" : "false", "false", !r.exists));
    }
    for (const auto& [name, g] : {std::pair{std::string("path(3)"), path(3)}, {std::string("cycle(5)"), cycle(5)}}) {
        const auto r = has_acyclic_3_coloring(g);
        bool verified = r.exists && r.witness && is_proper(g, *r.witness);
        if (verified)
            for (const auto& x : bichromatic_cycle_profile(g, *r.witness))
                verified = verified && !x;
        out.push_back(detail::check(name + " has an acyclic 3-coloring with a verified witness",
                                    "acyclic-coloring-definition", verified ? "true" : "false", "true", verified));
    }
    return out;
}

inline std::vector<Check> deletion_and_layer_checks()
{
    std::vector<Check> out;
    const auto del = random_deletion_construction(60, complete_bipartite(2, 2), 7);
    const auto r = contains_expansion(complete_bipartite(2, 2), del.system);
    out.push_back(detail::check("random_deletion_construction(60, K22, 7) contains no K22 expansion",
                                "random-deletion-construction", detail::verdict_text(r.verdict) + ", " +
                                                                    detail::num(std::uint64_t{del.system.size()}) +
                                                                    " triples",
                                "none", r.verdict == Verdict::None));
    const auto lay = layered_girth_construction(20, 4, 1);
    std::vector<Vertex> uv(10);
    for (Vertex i = 0; i < 10; ++i)
        uv[i] = i;
    const auto layer = shadow(lay.system).induced(uv);
    const auto gi = girth(layer);
    out.push_back(detail::check("layered_girth_construction(20, 4, 1) has girth >= 5 on the U-V layer",
                                "layered-construction", gi ? detail::num(std::uint64_t{*gi}) : "infinite", ">= 5",
                                !gi || *gi >= 5));
    const auto f = layer.edge_count();
    out.push_back(detail::check("layered_girth_construction(20, 4, 1) has |X| |F| triples", "layered-construction",
                                detail::num(std::uint64_t{lay.system.size()}), detail::num(std::uint64_t{10 * f}),
                                lay.system.size() == 10 * f));
    return out;
}

struct CriterionSpec {
    int id;
    const char* title;
    double limit_seconds;
    std::function<std::vector<Check>(const SuiteOptions&)> run;
};

inline const std::vector<CriterionSpec>& acceptance_criteria()
{
    static const std::vector<CriterionSpec> specs{
        {1, "norm fibers have exactly (q^(s-1)-1)/(q-1) elements", 5, [](const SuiteOptions&) { return norm_fiber_checks(); }},
        {2, "norm ratio equation has at least q^(s-2) solutions", 60, [](const SuiteOptions&) { return norm_ratio_checks(); }},
        {3, "PG(q,3) vertex count, degrees and triangle floor", 120,
         [](const SuiteOptions&) { return norm_graph_structure_checks(); }},
        {4, "PG(q,3) contains no K_{3,3}", 300, [](const SuiteOptions&) { return norm_graph_k33_checks(); }},
        {5, "H_2(5) vertex count, degrees, codegrees and K_{3,9}-freeness", 120,
         [](const SuiteOptions&) { return quotient_graph_checks(); }},
        {6, "full subgraph extraction on 200 random systems", 30, [](const SuiteOptions&) { return full_subgraph_checks(); }},
        {7, "extremal numbers from exhaustive search", 600, [](const SuiteOptions& o) { return oracle_checks(o); }},
        {8, "crosscut numbers with certified minimality", 10, [](const SuiteOptions&) { return crosscut_checks(); }},
        {9, "sigma constructions avoid patterns with larger crosscut", 300,
         [](const SuiteOptions&) { return sigma_freeness_checks(); }},
        {10, "3-coloring facts for the octahedron, even wheels, paths and cycles", 10,
         [](const SuiteOptions&) { return coloring_checks(); }},
        {11, "random deletion and layered construction contracts", 120,
         [](const SuiteOptions&) { return deletion_and_layer_checks(); }},
    };
    return specs;
}

inline CriterionResult run_criterion(const CriterionSpec& spec, const SuiteOptions& opt)
{
    CriterionResult out;
    out.id = spec.id;
    out.title = spec.title;
    out.limit_seconds = spec.limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
        out.checks = spec.run(opt);
    } catch (const std::exception& e) {
        out.checks.push_back(detail::check("criterion ran without error", "none", e.what(), "no error", false));
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

/// Criterion ids per named suite.
inline const std::vector<std::pair<std::string, std::vector<int>>>& suite_table()
{
    static const std::vector<std::pair<std::string, std::vector<int>>> table{
        {"acceptance", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
        {"fields", {1, 2}},
        {"norm-graphs", {3, 4, 5}},
        {"full-subgraph", {6}},
        {"oracle", {7}},
        {"crosscuts", {8, 9}},
        {"colorings", {10}},
        {"constructions", {11}},
    };
    return table;
}

inline std::vector<CriterionResult> run_suite(const std::string& name, const SuiteOptions& opt,
                                              const std::function<void(const CriterionResult&)>& on_result = {})
{
    for (const auto& [suite, ids] : suite_table()) {
        if (suite != name)
            continue;
        std::vector<CriterionResult> out;
        for (const auto& spec : acceptance_criteria()) {
            if (std::find(ids.begin(), ids.end(), spec.id) == ids.end())
                continue;
            out.push_back(run_criterion(spec, opt));
            if (on_result)
                on_result(out.back());
        }
        return out;
    }
    throw Error(ErrorCode::UnknownName, "unknown suite '" + name + "'");
}

inline nlohmann::json to_json(const CriterionResult& r)
{
    auto checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back(cli::to_json(c));
    return {{"id", r.id},           {"title", r.title},   {"pass", r.pass()},
            {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}, {"checks", checks}};
}

} // namespace turan::cli
