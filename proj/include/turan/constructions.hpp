#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turan/crosscut.hpp"
#include "turan/embedding.hpp"
#include "turan/error.hpp"
#include "turan/graph.hpp"
#include "turan/graph_algorithms.hpp"
#include "turan/norm_tower.hpp"
#include "turan/rng.hpp"
#include "turan/triple_system.hpp"

namespace turan {

/// One verified claim. Advisory checks record a comparison without gating
/// the report (e.g. an exact degree claim that ignores loops).
struct Check {
    std::string claim;
    std::string cited_location;
    std::string measured;
    std::string bound;
    bool pass = false;
    bool advisory = false;
};

struct ConstructionReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Check> checks;

    bool all_pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.advisory || c.pass; });
    }

    std::optional<std::string> param(const std::string& key) const
    {
        for (const auto& [k, v] : params)
            if (k == key)
                return v;
        return std::nullopt;
    }
};

struct GraphConstruction {
    Graph graph;
    ConstructionReport report;
};

struct TripleConstruction {
    TripleSystem system;
    ConstructionReport report;
};

/// Every cited_location used by construction reports.
inline const std::vector<std::string>& claim_anchors()
{
    static const std::vector<std::string> anchors{
        "projective-norm-graph-definition", "norm-graph-kst-free",          "norm-graph-triangle-count",
        "quotient-norm-graph-definition",   "quotient-norm-graph-degree",   "quotient-norm-graph-codegree",
        "quotient-norm-graph-k3t-free",     "crosscut-construction",        "layered-construction",
        "random-deletion-construction"};
    return anchors;
}

/// Adjacency is stored as n bitsets of n bits, so constructions are capped.
inline constexpr std::size_t kMaxConstructionVertices = 1U << 14;
inline constexpr std::uint64_t kMaxNormGraphExtension = 4096;
inline constexpr std::uint32_t kMaxQuotientQ = 64;

namespace detail {

inline std::string num(std::uint64_t x) { return std::to_string(x); }

inline std::string num(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline std::uint64_t ipow64(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// "d1:c1,d2:c2,..." in increasing degree.
inline std::string degree_multiset(const Graph& g)
{
    std::map<std::size_t, std::size_t> hist;
    for (auto d : g.degrees())
        ++hist[d];
    std::string out;
    for (const auto& [d, c] : hist) {
        if (!out.empty())
            out += ',';
        out += num(std::uint64_t{d}) + ':' + num(std::uint64_t{c});
    }
    return out;
}

/// Index of an extension element in discrete-log order: 0 for zero,
/// 1 + log otherwise.
inline std::vector<std::uint32_t> log_order_index(const FieldContext& f)
{
    std::vector<std::uint32_t> idx(f.order(), 0);
    for (std::uint32_t c = 1; c < f.order(); ++c)
        idx[c] = 1 + f.log(f.element(c));
    return idx;
}

inline void search_common(const Graph& g, std::size_t k, Vertex from, const BitRow& common, std::size_t& best)
{
    for (Vertex v = from; v < g.vertex_count(); ++v) {
        BitRow next = common;
        next &= g.neighbors(v);
        const auto c = next.count();
        if (c <= best)
            continue; // intersections only shrink
        if (k == 1)
            best = c;
        else
            search_common(g, k - 1, v + 1, next, best);
    }
}

/// Degree and loop checks shared by the two norm graphs.
inline void add_degree_checks(ConstructionReport& r, const Graph& g, std::uint64_t full_degree, const std::string& where)
{
    const auto deg = g.degrees();
    const bool within = std::all_of(deg.begin(), deg.end(), [&](std::size_t d) {
        return d + 1 == full_degree || d == full_degree;
    });
    const bool exact = std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == full_degree; });
    const auto multiset = degree_multiset(g);
    r.checks.push_back({"every degree is " + num(full_degree) + " up to one discarded loop", where, multiset,
                        "{" + num(full_degree - 1) + "," + num(full_degree) + "}", within, false});
    r.checks.push_back(
        {"each vertex has degree exactly " + num(full_degree), where, multiset, "{" + num(full_degree) + "}", exact, true});
}

} // namespace detail

/// max over k-subsets S of |common neighbourhood of S|, or nullopt when the
/// number of k-subsets exceeds `limit`. Pruned against the best value so far.
inline std::optional<std::size_t> max_common_neighborhood(const Graph& g, std::size_t k,
                                                          std::uint64_t limit = 50'000'000)
{
    if (k == 0 || k > g.vertex_count())
        return 0;
    if (detail::binomial(g.vertex_count(), k) > limit)
        return std::nullopt;
    BitRow all(g.vertex_count());
    all.set_all();
    std::size_t best = 0;
    detail::search_common(g, k, 0, all, best);
    return best;
}

/// PG(q, s): vertices (A, a) in GF(q^{s-1}) x GF(q)^*, with (A, a) ~ (B, b)
/// iff N(A + B) = ab. Vertex (A, a) has index idx(A) (q - 1) + log(a), where
/// idx(0) = 0 and idx(A) = 1 + log(A). Loops are discarded.
inline GraphConstruction projective_norm_graph(std::uint32_t q, unsigned s)
{
    if (s < 3)
        throw Error(ErrorCode::BadParameter, "projective norm graph needs s >= 3");
    if (q < 2)
        throw Error(ErrorCode::NotPrime, "q must be a prime power");
    const auto big_q = detail::ipow64(q, s - 1);
    if (big_q > kMaxNormGraphExtension)
        throw Error(ErrorCode::TooLarge, "projective norm graph needs q^(s-1) <= 4096");
    const std::uint64_t n = big_q * (q - 1);
    if (n > kMaxConstructionVertices)
        throw Error(ErrorCode::TooLarge, "projective norm graph exceeds the vertex cap");

    const auto tower = build_tower(q, s);
    const auto& ext = tower.extension();
    const auto& base = tower.base();
    const std::uint32_t units = q - 1;
    const auto idx = detail::log_order_index(ext);

    std::vector<Edge> edges;
    for (std::uint32_t ac = 0; ac < ext.order(); ++ac) {
        for (std::uint32_t bc = ac; bc < ext.order(); ++bc) {
            const auto sum = ext.add(ext.element(ac), ext.element(bc));
            if (sum.is_zero())
                continue;
            const auto lx = base.log(tower.norm(sum));
            for (std::uint32_t i = 0; i < units; ++i) {
                const std::uint32_t j = (lx + units - i) % units;
                const auto u = static_cast<Vertex>(idx[ac] * units + i);
                const auto v = static_cast<Vertex>(idx[bc] * units + j);
                if (u != v)
                    edges.push_back({u, v});
            }
        }
    }
    GraphConstruction out{Graph(n, std::move(edges)), {}};
    auto& r = out.report;
    r.name = "projective_norm_graph";
    r.params = {{"q", detail::num(std::uint64_t{q})}, {"s", detail::num(std::uint64_t{s})}};
    r.n = out.graph.vertex_count();
    r.m = out.graph.edge_count();
    r.checks.push_back({"vertex count is q^(s-1)(q-1)", "projective-norm-graph-definition", detail::num(r.n),
                        detail::num(n), r.n == n, false});
    detail::add_degree_checks(r, out.graph, big_q - 1, "projective-norm-graph-definition");

    std::uint64_t t = 1;
    for (unsigned i = 2; i < s; ++i)
        t *= i;
    ++t;
    if (auto common = max_common_neighborhood(out.graph, s))
        r.checks.push_back({"no K_{s,t} with t = (s-1)!+1: every s-set has fewer than t common neighbours",
                            "norm-graph-kst-free", detail::num(std::uint64_t{*common}), "< " + detail::num(t),
                            *common < t, false});
    return out;
}

/// H_r(q): vertices (A, aQ_r) in GF(q^2) x GF(q)^*/Q_r, adjacent iff
/// N(A + B) lies in ab Q_r. Vertex index idx(A) (q - 1)/r + coset(a); loops
/// are discarded.
inline GraphConstruction quotient_norm_graph(std::uint32_t q, std::uint32_t r)
{
    if (q > kMaxQuotientQ)
        throw Error(ErrorCode::TooLarge, "quotient norm graph needs q <= 64");
    const auto tower = build_tower(q, 3);
    const auto sub = mult_subgroup(tower, r);
    const auto& ext = tower.extension();
    const std::uint32_t cosets = sub.coset_count();
    const std::uint64_t n = std::uint64_t{ext.order()} * cosets;
    if (n > kMaxConstructionVertices)
        throw Error(ErrorCode::TooLarge, "quotient norm graph exceeds the vertex cap");
    const auto idx = detail::log_order_index(ext);

    std::vector<Edge> edges;
    for (std::uint32_t ac = 0; ac < ext.order(); ++ac) {
        for (std::uint32_t bc = ac; bc < ext.order(); ++bc) {
            const auto sum = ext.add(ext.element(ac), ext.element(bc));
            if (sum.is_zero())
                continue;
            const auto x = sub.coset_index(tower.norm(sum));
            for (std::uint32_t i = 0; i < cosets; ++i) {
                const std::uint32_t j = (x + cosets - i) % cosets;
                const auto u = static_cast<Vertex>(idx[ac] * cosets + i);
                const auto v = static_cast<Vertex>(idx[bc] * cosets + j);
                if (u != v)
                    edges.push_back({u, v});
            }
        }
    }
    GraphConstruction out{Graph(n, std::move(edges)), {}};
    auto& rep = out.report;
    rep.name = "quotient_norm_graph";
    rep.params = {{"q", detail::num(std::uint64_t{q})}, {"r", detail::num(std::uint64_t{r})}, {"s", "3"}};
    rep.n = out.graph.vertex_count();
    rep.m = out.graph.edge_count();
    const std::uint64_t expected_n = (detail::ipow64(q, 3) - detail::ipow64(q, 2)) / r;
    rep.checks.push_back({"vertex count is (q^3 - q^2)/r", "quotient-norm-graph-definition", detail::num(rep.n),
                          detail::num(expected_n), rep.n == expected_n, false});
    detail::add_degree_checks(rep, out.graph, std::uint64_t{q} * q - 1, "quotient-norm-graph-degree");

    // Pairs with distinct first coordinates.
    if (n <= 4096) {
        auto min_common = std::numeric_limits<std::size_t>::max();
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (u / cosets != v / cosets)
                    min_common = std::min(min_common, out.graph.neighbors(u).intersection_count(out.graph.neighbors(v)));
        const std::uint64_t floor = std::uint64_t{r} * (q - 2);
        rep.checks.push_back({"pairs with distinct first coordinates have at least r(q-2) common neighbours",
                              "quotient-norm-graph-codegree", detail::num(std::uint64_t{min_common}),
                              ">= " + detail::num(floor), min_common >= floor, false});
    }
    const std::uint64_t t = 2ULL * r * r + 1;
    if (auto common = max_common_neighborhood(out.graph, 3))
        rep.checks.push_back({"no K_{3,t} with t = 2r^2+1: every 3-set has fewer than t common neighbours",
                              "quotient-norm-graph-k3t-free", detail::num(std::uint64_t{*common}),
                              "< " + detail::num(t), *common < t, false});
    return out;
}

/// Triple system of the triangles of g.
inline TripleConstruction triangle_hypergraph(const Graph& g)
{
    TripleConstruction out{triangles_of_graph(g), {}};
    auto& r = out.report;
    r.name = "triangle_hypergraph";
    r.n = out.system.vertex_count();
    r.m = out.system.size();
    return out;
}

/// Triangle hypergraph of a projective norm graph, with the counting floor
/// q^{s-1}(q-1)(q^{s-1}-1)(q^{s-2}-2)/6.
inline TripleConstruction triangle_hypergraph(const GraphConstruction& source)
{
    auto out = triangle_hypergraph(source.graph);
    auto& r = out.report;
    r.params = source.report.params;
    r.params.insert(r.params.begin(), {"source", source.report.name});
    if (source.report.name == "projective_norm_graph") {
        const auto q = std::stoull(*source.report.param("q"));
        const auto s = static_cast<unsigned>(std::stoull(*source.report.param("s")));
        const auto big_q = detail::ipow64(q, s - 1);
        const auto third = detail::ipow64(q, s - 2);
        const std::uint64_t floor = third >= 2 ? big_q * (q - 1) * (big_q - 1) * (third - 2) / 6 : 0;
        r.checks.push_back({"triangle count is at least q^(s-1)(q-1)(q^(s-1)-1)(q^(s-2)-2)/6",
                            "norm-graph-triangle-count", detail::num(std::uint64_t{r.m}), ">= " + detail::num(floor),
                            r.m >= floor, false});
    }
    return out;
}

/// All triples meeting the core {0, ..., sigma-2} in exactly one vertex.
inline TripleSystem sigma_construction(std::size_t n, std::size_t sigma)
{
    if (sigma < 1 || n < sigma + 2)
        throw Error(ErrorCode::BadParameter, "sigma construction needs sigma >= 1 and n >= sigma + 2");
    const auto core = static_cast<Vertex>(sigma - 1);
    std::vector<Triple> triples;
    for (Vertex c = 0; c < core; ++c)
        for (Vertex a = core; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                triples.emplace_back(c, a, b);
    return TripleSystem(n, std::move(triples));
}

inline TripleConstruction sigma_construction_report(std::size_t n, std::size_t sigma)
{
    TripleConstruction out{sigma_construction(n, sigma), {}};
    auto& r = out.report;
    r.name = "sigma_construction";
    r.params = {{"n", detail::num(std::uint64_t{n})}, {"sigma", detail::num(std::uint64_t{sigma})}};
    r.n = n;
    r.m = out.system.size();
    const auto expected = (sigma - 1) * detail::binomial(n - sigma + 1, 2);
    r.checks.push_back({"triple count is (sigma-1) C(n-sigma+1, 2)", "crosscut-construction", detail::num(std::uint64_t{r.m}),
                        detail::num(std::uint64_t{expected}), r.m == expected, false});
    std::vector<Vertex> core(sigma - 1);
    for (Vertex i = 0; i + 1 < sigma; ++i)
        core[i] = i;
    r.checks.push_back({"every triple meets the core in exactly one vertex", "crosscut-construction",
                        is_crosscut(out.system, core) ? "true" : "false", "true", is_crosscut(out.system, core), false});
    return out;
}

/// F = high_girth_bipartite(floor(n/2), k, seed) on U u V = {0, ..., floor(n/2)-1};
/// X is the remaining ceil(n/2) vertices; triples {u, v, x} for uv in F, x in X.
inline TripleConstruction layered_girth_construction(std::size_t n, std::size_t k, std::uint64_t seed)
{
    if (n < 6 || k < 3)
        throw Error(ErrorCode::BadParameter, "layered construction needs n >= 6 and k >= 3");
    const std::size_t half = n / 2;
    const auto f = high_girth_bipartite(half, k, seed);
    std::vector<Triple> triples;
    triples.reserve(f.edge_count() * (n - half));
    for (const auto& e : f.edges())
        for (auto x = static_cast<Vertex>(half); x < n; ++x)
            triples.emplace_back(e.u, e.v, x);
    TripleConstruction out{TripleSystem(n, std::move(triples)), {}};
    auto& r = out.report;
    r.name = "layered_girth_construction";
    r.params = {{"n", detail::num(std::uint64_t{n})}, {"k", detail::num(std::uint64_t{k})}, {"seed", detail::num(seed)}};
    r.n = n;
    r.m = out.system.size();
    const std::size_t x_size = n - half;
    r.checks.push_back({"triple count is |X| |F|", "layered-construction", detail::num(std::uint64_t{r.m}),
                        detail::num(std::uint64_t{x_size * f.edge_count()}), r.m == x_size * f.edge_count(), false});
    const auto gi = girth(f);
    r.checks.push_back({"girth of the U-V layer exceeds k", "layered-construction",
                        gi ? detail::num(std::uint64_t{*gi}) : "infinite", "> " + detail::num(std::uint64_t{k}),
                        !gi || *gi > k, false});
    const std::size_t u_size = half / 2;
    bool layered = true;
    for (const auto& t : out.system.triples())
        layered = layered && t.v[0] < u_size && t.v[1] >= u_size && t.v[1] < half && t.v[2] >= half;
    r.checks.push_back({"every triple meets U, V and X once each", "layered-construction", layered ? "true" : "false",
                        "true", layered, false});
    r.params.push_back({"bipartite_edges", detail::num(std::uint64_t{f.edge_count()})});
    return out;
}

/// Random graph G(n, p) with p = 0.1 n^{-(v-3)/(f-3)}, then one edge removed
/// from each remaining copy of the pattern until none is left; the output is
/// the triangle hypergraph of what remains. Copies are taken in the
/// embedding search order and lose their lexicographically smallest edge.
inline TripleConstruction random_deletion_construction(std::size_t n, const Graph& pattern, std::uint64_t seed,
                                                       std::uint64_t budget = kDefaultBudget)
{
    const std::size_t v = pattern.vertex_count();
    const std::size_t f = pattern.edge_count();
    if (f < 4)
        throw Error(ErrorCode::BadParameter, "pattern needs at least 4 edges");
    if (n > 200)
        throw Error(ErrorCode::TooLarge, "random deletion construction needs n <= 200");
    const double exponent = (static_cast<double>(v) - 3.0) / (static_cast<double>(f) - 3.0);
    const double p = 0.1 * std::pow(static_cast<double>(n), -exponent);

    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (rng.unit() < p)
                edges.push_back({a, b});
    const std::size_t sampled = edges.size();

    Graph g(n, edges);
    std::size_t deletions = 0;
    std::uint64_t spent = 0;
    for (;;) {
        if (spent >= budget)
            throw Error(ErrorCode::PatternTooDense, "copy enumeration exceeded the search budget");
        const auto hit = graph_embed(pattern, g, budget - spent);
        spent += hit.nodes;
        if (hit.verdict == Verdict::BudgetExhausted)
            throw Error(ErrorCode::PatternTooDense, "copy enumeration exceeded the search budget");
        if (hit.verdict == Verdict::None)
            break;
        const auto& m = hit.embedding->map;
        Edge victim{};
        bool first = true;
        for (const auto& e : pattern.edges()) {
            const Edge img{std::min(m[e.u], m[e.v]), std::max(m[e.u], m[e.v])};
            if (first || img < victim)
                victim = img;
            first = false;
        }
        std::erase_if(edges, [&](const Edge& e) { return e.u == victim.u && e.v == victim.v; });
        g = Graph(n, edges);
        ++deletions;
    }

    TripleConstruction out{triangles_of_graph(g), {}};
    auto& r = out.report;
    r.name = "random_deletion_construction";
    r.params = {{"n", detail::num(std::uint64_t{n})},
                {"pattern_vertices", detail::num(std::uint64_t{v})},
                {"pattern_edges", detail::num(std::uint64_t{f})},
                {"seed", detail::num(seed)},
                {"p", detail::num(p)},
                {"sampled_edges", detail::num(std::uint64_t{sampled})},
                {"deleted_edges", detail::num(std::uint64_t{deletions})}};
    r.n = n;
    r.m = out.system.size();
    r.checks.push_back({"residual graph contains no copy of the pattern", "random-deletion-construction", "none",
                        "none", true, false});
    return out;
}

} // namespace turan
