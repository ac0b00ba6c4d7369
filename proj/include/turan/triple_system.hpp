#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "turan/error.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Sorted 3-set of vertices.
struct Triple {
    std::array<Vertex, 3> v{};

    Triple() = default;
    Triple(Vertex a, Vertex b, Vertex c) : v{a, b, c} { std::sort(v.begin(), v.end()); }

    bool contains(Vertex x) const noexcept { return v[0] == x || v[1] == x || v[2] == x; }
    bool contains(Vertex x, Vertex y) const noexcept { return contains(x) && contains(y); }

    /// The vertex other than x and y; both must be members.
    Vertex third(Vertex x, Vertex y) const noexcept
    {
        for (auto w : v)
            if (w != x && w != y)
                return w;
        return v[0];
    }

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// 3-uniform hypergraph on {0, ..., n-1}: deduplicated, lexicographically
/// ordered triples of distinct vertices.
class TripleSystem {
public:
    TripleSystem() = default;
    explicit TripleSystem(std::size_t n) : n_(n) {}

    TripleSystem(std::size_t n, std::vector<Triple> triples) : n_(n)
    {
        for (auto& t : triples) {
            std::sort(t.v.begin(), t.v.end());
            if (t.v[2] >= n)
                throw Error(ErrorCode::BadParameter, "triple vertex out of range");
            if (t.v[0] == t.v[1] || t.v[1] == t.v[2])
                throw Error(ErrorCode::BadParameter, "triple vertices must be distinct");
        }
        std::sort(triples.begin(), triples.end());
        triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
        triples_ = std::move(triples);
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t size() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }
    const std::vector<Triple>& triples() const noexcept { return triples_; }

    bool contains(const Triple& t) const { return std::binary_search(triples_.begin(), triples_.end(), t); }

    /// Number of triples through each vertex.
    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> out(n_, 0);
        for (const auto& t : triples_)
            for (auto x : t.v)
                ++out[x];
        return out;
    }

    friend bool operator==(const TripleSystem&, const TripleSystem&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Triple> triples_;
};

inline std::uint64_t pair_key(Vertex a, Vertex b) noexcept
{
    if (a > b)
        std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline Edge pair_from_key(std::uint64_t key) noexcept
{
    return Edge{static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffULL)};
}

/// For every pair with positive codegree, the sorted list of vertices that
/// complete it to a triple of h.
inline std::unordered_map<std::uint64_t, std::vector<Vertex>> co_neighborhoods(const TripleSystem& h)
{
    std::unordered_map<std::uint64_t, std::vector<Vertex>> out;
    for (const auto& t : h.triples()) {
        const auto [a, b, c] = t.v;
        out[pair_key(a, b)].push_back(c);
        out[pair_key(a, c)].push_back(b);
        out[pair_key(b, c)].push_back(a);
    }
    for (auto& [key, list] : out)
        std::sort(list.begin(), list.end());
    return out;
}

// ---------------------------------------------------------------------------
// Text format: "h3 <n> <m>" followed by m sorted lines "<u> <v> <w>".

inline void write_triple_system(std::ostream& os, const TripleSystem& h)
{
    os << "h3 " << h.vertex_count() << ' ' << h.size() << '\n';
    for (const auto& t : h.triples())
        os << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
}

inline std::string to_text(const TripleSystem& h)
{
    std::ostringstream os;
    write_triple_system(os, h);
    return os.str();
}

/// Inverse of write_triple_system; rejects unsorted, duplicate or
/// out-of-range triples so the round trip is byte-exact.
inline TripleSystem read_triple_system(std::istream& is)
{
    std::string tag;
    if (!(is >> tag) || tag != "h3")
        throw Error(ErrorCode::ParseError, "hypergraph file must start with 'h3'");
    const auto n = detail::parse_count(is, "vertex count");
    const auto m = detail::parse_count(is, "triple count");
    std::vector<Triple> triples;
    triples.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::array<std::uint64_t, 3> x{};
        for (auto& xi : x)
            xi = detail::parse_count(is, "vertex");
        if (!(x[0] < x[1] && x[1] < x[2]))
            throw Error(ErrorCode::ParseError, "triple vertices must be strictly increasing");
        if (x[2] >= n)
            throw Error(ErrorCode::ParseError, "triple vertex out of range");
        Triple t(static_cast<Vertex>(x[0]), static_cast<Vertex>(x[1]), static_cast<Vertex>(x[2]));
        if (!triples.empty() && !(triples.back() < t))
            throw Error(ErrorCode::ParseError, "triples must be sorted and distinct");
        triples.push_back(t);
    }
    std::string extra;
    if (is >> extra)
        throw Error(ErrorCode::ParseError, "trailing data after triple list");
    return TripleSystem(n, std::move(triples));
}

inline TripleSystem triple_system_from_text(const std::string& text)
{
    std::istringstream is(text);
    return read_triple_system(is);
}

// ---------------------------------------------------------------------------

/// G+: the vertices of g keep their labels and the apex of the i-th edge (in
/// sorted edge order) is n + i.
inline TripleSystem expand(const Graph& g)
{
    const auto n = g.vertex_count();
    std::vector<Triple> triples;
    triples.reserve(g.edge_count());
    Vertex apex = static_cast<Vertex>(n);
    for (const auto& e : g.edges())
        triples.emplace_back(e.u, e.v, apex++);
    return TripleSystem(n + g.edge_count(), std::move(triples));
}

inline Graph shadow(const TripleSystem& h)
{
    std::vector<Edge> edges;
    edges.reserve(3 * h.size());
    for (const auto& t : h.triples()) {
        edges.push_back({t.v[0], t.v[1]});
        edges.push_back({t.v[0], t.v[2]});
        edges.push_back({t.v[1], t.v[2]});
    }
    return Graph(h.vertex_count(), std::move(edges));
}

inline std::size_t codegree(const TripleSystem& h, Vertex u, Vertex v)
{
    if (u == v)
        throw Error(ErrorCode::SameVertex, "codegree needs two distinct vertices");
    if (u >= h.vertex_count() || v >= h.vertex_count())
        throw Error(ErrorCode::BadParameter, "vertex out of range");
    return static_cast<std::size_t>(
        std::count_if(h.triples().begin(), h.triples().end(), [&](const Triple& t) { return t.contains(u, v); }));
}

/// Triple system of the vertex sets of triangles of g.
inline TripleSystem triangles_of_graph(const Graph& g)
{
    std::vector<Triple> triples;
    for (const auto& e : g.edges()) {
        const auto common = g.neighbors(e.u) & g.neighbors(e.v);
        for (auto w = common.find_next(e.v); w != BitRow::npos; w = common.find_next(w))
            triples.emplace_back(e.u, e.v, static_cast<Vertex>(w));
    }
    return TripleSystem(g.vertex_count(), std::move(triples));
}

/// H_t: a = 0, b = 1, x_i = 2i, y_i = 2i + 1 for i = 1..t, with the triples
/// x_i y_i a and x_i y_i b.
inline TripleSystem h_t_pattern(std::size_t t)
{
    if (t < 1)
        throw Error(ErrorCode::BadParameter, "H_t needs t >= 1");
    std::vector<Triple> triples;
    for (Vertex i = 1; i <= t; ++i) {
        triples.emplace_back(0, 2 * i, 2 * i + 1);
        triples.emplace_back(1, 2 * i, 2 * i + 1);
    }
    return TripleSystem(2 * t + 2, std::move(triples));
}

inline TripleSystem complete_triple_system(std::size_t n)
{
    std::vector<Triple> triples;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                triples.emplace_back(a, b, c);
    return TripleSystem(n, std::move(triples));
}

/// k pairwise disjoint triples on 3k vertices.
inline TripleSystem disjoint_triples(std::size_t k)
{
    std::vector<Triple> triples;
    for (Vertex i = 0; i < k; ++i)
        triples.emplace_back(3 * i, 3 * i + 1, 3 * i + 2);
    return TripleSystem(3 * k, std::move(triples));
}

/// Resolves a hypergraph pattern name: <graph name>plus (expansion, e.g.
/// K3plus, K33plus), Ht<t> / H<t>, M<k> (k disjoint triples), complete3_<n>.
inline TripleSystem named_triple_system(const std::string& name)
{
    if (name.size() > 4 && name.compare(name.size() - 4, 4, "plus") == 0)
        return expand(named_graph(name.substr(0, name.size() - 4)));
    if (detail::starts_with(name, "Ht"))
        return h_t_pattern(detail::parse_param(name.substr(2), name));
    if (detail::starts_with(name, "H"))
        return h_t_pattern(detail::parse_param(name.substr(1), name));
    if (detail::starts_with(name, "M"))
        return disjoint_triples(detail::parse_param(name.substr(1), name));
    if (detail::starts_with(name, "complete3_"))
        return complete_triple_system(detail::parse_param(name.substr(10), name));
    throw Error(ErrorCode::UnknownName, "unknown hypergraph name '" + name + "'");
}

} // namespace turan
