#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "turan/bitrow.hpp"
#include "turan/error.hpp"

namespace turan {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on {0, ..., n-1}. Immutable once built; edges are
/// kept normalized (u < v) and sorted, adjacency as per-vertex bit rows.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(n), adj_(n, BitRow(n)) {}

    /// Duplicate edges collapse; loops and out-of-range endpoints throw.
    Graph(std::size_t n, std::vector<Edge> edges) : Graph(n)
    {
        for (auto& e : edges) {
            if (e.u >= n || e.v >= n)
                throw Error(ErrorCode::BadParameter, "edge endpoint out of range");
            if (e.u == e.v)
                throw Error(ErrorCode::BadParameter, "loops are not allowed");
            if (e.u > e.v)
                std::swap(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (const auto& e : edges) {
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
        }
        edges_ = std::move(edges);
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const BitRow& neighbors(Vertex v) const noexcept { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }
    std::size_t degree(Vertex v) const noexcept { return adj_[v].count(); }

    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> out(n_);
        for (Vertex v = 0; v < n_; ++v)
            out[v] = degree(v);
        return out;
    }

    /// Subgraph induced by `keep`, relabelled in increasing order.
    Graph induced(const std::vector<Vertex>& keep) const
    {
        std::vector<Vertex> sorted = keep;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Edge> es;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            for (std::size_t j = i + 1; j < sorted.size(); ++j)
                if (adjacent(sorted[i], sorted[j]))
                    es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        return Graph(sorted.size(), std::move(es));
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<BitRow> adj_;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Text format: "g <n> <m>" followed by m sorted lines "<u> <v>".

inline void write_graph(std::ostream& os, const Graph& g)
{
    os << "g " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        os << e.u << ' ' << e.v << '\n';
}

inline std::string to_text(const Graph& g)
{
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

namespace detail {

inline std::uint64_t parse_count(std::istream& is, const char* what)
{
    std::string token;
    if (!(is >> token))
        throw Error(ErrorCode::ParseError, std::string("missing ") + what);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + token + "'");
    if (token.size() > 9)
        throw Error(ErrorCode::ParseError, std::string(what) + " too large");
    return std::stoull(token);
}

} // namespace detail

/// Parses the text format. Edges must be normalized, sorted and distinct so
/// that reading then writing reproduces the input exactly.
inline Graph read_graph(std::istream& is)
{
    std::string tag;
    if (!(is >> tag) || tag != "g")
        throw Error(ErrorCode::ParseError, "graph file must start with 'g'");
    const auto n = detail::parse_count(is, "vertex count");
    const auto m = detail::parse_count(is, "edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        const auto u = detail::parse_count(is, "endpoint");
        const auto v = detail::parse_count(is, "endpoint");
        if (u >= n || v >= n)
            throw Error(ErrorCode::ParseError, "endpoint out of range");
        if (u >= v)
            throw Error(ErrorCode::ParseError, "edge endpoints must satisfy u < v");
        Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (!edges.empty() && !(edges.back() < e))
            throw Error(ErrorCode::ParseError, "edges must be sorted and distinct");
        edges.push_back(e);
    }
    std::string extra;
    if (is >> extra)
        throw Error(ErrorCode::ParseError, "trailing data after edge list");
    return Graph(n, std::move(edges));
}

inline Graph graph_from_text(const std::string& text)
{
    std::istringstream is(text);
    return read_graph(is);
}

// ---------------------------------------------------------------------------
// Named graphs. Labelling conventions:
//   complete_bipartite(s,t): part A = 0..s-1, part B = s..s+t-1
//   cycle(k):               i ~ i+1 (mod k)
//   path(k):                k edges on 0..k, i ~ i+1
//   octahedron:             K_{2,2,2}; i and i+3 are the non-adjacent pairs
//   cube:                   vertices 0..7, adjacent iff labels differ in one bit
//   wheel(k):               rim cycle(k) on 0..k-1, hub k
//   clique(k):              all pairs of 0..k-1

inline Graph clique(std::size_t k)
{
    if (k < 1)
        throw Error(ErrorCode::BadParameter, "clique size must be positive");
    std::vector<Edge> es;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j)
            es.push_back({i, j});
    return Graph(k, std::move(es));
}

inline Graph complete_bipartite(std::size_t s, std::size_t t)
{
    if (s < 1 || t < 1)
        throw Error(ErrorCode::BadParameter, "part sizes must be positive");
    std::vector<Edge> es;
    for (Vertex i = 0; i < s; ++i)
        for (Vertex j = 0; j < t; ++j)
            es.push_back({i, static_cast<Vertex>(s + j)});
    return Graph(s + t, std::move(es));
}

inline Graph cycle(std::size_t k)
{
    if (k < 3)
        throw Error(ErrorCode::BadParameter, "cycle length must be at least 3");
    std::vector<Edge> es;
    for (Vertex i = 0; i < k; ++i)
        es.push_back({i, static_cast<Vertex>((i + 1) % k)});
    return Graph(k, std::move(es));
}

inline Graph path(std::size_t edges)
{
    if (edges < 1)
        throw Error(ErrorCode::BadParameter, "path needs at least one edge");
    std::vector<Edge> es;
    for (Vertex i = 0; i < edges; ++i)
        es.push_back({i, i + 1});
    return Graph(edges + 1, std::move(es));
}

inline Graph octahedron()
{
    std::vector<Edge> es;
    for (Vertex i = 0; i < 6; ++i)
        for (Vertex j = i + 1; j < 6; ++j)
            if (j != i + 3)
                es.push_back({i, j});
    return Graph(6, std::move(es));
}

inline Graph cube()
{
    std::vector<Edge> es;
    for (Vertex i = 0; i < 8; ++i)
        for (Vertex b = 1; b < 8; b <<= 1)
            if ((i & b) == 0)
                es.push_back({i, i | b});
    return Graph(8, std::move(es));
}

inline Graph wheel(std::size_t k)
{
    if (k < 3)
        throw Error(ErrorCode::BadParameter, "wheel rim must have at least 3 vertices");
    auto es = cycle(k).edges();
    for (Vertex i = 0; i < k; ++i)
        es.push_back({i, static_cast<Vertex>(k)});
    return Graph(k + 1, std::move(es));
}

namespace detail {

inline bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

inline std::size_t parse_param(const std::string& s, const std::string& name)
{
    if (!all_digits(s) || s.size() > 6)
        throw Error(ErrorCode::BadParameter, "bad parameter in '" + name + "'");
    return std::stoul(s);
}

inline bool starts_with(const std::string& s, const std::string& prefix)
{
    return s.size() > prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

} // namespace detail

/// Resolves a pattern name: octahedron, cube, K<k> (clique), K<s><t> or
/// K<s>,<t> (complete bipartite), C<k>, P<k> (k edges), W<k> / wheel<k>,
/// clique<k>, cycle<k>, path<k>.
inline Graph named_graph(const std::string& name)
{
    using detail::parse_param;
    using detail::starts_with;
    if (name == "octahedron" || name == "O")
        return octahedron();
    if (name == "cube" || name == "Q")
        return cube();
    if (starts_with(name, "clique"))
        return clique(parse_param(name.substr(6), name));
    if (starts_with(name, "cycle"))
        return cycle(parse_param(name.substr(5), name));
    if (starts_with(name, "path"))
        return path(parse_param(name.substr(4), name));
    if (starts_with(name, "wheel"))
        return wheel(parse_param(name.substr(5), name));
    if (starts_with(name, "K")) {
        const auto rest = name.substr(1);
        const auto comma = rest.find(',');
        if (comma != std::string::npos)
            return complete_bipartite(parse_param(rest.substr(0, comma), name), parse_param(rest.substr(comma + 1), name));
        if (rest.size() == 2 && detail::all_digits(rest))
            return complete_bipartite(static_cast<std::size_t>(rest[0] - '0'), static_cast<std::size_t>(rest[1] - '0'));
        return clique(parse_param(rest, name));
    }
    if (starts_with(name, "C"))
        return cycle(parse_param(name.substr(1), name));
    if (starts_with(name, "P"))
        return path(parse_param(name.substr(1), name));
    if (starts_with(name, "W"))
        return wheel(parse_param(name.substr(1), name));
    throw Error(ErrorCode::UnknownName, "unknown graph name '" + name + "'");
}

} // namespace turan
