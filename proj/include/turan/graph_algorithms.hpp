#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "turan/graph.hpp"
#include "turan/rng.hpp"

namespace turan {

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<std::size_t> girth(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = kUnseen;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[s] = 0;
        parent[s] = s;
        queue.assign(1, s);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best)
                break;
            for_each_set_bit(g.neighbors(u), [&](std::size_t w) {
                if (dist[w] == kUnseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(static_cast<Vertex>(w));
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            });
        }
    }
    if (best == kUnseen)
        return std::nullopt;
    return best;
}

/// Proper 2-coloring if one exists (color of each vertex, 0 or 1).
inline std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> color(n, 2);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != 2)
            continue;
        color[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            bool ok = true;
            for_each_set_bit(g.neighbors(u), [&](std::size_t w) {
                if (color[w] == 2) {
                    color[w] = static_cast<std::uint8_t>(1 - color[u]);
                    queue.push_back(static_cast<Vertex>(w));
                } else if (color[w] == color[u]) {
                    ok = false;
                }
            });
            if (!ok)
                return std::nullopt;
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// Series-parallel reduction: repeatedly delete vertices of degree <= 1 and
/// suppress vertices of degree 2 (joining their neighbors, dropping the
/// duplicate if they are already adjacent). The graph has treewidth at most
/// two iff this empties it.
inline bool treewidth_le_two(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::set<Vertex>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<bool> alive(n, true);
    std::size_t remaining = n;
    std::deque<Vertex> work;
    for (Vertex v = 0; v < n; ++v)
        work.push_back(v);
    while (!work.empty()) {
        const Vertex v = work.front();
        work.pop_front();
        if (!alive[v] || adj[v].size() > 2)
            continue;
        const std::vector<Vertex> nbrs(adj[v].begin(), adj[v].end());
        for (auto w : nbrs) {
            adj[w].erase(v);
            work.push_back(w);
        }
        adj[v].clear();
        alive[v] = false;
        --remaining;
        if (nbrs.size() == 2) {
            adj[nbrs[0]].insert(nbrs[1]);
            adj[nbrs[1]].insert(nbrs[0]);
        }
    }
    return remaining == 0;
}

namespace detail {

/// True iff v is within `limit` steps of u.
inline bool within_distance(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v, std::size_t limit,
                            std::vector<std::size_t>& dist)
{
    constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::deque<Vertex> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        if (x == v)
            return true;
        if (dist[x] == limit)
            continue;
        for (auto y : adj[x]) {
            if (dist[y] == kUnseen) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return false;
}

} // namespace detail

/// Bipartite graph with girth > k on parts {0..floor(n/2)-1} and the rest.
/// Every cross pair is offered once in a seeded random order and accepted
/// unless it would close a cycle of length <= k.
inline Graph high_girth_bipartite(std::size_t n, std::size_t k, std::uint64_t seed)
{
    if (n < 4)
        throw Error(ErrorCode::BadParameter, "high_girth_bipartite needs n >= 4");
    if (k < 3)
        throw Error(ErrorCode::BadParameter, "high_girth_bipartite needs k >= 3");
    const std::size_t left = n / 2;
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < left; ++u)
        for (Vertex v = static_cast<Vertex>(left); v < n; ++v)
            candidates.push_back({u, v});
    Rng rng(seed);
    rng.shuffle(std::span<Edge>(candidates));

    std::vector<std::vector<Vertex>> adj(n);
    std::vector<std::size_t> dist(n);
    std::vector<Edge> accepted;
    for (const auto& e : candidates) {
        if (detail::within_distance(adj, e.u, e.v, k - 1, dist))
            continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
        accepted.push_back(e);
    }
    return Graph(n, std::move(accepted));
}

} // namespace turan
