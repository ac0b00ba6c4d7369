#pragma once

// Test-only reference implementations. Everything here is deliberately
// naive (full enumeration) and shares no search code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "turan/graph.hpp"
#include "turan/triple_system.hpp"

namespace turan::oracle {

/// Calls fn on every injective map {0..k-1} -> {0..n-1}; stops when fn
/// returns true. Returns whether fn ever returned true.
template <typename Fn>
bool for_each_injection(std::size_t k, std::size_t n, Fn&& fn)
{
    if (k > n)
        return false;
    std::vector<Vertex> map(k);
    std::vector<bool> used(n, false);
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (stop)
            return;
        if (i == k) {
            stop = fn(map);
            return;
        }
        for (Vertex x = 0; x < n && !stop; ++x) {
            if (used[x])
                continue;
            used[x] = true;
            map[i] = x;
            self(self, i + 1);
            used[x] = false;
        }
    };
    rec(rec, 0);
    return stop;
}

inline bool brute_graph_contains(const Graph& pattern, const Graph& host)
{
    return for_each_injection(pattern.vertex_count(), host.vertex_count(), [&](const std::vector<Vertex>& m) {
        for (const auto& e : pattern.edges())
            if (!host.adjacent(m[e.u], m[e.v]))
                return false;
        return true;
    });
}

inline bool brute_triple_contains(const TripleSystem& pattern, const TripleSystem& host)
{
    std::vector<std::vector<std::vector<bool>>> present(
        host.vertex_count(),
        std::vector<std::vector<bool>>(host.vertex_count(), std::vector<bool>(host.vertex_count(), false)));
    for (const auto& t : host.triples()) {
        std::array<Vertex, 3> p = t.v;
        do {
            present[p[0]][p[1]][p[2]] = true;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return for_each_injection(pattern.vertex_count(), host.vertex_count(), [&](const std::vector<Vertex>& m) {
        for (const auto& t : pattern.triples())
            if (!present[m[t.v[0]]][m[t.v[1]]][m[t.v[2]]])
                return false;
        return true;
    });
}

/// Minimum exact transversal size by scanning all subsets (n <= 20).
inline std::optional<std::size_t> brute_crosscut(const TripleSystem& h)
{
    const std::size_t n = h.vertex_count();
    std::optional<std::size_t> best;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (best && size >= *best)
            continue;
        bool ok = true;
        for (const auto& t : h.triples()) {
            int hits = 0;
            for (auto x : t.v)
                hits += (mask >> x) & 1U;
            if (hits != 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            best = size;
    }
    return best;
}

/// Triangle count as trace(A^3) / 6 with plain integer matrices.
inline std::uint64_t trace_triangle_count(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::uint64_t> a(n * n, 0), a2(n * n, 0);
    for (const auto& e : g.edges())
        a[e.u * n + e.v] = a[e.v * n + e.u] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    a2[i * n + j] += a[k * n + j];
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            trace += a2[i * n + k] * a[k * n + i];
    return trace / 6;
}

/// All 3^n color arrays, filtered to proper ones (n <= 12).
inline std::vector<std::vector<std::uint8_t>> brute_proper_3_colorings(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= 3;
    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::uint8_t> c(n);
        std::size_t x = code;
        for (std::size_t i = n; i-- > 0;) {
            c[i] = static_cast<std::uint8_t>(x % 3);
            x /= 3;
        }
        bool ok = true;
        for (const auto& e : g.edges())
            ok = ok && c[e.u] != c[e.v];
        if (ok)
            out.push_back(std::move(c));
    }
    return out;
}

/// True iff the graph on vertices `keep` (restricted edges) has a cycle, via
/// the forest edge-count identity on each component.
inline bool brute_has_cycle(const Graph& g, const std::vector<bool>& keep)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) {
        if (!keep[e.u] || !keep[e.v])
            continue;
        const auto a = find(e.u), b = find(e.v);
        if (a == b)
            return true;
        parent[a] = b;
    }
    return false;
}

/// ex_2 over all 2^C(n,2) graphs (n <= 6).
inline std::size_t brute_ex2(std::size_t n, const Graph& pattern)
{
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            all.push_back({u, v});
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best)
            continue;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((mask >> i) & 1U)
                es.push_back(all[i]);
        if (!brute_graph_contains(pattern, Graph(n, es)))
            best = size;
    }
    return best;
}

/// ex_3 over all 2^C(n,3) triple systems (n <= 5).
inline std::size_t brute_ex3(std::size_t n, const TripleSystem& pattern)
{
    std::vector<Triple> all = complete_triple_system(n).triples();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best)
            continue;
        std::vector<Triple> ts;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((mask >> i) & 1U)
                ts.push_back(all[i]);
        if (!brute_triple_contains(pattern, TripleSystem(n, ts)))
            best = size;
    }
    return best;
}

} // namespace turan::oracle
