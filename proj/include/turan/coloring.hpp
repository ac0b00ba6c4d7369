#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "turan/graph.hpp"
#include "turan/graph_algorithms.hpp"

namespace turan {

/// Color array over {0,1,2}; properness is checked, never assumed.
struct Coloring {
    std::vector<std::uint8_t> colors;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

inline bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.colors.size() != g.vertex_count())
        return false;
    for (auto col : c.colors)
        if (col > 2)
            return false;
    for (const auto& e : g.edges())
        if (c.colors[e.u] == c.colors[e.v])
            return false;
    return true;
}

inline constexpr std::size_t kMaxColoringVertices = 24;

/// Calls `visit` on every proper 3-coloring in lexicographic order of the
/// color array; stops early when `visit` returns false. With
/// `up_to_symmetry`, vertex 0 is pinned to color 0.
inline void for_each_proper_3_coloring(const Graph& g, const std::function<bool(const Coloring&)>& visit,
                                       bool up_to_symmetry = false)
{
    const std::size_t n = g.vertex_count();
    if (n > kMaxColoringVertices)
        throw Error(ErrorCode::TooLarge, "3-coloring enumeration is capped at 24 vertices");
    Coloring c{std::vector<std::uint8_t>(n, 0)};
    if (n == 0) {
        visit(c);
        return;
    }
    bool stop = false;
    std::function<void(Vertex)> extend = [&](Vertex v) {
        if (v == n) {
            stop = !visit(c);
            return;
        }
        const std::uint8_t top = (up_to_symmetry && v == 0) ? 1 : 3;
        for (std::uint8_t col = 0; col < top && !stop; ++col) {
            bool clash = false;
            for (Vertex u = 0; u < v; ++u) {
                if (g.adjacent(u, v) && c.colors[u] == col) {
                    clash = true;
                    break;
                }
            }
            if (clash)
                continue;
            c.colors[v] = col;
            extend(v + 1);
        }
    };
    extend(0);
}

inline std::vector<Coloring> proper_3_colorings(const Graph& g, bool up_to_symmetry = false)
{
    std::vector<Coloring> out;
    for_each_proper_3_coloring(
        g,
        [&](const Coloring& c) {
            out.push_back(c);
            return true;
        },
        up_to_symmetry);
    return out;
}

/// Class pairs in the fixed order (0,1), (0,2), (1,2).
inline constexpr std::array<std::array<std::uint8_t, 2>, 3> kColorPairs{{{0, 1}, {0, 2}, {1, 2}}};

/// Girth of the subgraph induced by each pair of color classes (nullopt when
/// that subgraph is a forest).
inline std::array<std::optional<std::size_t>, 3> bichromatic_cycle_profile(const Graph& g, const Coloring& c)
{
    if (!is_proper(g, c))
        throw Error(ErrorCode::ImproperColoring, "coloring is not proper");
    std::array<std::optional<std::size_t>, 3> out;
    for (std::size_t i = 0; i < kColorPairs.size(); ++i) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (c.colors[v] == kColorPairs[i][0] || c.colors[v] == kColorPairs[i][1])
                keep.push_back(v);
        out[i] = girth(g.induced(keep));
    }
    return out;
}

struct AcyclicColoringResult {
    bool exists = false;
    std::optional<Coloring> witness;
};

/// First proper 3-coloring (lexicographically) whose three bichromatic
/// subgraphs are all forests.
inline AcyclicColoringResult has_acyclic_3_coloring(const Graph& g)
{
    AcyclicColoringResult result;
    for_each_proper_3_coloring(g, [&](const Coloring& c) {
        const auto profile = bichromatic_cycle_profile(g, c);
        for (const auto& p : profile)
            if (p)
                return true;
        result.exists = true;
        result.witness = c;
        return false;
    });
    return result;
}

} // namespace turan
