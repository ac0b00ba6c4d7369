#pragma once

#include <vector>

#include "turan/graph.hpp"
#include "turan/rng.hpp"
#include "turan/triple_system.hpp"

namespace turan::oracle {

inline Graph random_graph(std::size_t n, double p, Rng& rng)
{
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                es.push_back({u, v});
    return Graph(n, std::move(es));
}

inline TripleSystem random_triple_system(std::size_t n, double p, Rng& rng)
{
    std::vector<Triple> ts;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (rng.unit() < p)
                    ts.emplace_back(a, b, c);
    return TripleSystem(n, std::move(ts));
}

} // namespace turan::oracle
