#include <gtest/gtest.h>

#include <map>

#include "oracles/random_objects.hpp"
#include "turan/full_subgraph.hpp"

namespace turan {
namespace {

/// Reference procedure: rescan shadow pairs in lexicographic order from the
/// start after every deletion batch.
std::pair<TripleSystem, std::vector<Edge>> restart_scan(const TripleSystem& h, std::size_t d)
{
    std::vector<Triple> live = h.triples();
    std::vector<Edge> sequence;
    for (;;) {
        std::map<std::pair<Vertex, Vertex>, std::size_t> count;
        for (const auto& t : live) {
            ++count[{t.v[0], t.v[1]}];
            ++count[{t.v[0], t.v[2]}];
            ++count[{t.v[1], t.v[2]}];
        }
        bool changed = false;
        for (const auto& [pair, c] : count) {
            if (c > d)
                continue;
            sequence.push_back({pair.first, pair.second});
            std::erase_if(live, [&](const Triple& t) { return t.contains(pair.first, pair.second); });
            changed = true;
            break;
        }
        if (!changed)
            return {TripleSystem(h.vertex_count(), live), sequence};
    }
}

TEST(FullSubgraph, Examples)
{
    const TripleSystem single(3, {{0, 1, 2}});
    EXPECT_TRUE(full_subgraph(single, 1).full.empty());
    const auto k5 = complete_triple_system(5);
    EXPECT_EQ(full_subgraph(k5, 2).full, k5);
    EXPECT_TRUE(full_subgraph(expand(clique(3)), 1).full.empty());
    EXPECT_THROW(full_subgraph(k5, 0), Error);
}

TEST(FullSubgraph, RandomSystemsSatisfyLemmaBound)
{
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const auto n = 3 + rng.below(12);
        const auto d = 1 + rng.below(3);
        const auto h = oracle::random_triple_system(n, 0.1 + 0.1 * static_cast<double>(rng.below(5)), rng);
        const auto r = full_subgraph(h, d);
        EXPECT_TRUE(is_full(r.full, d + 1));
        const auto lhs = static_cast<long long>(r.full.size());
        const auto rhs = static_cast<long long>(h.size()) -
                         static_cast<long long>(d) * static_cast<long long>(shadow(h).edge_count());
        EXPECT_GE(lhs, rhs);
        EXPECT_EQ(r.deleted + r.full.size(), h.size());
        for (const auto& t : r.full.triples())
            EXPECT_TRUE(h.contains(t));
    }
}

TEST(FullSubgraph, MatchesRestartScan)
{
    Rng rng(103);
    for (int i = 0; i < 100; ++i) {
        const auto d = 1 + rng.below(3);
        const auto h = oracle::random_triple_system(4 + rng.below(9), 0.35, rng);
        const auto fast = full_subgraph(h, d);
        const auto [full, sequence] = restart_scan(h, d);
        EXPECT_EQ(fast.full, full);
        EXPECT_EQ(fast.sparse_sequence.size(), sequence.size());
    }
}

TEST(FullSubgraph, DeletionNeverRaisesCodegree)
{
    Rng rng(107);
    for (int i = 0; i < 30; ++i) {
        const auto h = oracle::random_triple_system(8, 0.3, rng);
        if (h.empty())
            continue;
        const auto e = h.triples()[rng.below(h.size())];
        std::vector<Triple> rest;
        for (const auto& t : h.triples())
            if (!t.contains(e.v[0], e.v[1]))
                rest.push_back(t);
        const TripleSystem after(h.vertex_count(), rest);
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex v = u + 1; v < 8; ++v)
                EXPECT_LE(codegree(after, u, v), codegree(h, u, v));
    }
}

} // namespace
} // namespace turan
