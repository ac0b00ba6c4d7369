#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "turan/triple_system.hpp"

namespace turan {

struct FullSubgraphResult {
    /// Every pair with positive codegree in `full` has codegree >= d + 1.
    TripleSystem full;
    /// Shadow pairs in the order they were used to delete triples.
    std::vector<Edge> sparse_sequence;
    std::size_t deleted = 0;
};

/// Peels h down to a (d+1)-full subsystem. At each step the
/// lexicographically smallest shadow pair with 1..d surviving triples is
/// appended to the sparse sequence and those triples are deleted; this
/// matches a full lexicographic rescan after every deletion batch. At most
/// d triples go per pair, so |full| >= |h| - d |shadow(h)|.
inline FullSubgraphResult full_subgraph(const TripleSystem& h, std::size_t d)
{
    if (d < 1)
        throw Error(ErrorCode::BadParameter, "full_subgraph needs d >= 1");
    const auto& triples = h.triples();
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> through;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto [a, b, c] = triples[i].v;
        through[pair_key(a, b)].push_back(i);
        through[pair_key(a, c)].push_back(i);
        through[pair_key(b, c)].push_back(i);
    }
    std::unordered_map<std::uint64_t, std::size_t> live;
    std::set<std::uint64_t> low;
    for (const auto& [key, list] : through) {
        live[key] = list.size();
        if (list.size() <= d)
            low.insert(key);
    }

    std::vector<bool> alive(triples.size(), true);
    FullSubgraphResult out;
    while (!low.empty()) {
        const auto key = *low.begin();
        low.erase(low.begin());
        out.sparse_sequence.push_back(pair_from_key(key));
        for (auto i : through[key]) {
            if (!alive[i])
                continue;
            alive[i] = false;
            ++out.deleted;
            const auto [a, b, c] = triples[i].v;
            for (auto k : {pair_key(a, b), pair_key(a, c), pair_key(b, c)}) {
                auto& count = live[k];
                --count;
                if (count == 0)
                    low.erase(k);
                else if (count <= d && k != key)
                    low.insert(k);
            }
        }
    }

    std::vector<Triple> kept;
    kept.reserve(triples.size() - out.deleted);
    for (std::size_t i = 0; i < triples.size(); ++i)
        if (alive[i])
            kept.push_back(triples[i]);
    out.full = TripleSystem(h.vertex_count(), std::move(kept));
    return out;
}

/// True iff every pair with positive codegree has codegree >= d.
inline bool is_full(const TripleSystem& h, std::size_t d)
{
    for (const auto& [key, list] : co_neighborhoods(h))
        if (list.size() < d)
            return false;
    return true;
}

} // namespace turan
