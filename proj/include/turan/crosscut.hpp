#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "turan/triple_system.hpp"

namespace turan {

struct CrosscutResult {
    bool exists = false;
    std::size_t size = 0;
    std::vector<Vertex> witness;
    /// Set when no crosscut of size <= cap exists but a larger one does.
    bool cap_exceeded = false;
};

inline constexpr std::size_t kDefaultCrosscutCap = 6;
inline constexpr std::size_t kMaxCrosscutCap = 8;

namespace detail {

/// Exact-transversal search: vertices are decided in increasing order,
/// "in" before "out", with unit propagation on the exactly-one constraint
/// of every triple. The first solution found is therefore the
/// lexicographically smallest one within the size limit.
class ExactTransversalSearch {
public:
    explicit ExactTransversalSearch(const TripleSystem& h)
        : h_(h), incident_(h.vertex_count()), state_(h.vertex_count(), kUnknown), in_(h.size(), 0), out_(h.size(), 0)
    {
        for (std::size_t i = 0; i < h.size(); ++i)
            for (auto x : h.triples()[i].v)
                incident_[x].push_back(i);
    }

    std::optional<std::vector<Vertex>> find(std::size_t limit)
    {
        limit_ = limit;
        std::fill(state_.begin(), state_.end(), kUnknown);
        std::fill(in_.begin(), in_.end(), 0);
        std::fill(out_.begin(), out_.end(), 0);
        trail_.clear();
        chosen_ = 0;
        for (Vertex v = 0; v < h_.vertex_count(); ++v)
            if (incident_[v].empty())
                state_[v] = kOut;
        if (!dfs(0))
            return std::nullopt;
        std::vector<Vertex> out;
        for (Vertex v = 0; v < h_.vertex_count(); ++v)
            if (state_[v] == kIn)
                out.push_back(v);
        return out;
    }

    /// Pairwise-disjoint triples with nothing chosen yet; each needs its own
    /// chosen vertex.
    std::size_t packing_lower_bound() const
    {
        std::vector<bool> used(h_.vertex_count(), false);
        std::size_t count = 0;
        for (std::size_t i = 0; i < h_.size(); ++i) {
            if (in_[i] != 0)
                continue;
            const auto& t = h_.triples()[i].v;
            if (used[t[0]] || used[t[1]] || used[t[2]])
                continue;
            used[t[0]] = used[t[1]] = used[t[2]] = true;
            ++count;
        }
        return count;
    }

private:
    static constexpr std::uint8_t kUnknown = 0, kIn = 1, kOut = 2;

    bool dfs(Vertex from)
    {
        Vertex v = from;
        while (v < h_.vertex_count() && state_[v] != kUnknown)
            ++v;
        if (v == h_.vertex_count())
            return true;
        if (chosen_ + packing_lower_bound() > limit_)
            return false;
        for (auto choice : {kIn, kOut}) {
            const auto mark = trail_.size();
            const auto chosen_mark = chosen_;
            if (assign(v, choice) && dfs(v + 1))
                return true;
            undo(mark);
            chosen_ = chosen_mark;
        }
        return false;
    }

    bool assign(Vertex start, std::uint8_t value)
    {
        std::vector<std::pair<Vertex, std::uint8_t>> queue{{start, value}};
        while (!queue.empty()) {
            const auto [v, val] = queue.back();
            queue.pop_back();
            if (state_[v] == val)
                continue;
            if (state_[v] != kUnknown)
                return false;
            state_[v] = val;
            trail_.push_back(v);
            // Counters are bumped for every incident triple before any check so
            // that undo() can reverse them uniformly.
            for (auto i : incident_[v])
                ++(val == kIn ? in_[i] : out_[i]);
            if (val == kIn && ++chosen_ > limit_)
                return false;
            for (auto i : incident_[v]) {
                const auto& t = h_.triples()[i].v;
                if (val == kIn) {
                    if (in_[i] > 1)
                        return false;
                    for (auto u : t)
                        if (u != v && state_[u] != kOut)
                            queue.push_back({u, kOut});
                } else {
                    if (out_[i] == 3)
                        return false;
                    if (out_[i] == 2 && in_[i] == 0)
                        for (auto u : t)
                            if (state_[u] == kUnknown)
                                queue.push_back({u, kIn});
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            const Vertex v = trail_.back();
            trail_.pop_back();
            for (auto i : incident_[v]) {
                if (state_[v] == kIn)
                    --in_[i];
                else
                    --out_[i];
            }
            state_[v] = kUnknown;
        }
    }

    const TripleSystem& h_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<std::uint8_t> state_;
    std::vector<std::uint8_t> in_, out_;
    std::vector<Vertex> trail_;
    std::size_t chosen_ = 0;
    std::size_t limit_ = 0;
};

/// Greedy exact transversal: repeatedly pick the unsatisfied triple's
/// highest-degree vertex that is still allowed. May fail.
inline std::optional<std::size_t> greedy_crosscut_size(const TripleSystem& h)
{
    const auto deg = h.degrees();
    std::vector<std::uint8_t> state(h.vertex_count(), 0); // 0 free, 1 in, 2 out
    std::size_t size = 0;
    for (const auto& t : h.triples()) {
        int in = 0;
        for (auto x : t.v)
            in += state[x] == 1;
        if (in == 1)
            continue;
        if (in > 1)
            return std::nullopt;
        std::optional<Vertex> pick;
        for (auto x : t.v)
            if (state[x] == 0 && (!pick || deg[x] > deg[*pick]))
                pick = x;
        if (!pick)
            return std::nullopt;
        state[*pick] = 1;
        ++size;
        for (const auto& u : h.triples())
            if (u.contains(*pick))
                for (auto y : u.v)
                    if (y != *pick) {
                        if (state[y] == 1)
                            return std::nullopt;
                        state[y] = 2;
                    }
    }
    for (const auto& t : h.triples()) {
        int in = 0;
        for (auto x : t.v)
            in += state[x] == 1;
        if (in != 1)
            return std::nullopt;
    }
    return size;
}

} // namespace detail

/// Minimum-size vertex set meeting every triple in exactly one vertex,
/// searched up to `cap`. Among minimum sets the lexicographically smallest is
/// returned.
inline CrosscutResult crosscut(const TripleSystem& h, std::size_t cap = kDefaultCrosscutCap)
{
    if (cap > kMaxCrosscutCap)
        throw Error(ErrorCode::TooLarge, "crosscut cap is limited to 8");
    CrosscutResult result;
    if (h.empty()) {
        result.exists = true;
        return result;
    }
    detail::ExactTransversalSearch search(h);
    const std::size_t lower = std::max<std::size_t>(1, search.packing_lower_bound());
    std::size_t upper = cap;
    if (auto greedy = detail::greedy_crosscut_size(h))
        upper = std::min(upper, *greedy);
    for (std::size_t k = lower; k <= upper; ++k) {
        if (auto w = search.find(k)) {
            result.exists = true;
            result.size = w->size();
            result.witness = std::move(*w);
            return result;
        }
    }
    result.cap_exceeded = search.find(std::numeric_limits<std::size_t>::max()).has_value();
    return result;
}

/// Direct check of the exactly-one condition.
inline bool is_crosscut(const TripleSystem& h, const std::vector<Vertex>& x)
{
    std::vector<bool> member(h.vertex_count(), false);
    for (auto v : x) {
        if (v >= h.vertex_count())
            return false;
        member[v] = true;
    }
    for (const auto& t : h.triples())
        if (member[t.v[0]] + member[t.v[1]] + member[t.v[2]] != 1)
            return false;
    return true;
}

} // namespace turan
