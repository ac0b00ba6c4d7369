#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "turan/embedding.hpp"
#include "turan/error.hpp"
#include "turan/graph.hpp"
#include "turan/triple_system.hpp"

namespace turan {

struct ExtremalResult {
    std::size_t n = 0;
    unsigned r = 2;
    std::string pattern;
    std::size_t value = 0;
    /// Edges or triples of the witness, each sorted, in lexicographic order.
    std::vector<std::vector<Vertex>> witness;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0;
    bool pruning = true;
    /// Embedding search returned an exhaustive None on the witness.
    bool witness_verified = false;

    Graph witness_graph() const
    {
        std::vector<Edge> es;
        for (const auto& e : witness)
            es.push_back({e[0], e[1]});
        return Graph(n, es);
    }

    TripleSystem witness_system() const
    {
        std::vector<Triple> ts;
        for (const auto& t : witness)
            ts.emplace_back(t[0], t[1], t[2]);
        return TripleSystem(n, ts);
    }
};

inline constexpr std::size_t kMaxEx2Vertices = 8;
inline constexpr std::size_t kMaxEx3Vertices = 7;

namespace detail {

/// Maximum pattern-free family of r-subsets of {0, ..., n-1}. With pruning,
/// only families whose sorted element list is the lexicographic minimum of
/// their isomorphism class are expanded (removing the largest element keeps
/// such a family minimal, so every class is reached exactly once), and a
/// branch stops when even adding every compatible element cannot beat the
/// best value. Children only add elements beyond the current maximum.
class OrderlySearch {
public:
    OrderlySearch(std::size_t n, unsigned r, std::size_t pattern_n, const std::vector<std::vector<Vertex>>& pattern,
                  bool pruning)
        : n_(n), pruning_(pruning)
    {
        std::vector<Vertex> current;
        build_elements(r, 0, current);
        if (elements_.size() > 64)
            throw Error(ErrorCode::TooLarge, "oracle universe exceeds 64 elements");
        std::vector<std::size_t> index_of(std::size_t{1} << n, 0);
        for (std::size_t i = 0; i < elements_.size(); ++i)
            index_of[mask_of(elements_[i])] = i;

        copies_by_element_.resize(elements_.size());
        if (pattern_n <= n) {
            std::vector<std::uint64_t> copies;
            std::vector<Vertex> map(pattern_n);
            std::vector<bool> used(n, false);
            collect_copies(pattern, index_of, 0, map, used, copies);
            std::sort(copies.begin(), copies.end());
            copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
            for (auto c : copies)
                for (auto rest = c; rest != 0; rest &= rest - 1)
                    copies_by_element_[static_cast<std::size_t>(std::countr_zero(rest))].push_back(c);
        }

        if (pruning_) {
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            while (std::next_permutation(perm.begin(), perm.end())) {
                std::vector<std::uint8_t> image(elements_.size());
                for (std::size_t i = 0; i < elements_.size(); ++i) {
                    std::size_t m = 0;
                    for (auto x : elements_[i])
                        m |= std::size_t{1} << perm[x];
                    image[i] = static_cast<std::uint8_t>(index_of[m]);
                }
                images_.push_back(std::move(image));
            }
        }
    }

    void run()
    {
        std::vector<std::size_t> all;
        for (std::size_t e = 0; e < elements_.size(); ++e)
            if (is_free(0, e))
                all.push_back(e);
        best_ = 0;
        best_mask_ = 0;
        dfs(0, 0, all);
    }

    std::size_t best() const noexcept { return best_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

    std::vector<std::vector<Vertex>> witness() const
    {
        std::vector<std::vector<Vertex>> out;
        for (std::size_t e = 0; e < elements_.size(); ++e)
            if ((best_mask_ >> e) & 1U)
                out.push_back(elements_[e]);
        return out;
    }

private:
    void build_elements(unsigned r, Vertex from, std::vector<Vertex>& current)
    {
        if (current.size() == r) {
            elements_.push_back(current);
            return;
        }
        for (Vertex v = from; v < n_; ++v) {
            current.push_back(v);
            build_elements(r, v + 1, current);
            current.pop_back();
        }
    }

    static std::size_t mask_of(const std::vector<Vertex>& e)
    {
        std::size_t m = 0;
        for (auto x : e)
            m |= std::size_t{1} << x;
        return m;
    }

    void collect_copies(const std::vector<std::vector<Vertex>>& pattern, const std::vector<std::size_t>& index_of,
                        std::size_t depth, std::vector<Vertex>& map, std::vector<bool>& used,
                        std::vector<std::uint64_t>& out) const
    {
        if (depth == map.size()) {
            std::uint64_t c = 0;
            for (const auto& e : pattern) {
                std::size_t m = 0;
                for (auto x : e)
                    m |= std::size_t{1} << map[x];
                c |= std::uint64_t{1} << index_of[m];
            }
            out.push_back(c);
            return;
        }
        for (Vertex x = 0; x < n_; ++x) {
            if (used[x])
                continue;
            used[x] = true;
            map[depth] = x;
            collect_copies(pattern, index_of, depth + 1, map, used, out);
            used[x] = false;
        }
    }

    /// S is pattern-free; does S + e stay free?
    bool is_free(std::uint64_t s, std::size_t e) const
    {
        const std::uint64_t t = s | (std::uint64_t{1} << e);
        for (auto c : copies_by_element_[e])
            if ((c & ~t) == 0)
                return false;
        return true;
    }

    /// No relabelling gives a family whose sorted element list is smaller.
    bool is_canonical(std::uint64_t s) const
    {
        for (const auto& image : images_) {
            std::uint64_t t = 0;
            for (auto rest = s; rest != 0; rest &= rest - 1)
                t |= std::uint64_t{1} << image[static_cast<std::size_t>(std::countr_zero(rest))];
            const auto diff = t ^ s;
            if (diff != 0 && (t & diff & (~diff + 1)) != 0)
                return false;
        }
        return true;
    }

    void dfs(std::uint64_t s, std::size_t size, const std::vector<std::size_t>& candidates)
    {
        ++nodes_;
        if (size > best_) {
            best_ = size;
            best_mask_ = s;
        }
        if (pruning_ && size + candidates.size() <= best_)
            return;
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (pruning_ && size + (candidates.size() - i) <= best_)
                return;
            const auto e = candidates[i];
            const std::uint64_t t = s | (std::uint64_t{1} << e);
            if (pruning_ && !is_canonical(t))
                continue;
            next.clear();
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (is_free(t, candidates[j]))
                    next.push_back(candidates[j]);
            dfs(t, size + 1, next);
        }
    }

    std::size_t n_;
    bool pruning_;
    std::vector<std::vector<Vertex>> elements_;
    std::vector<std::vector<std::uint64_t>> copies_by_element_;
    std::vector<std::vector<std::uint8_t>> images_;
    std::size_t best_ = 0;
    std::uint64_t best_mask_ = 0;
    std::uint64_t nodes_ = 0;
};

template <class Verify>
ExtremalResult run_oracle(std::size_t n, unsigned r, const std::string& name, std::size_t pattern_n,
                          const std::vector<std::vector<Vertex>>& pattern, bool pruning, Verify verify)
{
    if (pattern.empty())
        throw Error(ErrorCode::BadParameter, "pattern needs at least one edge");
    const auto start = std::chrono::steady_clock::now();
    OrderlySearch search(n, r, pattern_n, pattern, pruning);
    search.run();
    ExtremalResult out;
    out.n = n;
    out.r = r;
    out.pattern = name;
    out.value = search.best();
    out.witness = search.witness();
    out.nodes = search.nodes();
    out.pruning = pruning;
    out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.witness_verified = verify(out);
    return out;
}

} // namespace detail

/// ex_2(n, pattern): most edges in an n-vertex graph without a copy of the
/// pattern. n <= 8 with pruning, n <= 7 without.
inline ExtremalResult ex2_bruteforce(std::size_t n, const Graph& pattern, bool pruning = true,
                                     const std::string& name = "")
{
    if (n > kMaxEx2Vertices || (!pruning && n > kMaxEx2Vertices - 1))
        throw Error(ErrorCode::TooLarge, "ex2 oracle is limited to n <= 8 (n <= 7 without pruning)");
    std::vector<std::vector<Vertex>> elems;
    for (const auto& e : pattern.edges())
        elems.push_back({e.u, e.v});
    return detail::run_oracle(n, 2, name, pattern.vertex_count(), elems, pruning, [&](const ExtremalResult& r) {
        return graph_embed(pattern, r.witness_graph()).verdict == Verdict::None;
    });
}

/// ex_3(n, pattern): most triples in an n-vertex triple system without a copy
/// of the pattern. n <= 6, or n = 7 with pruning.
inline ExtremalResult ex3_bruteforce(std::size_t n, const TripleSystem& pattern, bool pruning = true,
                                     const std::string& name = "")
{
    if (n > kMaxEx3Vertices || (!pruning && n > kMaxEx3Vertices - 1))
        throw Error(ErrorCode::TooLarge, "ex3 oracle is limited to n <= 6 (n = 7 needs pruning)");
    std::vector<std::vector<Vertex>> elems;
    for (const auto& t : pattern.triples())
        elems.push_back({t.v[0], t.v[1], t.v[2]});
    return detail::run_oracle(n, 3, name, pattern.vertex_count(), elems, pruning, [&](const ExtremalResult& r) {
        return triple_embed(pattern, r.witness_system()).verdict == Verdict::None;
    });
}

} // namespace turan
