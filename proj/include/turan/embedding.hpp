#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "turan/bitrow.hpp"
#include "turan/graph.hpp"
#include "turan/triple_system.hpp"

namespace turan {

enum class Verdict { Found, None, BudgetExhausted };

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Found: return "found";
    case Verdict::None: return "none";
    case Verdict::BudgetExhausted: return "budget";
    }
    return "unknown";
}

/// Injective map from pattern vertices to host vertices.
struct Embedding {
    std::vector<Vertex> map;
};

struct SearchOutcome {
    Verdict verdict = Verdict::None;
    std::optional<Embedding> embedding;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;
inline constexpr std::size_t kMaxAutomorphismVertices = 16;
inline constexpr std::size_t kMaxAutomorphisms = 200'000;

// ---------------------------------------------------------------------------
// Validation

inline bool is_injective(const std::vector<Vertex>& map, std::size_t host_n)
{
    std::vector<bool> seen(host_n, false);
    for (auto x : map) {
        if (x >= host_n || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

inline bool is_graph_embedding(const Graph& pattern, const Graph& host, const Embedding& e)
{
    if (e.map.size() != pattern.vertex_count() || !is_injective(e.map, host.vertex_count()))
        return false;
    for (const auto& edge : pattern.edges())
        if (!host.adjacent(e.map[edge.u], e.map[edge.v]))
            return false;
    return true;
}

inline bool is_triple_embedding(const TripleSystem& pattern, const TripleSystem& host, const Embedding& e)
{
    if (e.map.size() != pattern.vertex_count() || !is_injective(e.map, host.vertex_count()))
        return false;
    for (const auto& t : pattern.triples())
        if (!host.contains(Triple(e.map[t.v[0]], e.map[t.v[1]], e.map[t.v[2]])))
            return false;
    return true;
}

namespace detail {

/// Search order: highest degree first, then repeatedly the unplaced vertex
/// with the most placed neighbors (ties: higher degree, then lower label).
inline std::vector<Vertex> connected_degree_order(const std::vector<std::vector<Vertex>>& nbrs)
{
    const std::size_t n = nbrs.size();
    std::vector<Vertex> order;
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> placed_nbrs(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::optional<Vertex> best;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (!best || placed_nbrs[v] > placed_nbrs[*best] ||
                (placed_nbrs[v] == placed_nbrs[*best] && nbrs[v].size() > nbrs[*best].size()))
                best = v;
        }
        placed[*best] = true;
        order.push_back(*best);
        for (auto w : nbrs[*best])
            ++placed_nbrs[w];
    }
    return order;
}

inline std::vector<std::vector<Vertex>> neighbor_lists(const Graph& g)
{
    std::vector<std::vector<Vertex>> out(g.vertex_count());
    for (const auto& e : g.edges()) {
        out[e.u].push_back(e.v);
        out[e.v].push_back(e.u);
    }
    return out;
}

/// All automorphisms of a structure on n vertices, by backtracking over
/// degree-preserving partial maps. `consistent(map, k)` must reject partial
/// maps on 0..k that already break the structure; a total map it accepts must
/// be an automorphism. Returns nullopt when n or the group is too large.
inline std::optional<std::vector<std::vector<Vertex>>> automorphisms(
    std::size_t n, const std::vector<std::size_t>& invariant,
    const std::function<bool(const std::vector<Vertex>&, Vertex)>& consistent)
{
    if (n > kMaxAutomorphismVertices)
        return std::nullopt;
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> map(n, 0);
    std::vector<bool> used(n, false);
    bool overflow = false;
    std::function<void(Vertex)> extend = [&](Vertex k) {
        if (overflow)
            return;
        if (k == n) {
            out.push_back(map);
            if (out.size() > kMaxAutomorphisms)
                overflow = true;
            return;
        }
        for (Vertex img = 0; img < n && !overflow; ++img) {
            if (used[img] || invariant[img] != invariant[k])
                continue;
            map[k] = img;
            if (!consistent(map, k))
                continue;
            used[img] = true;
            extend(k + 1);
            used[img] = false;
        }
    };
    extend(0);
    if (overflow)
        return std::nullopt;
    return out;
}

inline std::optional<std::vector<std::vector<Vertex>>> graph_automorphisms(const Graph& g)
{
    return automorphisms(g.vertex_count(), g.degrees(), [&](const std::vector<Vertex>& map, Vertex k) {
        for (Vertex u = 0; u < k; ++u)
            if (g.adjacent(u, k) != g.adjacent(map[u], map[k]))
                return false;
        return true;
    });
}

inline std::optional<std::vector<std::vector<Vertex>>> triple_automorphisms(const TripleSystem& h)
{
    std::vector<std::vector<Triple>> closing(h.vertex_count());
    for (const auto& t : h.triples())
        closing[t.v[2]].push_back(t);
    const auto sg = shadow(h);
    std::vector<std::size_t> invariant = h.degrees();
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        invariant[v] = invariant[v] * (h.vertex_count() + 1) + sg.degree(v);
    return automorphisms(h.vertex_count(), invariant, [&](const std::vector<Vertex>& map, Vertex k) {
        for (Vertex u = 0; u < k; ++u)
            if (sg.adjacent(u, k) != sg.adjacent(map[u], map[k]))
                return false;
        for (const auto& t : closing[k])
            if (!h.contains(Triple(map[t.v[0]], map[t.v[1]], map[t.v[2]])))
                return false;
        return true;
    });
}

/// Ordering constraints that keep one representative per orbit of the
/// pattern's automorphism group: for every vertex v in search order, v must
/// map below every other member of its orbit under the pointwise stabilizer
/// of the vertices placed before it. Result: for each vertex w, the vertices
/// whose image must be smaller than w's image.
inline std::vector<std::vector<Vertex>> symmetry_constraints(
    const std::optional<std::vector<std::vector<Vertex>>>& autos, const std::vector<Vertex>& order)
{
    std::vector<std::vector<Vertex>> below(order.size());
    if (!autos)
        return below;
    std::vector<const std::vector<Vertex>*> stab;
    for (const auto& a : *autos)
        stab.push_back(&a);
    for (auto v : order) {
        std::vector<bool> in_orbit(order.size(), false);
        for (const auto* a : stab)
            in_orbit[(*a)[v]] = true;
        for (Vertex w = 0; w < order.size(); ++w)
            if (w != v && in_orbit[w])
                below[w].push_back(v);
        std::erase_if(stab, [&](const std::vector<Vertex>* a) { return (*a)[v] != v; });
    }
    return below;
}

/// Backtracking subgraph (non-induced) matcher. `on_complete` receives each
/// complete embedding in search order and returns true to stop.
class GraphMatcher {
public:
    GraphMatcher(const Graph& pattern, const Graph& host, std::uint64_t budget, bool break_symmetry = true)
        : pattern_(pattern), host_(host), budget_(budget)
    {
        const auto nbrs = neighbor_lists(pattern);
        order_ = connected_degree_order(nbrs);
        if (break_symmetry)
            below_ = symmetry_constraints(graph_automorphisms(pattern), order_);
        else
            below_.assign(pattern.vertex_count(), {});
        const auto hdeg = host.degrees();
        for (Vertex u : order_) {
            BitRow allowed(host.vertex_count());
            const auto need = pattern.degree(u);
            for (Vertex x = 0; x < host.vertex_count(); ++x)
                if (hdeg[x] >= need)
                    allowed.set(x);
            allowed_.push_back(std::move(allowed));
            std::vector<Vertex> earlier;
            for (auto w : nbrs[u])
                if (position(w) < position(u))
                    earlier.push_back(w);
            earlier_nbrs_.push_back(std::move(earlier));
        }
        map_.assign(pattern.vertex_count(), 0);
        used_ = BitRow(host.vertex_count());
    }

    Verdict run(const std::function<bool(const std::vector<Vertex>&)>& on_complete)
    {
        if (pattern_.vertex_count() > host_.vertex_count())
            return Verdict::None;
        on_complete_ = &on_complete;
        stopped_ = exhausted_ = false;
        extend(0);
        if (stopped_)
            return Verdict::Found;
        return exhausted_ ? Verdict::BudgetExhausted : Verdict::None;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::size_t position(Vertex v) const
    {
        return static_cast<std::size_t>(std::find(order_.begin(), order_.end(), v) - order_.begin());
    }

    void extend(std::size_t depth)
    {
        if (depth == order_.size()) {
            stopped_ = (*on_complete_)(map_);
            return;
        }
        const Vertex u = order_[depth];
        BitRow cand = allowed_[depth];
        for (auto w : earlier_nbrs_[depth])
            cand &= host_.neighbors(map_[w]);
        cand.subtract(used_);
        for (auto x = cand.find_first(); x != BitRow::npos; x = cand.find_next(x)) {
            bool ok = true;
            for (auto v : below_[u])
                if (map_[v] >= x) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return;
            }
            map_[u] = static_cast<Vertex>(x);
            used_.set(x);
            extend(depth + 1);
            used_.reset(x);
            if (stopped_ || exhausted_)
                return;
        }
    }

    const Graph& pattern_;
    const Graph& host_;
    std::uint64_t budget_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> below_;
    std::vector<BitRow> allowed_;
    std::vector<std::vector<Vertex>> earlier_nbrs_;
    std::vector<Vertex> map_;
    BitRow used_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    bool exhausted_ = false;
    const std::function<bool(const std::vector<Vertex>&)>* on_complete_ = nullptr;
};

/// Host-side lookup for triple searches: co-neighborhood bit rows per pair.
class TripleHostIndex {
public:
    explicit TripleHostIndex(const TripleSystem& host)
        : n_(host.vertex_count()), shadow_(shadow(host)), degrees_(host.degrees()), empty_(host.vertex_count())
    {
        for (const auto& [key, list] : co_neighborhoods(host)) {
            BitRow row(n_);
            for (auto x : list)
                row.set(x);
            co_.emplace(key, std::move(row));
        }
    }

    std::size_t vertex_count() const noexcept { return n_; }
    const Graph& shadow_graph() const noexcept { return shadow_; }
    std::size_t degree(Vertex v) const noexcept { return degrees_[v]; }

    const BitRow& co_neighbors(Vertex a, Vertex b) const
    {
        auto it = co_.find(pair_key(a, b));
        return it == co_.end() ? empty_ : it->second;
    }

private:
    std::size_t n_;
    Graph shadow_;
    std::vector<std::size_t> degrees_;
    std::unordered_map<std::uint64_t, BitRow> co_;
    BitRow empty_;
};

/// Perfect matching of `left` items into host vertices by augmenting paths.
/// Returns the chosen vertex per item, or nullopt.
inline std::optional<std::vector<Vertex>> match_all(const std::vector<std::vector<Vertex>>& options, std::size_t host_n)
{
    std::vector<std::optional<std::size_t>> owner(host_n);
    std::vector<Vertex> chosen(options.size(), 0);
    std::vector<bool> visited(host_n);
    std::function<bool(std::size_t)> augment = [&](std::size_t item) {
        for (auto x : options[item]) {
            if (visited[x])
                continue;
            visited[x] = true;
            if (!owner[x] || augment(*owner[x])) {
                owner[x] = item;
                chosen[item] = x;
                return true;
            }
        }
        return false;
    };
    for (std::size_t item = 0; item < options.size(); ++item) {
        std::fill(visited.begin(), visited.end(), false);
        if (!augment(item))
            return std::nullopt;
    }
    return chosen;
}

/// Backtracking triple-system matcher with co-neighborhood propagation.
class TripleMatcher {
public:
    TripleMatcher(const TripleSystem& pattern, const TripleHostIndex& host, std::uint64_t budget,
                  bool break_symmetry = true)
        : pattern_(pattern), host_(host), budget_(budget)
    {
        const auto psh = shadow(pattern);
        const auto nbrs = neighbor_lists(psh);
        order_ = connected_degree_order(nbrs);
        if (break_symmetry)
            below_ = symmetry_constraints(triple_automorphisms(pattern), order_);
        else
            below_.assign(pattern.vertex_count(), {});
        std::vector<std::size_t> pos(pattern.vertex_count());
        for (std::size_t i = 0; i < order_.size(); ++i)
            pos[order_[i]] = i;
        const auto pdeg = pattern.degrees();
        const auto& hsh = host.shadow_graph();
        for (std::size_t i = 0; i < order_.size(); ++i) {
            const Vertex u = order_[i];
            BitRow allowed(host.vertex_count());
            for (Vertex x = 0; x < host.vertex_count(); ++x)
                if (host.degree(x) >= pdeg[u] && hsh.degree(x) >= psh.degree(u))
                    allowed.set(x);
            allowed_.push_back(std::move(allowed));
            std::vector<Vertex> earlier;
            for (auto w : nbrs[u])
                if (pos[w] < i)
                    earlier.push_back(w);
            earlier_nbrs_.push_back(std::move(earlier));
            std::vector<std::pair<Vertex, Vertex>> closing;
            for (const auto& t : pattern.triples()) {
                if (!t.contains(u))
                    continue;
                std::array<Vertex, 2> others{};
                std::size_t k = 0;
                for (auto x : t.v)
                    if (x != u)
                        others[k++] = x;
                if (pos[others[0]] < i && pos[others[1]] < i)
                    closing.emplace_back(others[0], others[1]);
            }
            closing_.push_back(std::move(closing));
        }
        // Future depths whose candidate sets are fixed once depth d is mapped.
        std::vector<std::size_t> ready(order_.size(), 0);
        for (std::size_t i = 0; i < order_.size(); ++i) {
            for (const auto& [a, b] : closing_[i])
                ready[i] = std::max({ready[i], pos[a], pos[b]});
            for (auto w : earlier_nbrs_[i])
                ready[i] = std::max(ready[i], pos[w]);
        }
        determined_.resize(order_.size());
        for (std::size_t d = 0; d < order_.size(); ++d)
            for (std::size_t i = d + 1; i < order_.size(); ++i)
                if (ready[i] <= d && (!closing_[i].empty() || !earlier_nbrs_[i].empty()))
                    determined_[d].push_back(i);
        map_.assign(pattern.vertex_count(), 0);
        used_ = BitRow(host.vertex_count());
    }

    Verdict run(const std::function<bool(const std::vector<Vertex>&)>& on_complete)
    {
        if (pattern_.vertex_count() > host_.vertex_count())
            return Verdict::None;
        on_complete_ = &on_complete;
        stopped_ = exhausted_ = false;
        extend(0);
        if (stopped_)
            return Verdict::Found;
        return exhausted_ ? Verdict::BudgetExhausted : Verdict::None;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    BitRow candidates(std::size_t depth) const
    {
        BitRow cand = allowed_[depth];
        for (const auto& [a, b] : closing_[depth])
            cand &= host_.co_neighbors(map_[a], map_[b]);
        for (auto w : earlier_nbrs_[depth])
            cand &= host_.shadow_graph().neighbors(map_[w]);
        cand.subtract(used_);
        return cand;
    }

    /// Forward check: the future vertices whose constraints are already
    /// fixed must receive distinct unused host vertices.
    bool forward_ok(std::size_t depth) const
    {
        const auto& future = determined_[depth];
        if (future.empty())
            return true;
        std::vector<std::vector<Vertex>> options(future.size());
        for (std::size_t i = 0; i < future.size(); ++i) {
            const auto cand = candidates(future[i]);
            for_each_set_bit(cand, [&](std::size_t x) { options[i].push_back(static_cast<Vertex>(x)); });
            if (options[i].empty())
                return false;
        }
        return match_all(options, host_.vertex_count()).has_value();
    }

    void extend(std::size_t depth)
    {
        if (depth == order_.size()) {
            stopped_ = (*on_complete_)(map_);
            return;
        }
        const Vertex u = order_[depth];
        const BitRow cand = candidates(depth);
        for (auto x = cand.find_first(); x != BitRow::npos; x = cand.find_next(x)) {
            bool ok = true;
            for (auto v : below_[u])
                if (map_[v] >= x) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return;
            }
            map_[u] = static_cast<Vertex>(x);
            used_.set(x);
            if (forward_ok(depth))
                extend(depth + 1);
            used_.reset(x);
            if (stopped_ || exhausted_)
                return;
        }
    }

    const TripleSystem& pattern_;
    const TripleHostIndex& host_;
    std::uint64_t budget_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> below_;
    std::vector<BitRow> allowed_;
    std::vector<std::vector<Vertex>> earlier_nbrs_;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> closing_;
    std::vector<std::vector<std::size_t>> determined_;
    std::vector<Vertex> map_;
    BitRow used_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    bool exhausted_ = false;
    const std::function<bool(const std::vector<Vertex>&)>* on_complete_ = nullptr;
};

} // namespace detail

/// Is `pattern` a (not necessarily induced) subgraph of `host`? The verdict
/// None is only returned after the whole search tree has been exhausted.
inline SearchOutcome graph_embed(const Graph& pattern, const Graph& host, std::uint64_t budget = kDefaultBudget)
{
    SearchOutcome out;
    detail::GraphMatcher matcher(pattern, host, budget);
    out.verdict = matcher.run([&](const std::vector<Vertex>& map) {
        out.embedding = Embedding{map};
        return true;
    });
    out.nodes = matcher.nodes();
    return out;
}

/// Is `pattern` a sub-triple-system of `host`?
inline SearchOutcome triple_embed(const TripleSystem& pattern, const TripleSystem& host,
                                  std::uint64_t budget = kDefaultBudget)
{
    SearchOutcome out;
    if (pattern.vertex_count() > host.vertex_count())
        return out;
    const detail::TripleHostIndex index(host);
    detail::TripleMatcher matcher(pattern, index, budget);
    out.verdict = matcher.run([&](const std::vector<Vertex>& map) {
        out.embedding = Embedding{map};
        return true;
    });
    out.nodes = matcher.nodes();
    return out;
}

/// Does `host` contain the expansion of g? Each embedding of g into the
/// host's shadow is extended by choosing distinct apexes, one per edge,
/// outside the embedded core; the apex choice is a bipartite matching. The
/// returned map is indexed like expand(g): core vertices first, then the apex
/// of each edge in sorted edge order.
inline SearchOutcome contains_expansion(const Graph& g, const TripleSystem& host, std::uint64_t budget = kDefaultBudget)
{
    SearchOutcome out;
    const std::size_t n = g.vertex_count();
    if (n + g.edge_count() > host.vertex_count())
        return out;
    const detail::TripleHostIndex index(host);
    detail::GraphMatcher matcher(g, index.shadow_graph(), budget);
    std::uint64_t matchings = 0;
    std::vector<std::vector<Vertex>> options(g.edge_count());
    out.verdict = matcher.run([&](const std::vector<Vertex>& core) {
        ++matchings;
        BitRow core_set(host.vertex_count());
        for (auto x : core)
            core_set.set(x);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const auto& e = g.edges()[i];
            BitRow row = index.co_neighbors(core[e.u], core[e.v]);
            row.subtract(core_set);
            options[i].clear();
            for_each_set_bit(row, [&](std::size_t x) { options[i].push_back(static_cast<Vertex>(x)); });
            if (options[i].empty())
                return false;
        }
        auto apexes = detail::match_all(options, host.vertex_count());
        if (!apexes)
            return false;
        Embedding e{core};
        e.map.insert(e.map.end(), apexes->begin(), apexes->end());
        out.embedding = std::move(e);
        return true;
    });
    out.nodes = matcher.nodes() + matchings;
    return out;
}

} // namespace turan
