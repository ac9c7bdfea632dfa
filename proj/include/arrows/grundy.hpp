/*
 * Copyright 2026 The arrows authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Exact Sprague-Grundy evaluation.
//
// The fast path never looks at a full state. A state is first reduced to its
// unmarked subgraph U(X), split into connected components, with each vertex
// carrying two watch flags:
//
//   sink_watch   the vertex is internal and no marked arrow leaves it, so
//                pointing its last unmarked edge inward would make a sink;
//   source_watch the vertex is internal and no marked arrow enters it.
//
// Two states whose flagged unmarked subgraphs are isomorphic have isomorphic
// game trees, so components are memoized under a canonical key (AHU code for
// trees) and recombined by nim-sum. A vertex with neither flag constrains
// nothing and is split into one copy per incident edge before keying, which
// only increases sharing.
//
// NaiveSolver is the reference: plain mex recursion over full states memoized
// on the exact per-edge code, used as the oracle for the fast path and for
// the dormant (Game of Arrows) rule set.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "state.hpp"
#include "tree_code.hpp"

namespace arrows {

using Grundy = std::uint32_t;

/// Least nonnegative integer not in `values`.
template <typename Range>
Grundy mex(const Range& values)
{
    std::vector<bool> seen;
    for (auto v : values) {
        const auto i = static_cast<std::size_t>(v);
        if (i >= seen.size()) seen.resize(i + 1, false);
        seen[i] = true;
    }
    Grundy m = 0;
    while (m < seen.size() && seen[m]) ++m;
    return m;
}

inline Grundy mex(std::initializer_list<Grundy> values) { return mex<std::initializer_list<Grundy>>(values); }

constexpr Grundy nim_sum(Grundy a, Grundy b) noexcept { return a ^ b; }

/// Default bound on unmarked edges for the fast engine; ARROWS_MAX_EDGES
/// overrides it.
inline std::size_t default_max_edges()
{
    if (const char* env = std::getenv("ARROWS_MAX_EDGES")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 24;
}

constexpr std::size_t kNaiveMaxEdges = 14;

// ---------------------------------------------------------------------------
// Reduced states

struct ReducedState {
    static constexpr std::uint8_t kSinkWatch = 1;
    static constexpr std::uint8_t kSourceWatch = 2;

    /// Local endpoint pairs; vertex ids index `flags`.
    std::vector<std::array<std::uint16_t, 2>> edges;
    std::vector<std::uint8_t> flags;
    /// Ambient vertex behind each local vertex (split copies share one).
    std::vector<Vertex> vertex_origin;
    /// Ambient edge index behind each local edge.
    std::vector<std::size_t> edge_origin;

    std::size_t vertex_count() const noexcept { return flags.size(); }
    std::size_t edge_count() const noexcept { return edges.size(); }
    bool sink_watch(std::size_t v) const { return flags.at(v) & kSinkWatch; }
    bool source_watch(std::size_t v) const { return flags.at(v) & kSourceWatch; }
    bool is_tree() const noexcept { return edges.size() + 1 == flags.size(); }

    std::vector<std::uint16_t> degrees() const
    {
        std::vector<std::uint16_t> d(flags.size(), 0);
        for (auto e : edges) {
            ++d[e[0]];
            ++d[e[1]];
        }
        return d;
    }
};

/// A move in a reduced state: local edge, oriented edges[e][0] -> edges[e][1]
/// when forward.
struct ReducedMove {
    std::size_t edge;
    bool forward;
};

inline std::vector<ReducedMove> legal_moves(const ReducedState& r)
{
    std::vector<ReducedMove> out;
    const auto deg = r.degrees();
    for (std::size_t e = 0; e < r.edge_count(); ++e) {
        for (bool forward : {true, false}) {
            const auto tail = r.edges[e][forward ? 0 : 1];
            const auto head = r.edges[e][forward ? 1 : 0];
            if (deg[head] == 1 && r.sink_watch(head)) continue;
            if (deg[tail] == 1 && r.source_watch(tail)) continue;
            out.push_back({e, forward});
        }
    }
    return out;
}

namespace detail {

// Groups edges into connected components. When `split_free` is set, every
// endpoint with no watch flag becomes its own vertex first.
inline std::vector<ReducedState> decompose(const std::vector<std::array<std::uint16_t, 2>>& edges,
                                           const std::vector<std::uint8_t>& flags,
                                           const std::vector<Vertex>& vertex_origin,
                                           const std::vector<std::size_t>& edge_origin, bool split_free)
{
    const std::size_t n = flags.size();
    const std::size_t m = edges.size();
    // Token per edge end: the vertex itself, or a private copy n + 2e + side.
    auto token = [&](std::size_t e, int side) -> std::size_t {
        const auto v = edges[e][side];
        return (split_free && flags[v] == 0) ? n + 2 * e + side : v;
    };
    std::vector<std::size_t> parent(n + 2 * m);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < m; ++e) {
        auto a = find(token(e, 0)), b = find(token(e, 1));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<ReducedState> out;
    std::unordered_map<std::size_t, std::size_t> comp_of_root;
    std::vector<std::unordered_map<std::size_t, std::uint16_t>> local;
    for (std::size_t e = 0; e < m; ++e) {
        const auto root = find(token(e, 0));
        auto [it, fresh] = comp_of_root.emplace(root, out.size());
        if (fresh) {
            out.emplace_back();
            local.emplace_back();
        }
        auto& c = out[it->second];
        auto& ids = local[it->second];
        std::array<std::uint16_t, 2> le{};
        for (int side = 0; side < 2; ++side) {
            const auto t = token(e, side);
            auto [jt, added] = ids.emplace(t, static_cast<std::uint16_t>(c.flags.size()));
            if (added) {
                const auto v = edges[e][side];
                c.flags.push_back(flags[v]);
                c.vertex_origin.push_back(vertex_origin[v]);
            }
            le[side] = jt->second;
        }
        c.edges.push_back(le);
        c.edge_origin.push_back(edge_origin[e]);
    }
    return out;
}

}  // namespace detail

/// Per-component reduction of a state: one ReducedState per connected
/// component of U(X). Ambient leaves carry no flags; fully marked vertices
/// and vertices outside U(X) are dropped.
inline std::vector<ReducedState> reduce(const State& x)
{
    const auto& g = x.graph();
    std::vector<std::uint16_t> local(g.vertex_count(), UINT16_MAX);
    std::vector<std::uint8_t> flags;
    std::vector<Vertex> origin;
    std::vector<std::array<std::uint16_t, 2>> edges;
    std::vector<std::size_t> edge_origin;
    auto id_of = [&](Vertex v) {
        if (local[v] == UINT16_MAX) {
            local[v] = static_cast<std::uint16_t>(flags.size());
            std::uint8_t f = 0;
            if (g.is_internal(v)) {
                bool out_marked = false, in_marked = false;
                for (auto i : g.incident(v)) {
                    if (!x.is_marked(i.edge)) continue;
                    (x.arrow_on(i.edge).head == v ? in_marked : out_marked) = true;
                }
                if (!out_marked) f |= ReducedState::kSinkWatch;
                if (!in_marked) f |= ReducedState::kSourceWatch;
            }
            flags.push_back(f);
            origin.push_back(v);
        }
        return local[v];
    };
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (x.is_marked(i)) continue;
        const auto e = g.edge(i);
        const auto a = id_of(e.first);
        const auto b = id_of(e.second);
        edges.push_back({a, b});
        edge_origin.push_back(i);
    }
    return detail::decompose(edges, flags, origin, edge_origin, false);
}

/// Components reachable after one move, free vertices split.
inline std::vector<ReducedState> follow(const ReducedState& r, ReducedMove mv)
{
    auto flags = r.flags;
    const auto tail = r.edges[mv.edge][mv.forward ? 0 : 1];
    const auto head = r.edges[mv.edge][mv.forward ? 1 : 0];
    flags[head] &= static_cast<std::uint8_t>(~ReducedState::kSourceWatch);
    flags[tail] &= static_cast<std::uint8_t>(~ReducedState::kSinkWatch);
    std::vector<std::array<std::uint16_t, 2>> edges;
    std::vector<std::size_t> edge_origin;
    edges.reserve(r.edges.size());
    for (std::size_t e = 0; e < r.edges.size(); ++e) {
        if (e == mv.edge) continue;
        edges.push_back(r.edges[e]);
        edge_origin.push_back(r.edge_origin[e]);
    }
    return detail::decompose(edges, flags, r.vertex_origin, edge_origin, true);
}

/// Splits vertices without watch flags; the result is a list of components.
inline std::vector<ReducedState> split_free_vertices(const ReducedState& r)
{
    return detail::decompose(r.edges, r.flags, r.vertex_origin, r.edge_origin, true);
}

namespace detail {

inline std::uint8_t swap_watch(std::uint8_t f)
{
    return static_cast<std::uint8_t>(((f & 1) << 1) | ((f >> 1) & 1));
}

inline std::string exact_encoding(const ReducedState& r, bool swapped)
{
    std::string s;
    s.push_back('G');
    s.push_back(static_cast<char>(r.vertex_count() & 0xff));
    s.push_back(static_cast<char>(r.vertex_count() >> 8));
    for (auto f : r.flags) s.push_back(static_cast<char>(swapped ? swap_watch(f) : f));
    std::vector<std::array<std::uint16_t, 2>> e = r.edges;
    for (auto& p : e)
        if (p[0] > p[1]) std::swap(p[0], p[1]);
    std::sort(e.begin(), e.end());
    for (auto p : e)
        for (auto v : p) {
            s.push_back(static_cast<char>(v & 0xff));
            s.push_back(static_cast<char>(v >> 8));
        }
    return s;
}

}  // namespace detail

/// Memo key of a component. Flag-preserving isomorphic trees share a key;
/// flipping every arrow swaps the two flags and is a state isomorphism, so
/// the key is also invariant under that swap. Components with a cycle get an
/// exact (non-collapsing) encoding.
inline std::string canonical_key(const ReducedState& r)
{
    if (!r.is_tree()) return std::min(detail::exact_encoding(r, false), detail::exact_encoding(r, true));
    tree_code::Adjacency adj(r.vertex_count());
    for (auto e : r.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<std::uint8_t> swapped(r.flags.size());
    std::transform(r.flags.begin(), r.flags.end(), swapped.begin(), detail::swap_watch);
    return "T" + std::min(tree_code::canonical(adj, r.flags), tree_code::canonical(adj, swapped));
}

/// Sorted multiset of component keys of a whole state.
inline std::vector<std::string> state_key(const State& x)
{
    std::vector<std::string> keys;
    for (auto& c : reduce(x)) keys.push_back(canonical_key(c));
    std::sort(keys.begin(), keys.end());
    return keys;
}

// ---------------------------------------------------------------------------
// Cache

/// Concurrent map from canonical component key to Grundy value. Inserts are
/// idempotent; a key is never remapped.
class GrundyCache {
public:
    std::optional<Grundy> find(const std::string& key) const
    {
        auto v = peek(key);
        (v ? hits_ : misses_).fetch_add(1, std::memory_order_relaxed);
        return v;
    }

    /// Lookup without touching the hit/miss counters.
    std::optional<Grundy> peek(const std::string& key) const
    {
        const auto& s = shard(key);
        std::shared_lock lock(s.mutex);
        auto it = s.map.find(key);
        if (it == s.map.end()) return std::nullopt;
        return it->second;
    }

    void insert(const std::string& key, Grundy value)
    {
        auto& s = shard(key);
        std::unique_lock lock(s.mutex);
        auto [it, added] = s.map.emplace(key, value);
        if (!added && it->second != value) throw std::logic_error("grundy cache: conflicting value for key");
    }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (const auto& s : shards_) {
            std::shared_lock lock(s.mutex);
            n += s.map.size();
        }
        return n;
    }

    std::uint64_t hits() const noexcept { return hits_.load(); }
    std::uint64_t misses() const noexcept { return misses_.load(); }

    void clear()
    {
        for (auto& s : shards_) {
            std::unique_lock lock(s.mutex);
            s.map.clear();
        }
        hits_ = 0;
        misses_ = 0;
    }

private:
    static constexpr std::size_t kShards = 16;

    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<std::string, Grundy> map;
    };

    Shard& shard(const std::string& key) { return shards_[std::hash<std::string>{}(key) % kShards]; }
    const Shard& shard(const std::string& key) const
    {
        return shards_[std::hash<std::string>{}(key) % kShards];
    }

    std::array<Shard, kShards> shards_;
    mutable std::atomic<std::uint64_t> hits_{0};
    mutable std::atomic<std::uint64_t> misses_{0};
};

struct EngineStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::size_t cache_entries = 0;
};

enum class Player { PlayerOne, PlayerTwo };

inline std::string_view to_string(Player p) { return p == Player::PlayerOne ? "player1" : "player2"; }
inline Player other(Player p) { return p == Player::PlayerOne ? Player::PlayerTwo : Player::PlayerOne; }

// ---------------------------------------------------------------------------
// Fast engine

/// Memoized Grundy evaluator for the Trimmed Game. Safe to share between
/// threads: evaluation state is local to each call and the cache is
/// concurrent.
class Engine {
public:
    explicit Engine(std::shared_ptr<GrundyCache> cache = std::make_shared<GrundyCache>(),
                    std::size_t max_edges = default_max_edges())
        : cache_(std::move(cache)), max_edges_(max_edges)
    {
    }

    std::size_t max_edges() const noexcept { return max_edges_; }
    GrundyCache& cache() noexcept { return *cache_; }
    const std::shared_ptr<GrundyCache>& cache_ptr() const noexcept { return cache_; }

    Grundy grundy(const State& x)
    {
        detail::require_valid(x, RuleSet::Trimmed);
        if (x.unmarked_count() > max_edges_)
            throw Error(ErrorCode::ResourceLimit, std::to_string(x.unmarked_count()) +
                                                      " unmarked edges exceed the bound of " +
                                                      std::to_string(max_edges_));
        Grundy g = 0;
        for (auto& c : reduce(x))
            for (auto& part : split_free_vertices(c)) g ^= component_value(part);
        return g;
    }

    /// Grundy value of one connected reduced component.
    Grundy component_value(const ReducedState& root)
    {
        auto root_key = canonical_key(root);
        if (auto v = cache_->find(root_key)) return *v;

        struct Frame {
            ReducedState comp;
            std::string key;
            std::vector<std::vector<std::string>> followers;
            bool expanded = false;
        };
        std::vector<Frame> stack;
        stack.push_back({root, root_key, {}, false});
        while (!stack.empty()) {
            if (!stack.back().expanded) {
                if (cache_->peek(stack.back().key)) {
                    stack.pop_back();
                    continue;
                }
                nodes_.fetch_add(1, std::memory_order_relaxed);
                std::vector<Frame> pending;
                std::vector<std::vector<std::string>> followers;
                std::vector<std::string> queued;
                for (auto mv : legal_moves(stack.back().comp)) {
                    auto& keys = followers.emplace_back();
                    for (auto& child : follow(stack.back().comp, mv)) {
                        auto k = canonical_key(child);
                        if (!cache_->find(k) && std::find(queued.begin(), queued.end(), k) == queued.end()) {
                            queued.push_back(k);
                            pending.push_back({std::move(child), k, {}, false});
                        }
                        keys.push_back(std::move(k));
                    }
                }
                stack.back().followers = std::move(followers);
                stack.back().expanded = true;
                for (auto& p : pending) stack.push_back(std::move(p));
                continue;
            }
            auto& top = stack.back();
            std::vector<Grundy> values;
            values.reserve(top.followers.size());
            for (const auto& keys : top.followers) {
                Grundy v = 0;
                for (const auto& k : keys) v ^= *cache_->peek(k);
                values.push_back(v);
            }
            cache_->insert(top.key, mex(values));
            stack.pop_back();
        }
        return *cache_->peek(root_key);
    }

    /// Winning move when one exists; otherwise the move whose follower has
    /// the largest Grundy value, ties to the smallest (edge, direction).
    /// None iff the state is terminal.
    std::optional<Arrow> best_move(const State& x)
    {
        const auto moves = legal_moves(x);
        if (moves.empty()) return std::nullopt;
        const Grundy here = grundy(x);
        std::optional<Arrow> best;
        Grundy best_value = 0;
        for (const auto& a : moves) {
            const Grundy v = grundy(apply_move(x, a));
            if (here != 0) {
                if (v == 0) return a;
                continue;
            }
            if (!best || v > best_value) {
                best = a;
                best_value = v;
            }
        }
        return best;
    }

    /// Best move in the Game of Arrows, played through T(G).
    std::optional<Arrow> best_move(const TrimmedGame& game, const State& dormant)
    {
        auto mv = best_move(state_trim(game, dormant));
        if (!mv) return std::nullopt;
        return untrim_arrow(game, *mv);
    }

    Grundy grundy(const TrimmedGame& game, const State& dormant) { return grundy(state_trim(game, dormant)); }

    Player winner(const Graph& g, RuleSet mode)
    {
        if (mode == RuleSet::Trimmed) return grundy(empty_state(g)) != 0 ? Player::PlayerOne : Player::PlayerTwo;
        if (g.has_isolated_vertex())
            fail(ErrorCode::InvalidGraph, "game graphs must not have isolated vertices");
        return grundy(empty_state(trimming(g))) != 0 ? Player::PlayerOne : Player::PlayerTwo;
    }

    EngineStats stats() const
    {
        return {nodes_.load(), cache_->hits(), cache_->misses(), cache_->size()};
    }

private:
    std::shared_ptr<GrundyCache> cache_;
    std::size_t max_edges_;
    std::atomic<std::uint64_t> nodes_{0};
};

inline Grundy grundy(const State& x, GrundyCache& cache)
{
    Engine e(std::shared_ptr<GrundyCache>(&cache, [](GrundyCache*) {}));
    return e.grundy(x);
}

// ---------------------------------------------------------------------------
// Reference solver

enum class ParityClass { Even, Odd, Mixed };

inline std::string_view to_string(ParityClass p)
{
    return p == ParityClass::Even ? "even" : p == ParityClass::Odd ? "odd" : "mixed";
}

/// Mex recursion over full positions of one graph, memoized on the exact
/// per-edge code. Serves both rule sets; no reduction, no decomposition.
class NaiveSolver {
public:
    NaiveSolver(GraphPtr graph, RuleSet rules, std::size_t max_unmarked = kNaiveMaxEdges)
        : graph_(std::move(graph)), rules_(rules), max_unmarked_(max_unmarked)
    {
    }

    Grundy grundy(const State& x)
    {
        check(x);
        return grundy_rec(x);
    }

    ParityClass parity_class(const State& x)
    {
        check(x);
        const auto mask = parity_rec(x);
        return mask == 1 ? ParityClass::Even : mask == 2 ? ParityClass::Odd : ParityClass::Mixed;
    }

    std::size_t memo_size() const noexcept { return grundy_memo_.size() + parity_memo_.size(); }

private:
    void check(const State& x) const
    {
        if (x.graph() != *graph_) fail(ErrorCode::InvalidParameter, "state is not on the solver's graph");
        detail::require_valid(x, rules_);
        if (x.unmarked_count() > max_unmarked_)
            throw Error(ErrorCode::ResourceLimit, std::to_string(x.unmarked_count()) +
                                                      " unmarked edges exceed the reference bound of " +
                                                      std::to_string(max_unmarked_));
    }

    Grundy grundy_rec(const State& x)
    {
        const auto code = x.code();
        if (auto it = grundy_memo_.find(code); it != grundy_memo_.end()) return it->second;
        std::vector<Grundy> values;
        for (const auto& a : legal_moves(x, rules_)) values.push_back(grundy_rec(apply_move(x, a, rules_)));
        const Grundy g = mex(values);
        grundy_memo_.emplace(code, g);
        return g;
    }

    // bit 0: some terminal descendent at even distance; bit 1: at odd distance
    std::uint8_t parity_rec(const State& x)
    {
        const auto code = x.code();
        if (auto it = parity_memo_.find(code); it != parity_memo_.end()) return it->second;
        const auto moves = legal_moves(x, rules_);
        std::uint8_t mask = moves.empty() ? 1 : 0;
        for (const auto& a : moves) {
            const auto child = parity_rec(apply_move(x, a, rules_));
            mask |= static_cast<std::uint8_t>(((child & 1) << 1) | ((child >> 1) & 1));
        }
        parity_memo_.emplace(code, mask);
        return mask;
    }

    GraphPtr graph_;
    RuleSet rules_;
    std::size_t max_unmarked_;
    std::unordered_map<std::uint64_t, Grundy> grundy_memo_;
    std::unordered_map<std::uint64_t, std::uint8_t> parity_memo_;
};

inline Grundy grundy_naive(const State& x)
{
    return NaiveSolver(x.graph_ptr(), RuleSet::Trimmed).grundy(x);
}

inline Grundy grundy_dormant(const State& x)
{
    return NaiveSolver(x.graph_ptr(), RuleSet::Arrows).grundy(x);
}

inline ParityClass parity_moves_class(const State& x)
{
    return NaiveSolver(x.graph_ptr(), RuleSet::Trimmed).parity_class(x);
}

}  // namespace arrows
