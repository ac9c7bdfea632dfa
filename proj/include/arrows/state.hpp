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

// Positions of the Trimmed Game of Arrows (states) and of the Game of Arrows
// (dormant states), together with followers, flips, flowers and the
// state-trimming bijection.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace arrows {

struct Arrow {
    Vertex tail = 0;
    Vertex head = 0;

    Arrow flipped() const noexcept { return {head, tail}; }
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

inline std::string to_string(const Arrow& a)
{
    return "(" + std::to_string(a.tail) + "->" + std::to_string(a.head) + ")";
}

/// Which rule set a position belongs to: Trimmed allows sinks and sources at
/// leaves, Arrows (dormant states) allows none anywhere.
enum class RuleSet { Trimmed, Arrows };

/// Per-edge mark; Forward means edge.first -> edge.second.
enum class Slot : std::uint8_t { Unmarked = 0, Forward = 1, Backward = 2 };

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// Outcome of trying to add one arrow to a position.
enum class MoveStatus { Legal, NotAnEdge, Occupied, CreatesSink, CreatesSource, LeafViolation };

inline MoveViolation violation_of(MoveStatus s)
{
    switch (s) {
    case MoveStatus::CreatesSink: return MoveViolation::CreatesSink;
    case MoveStatus::CreatesSource: return MoveViolation::CreatesSource;
    case MoveStatus::LeafViolation: return MoveViolation::LeafViolation;
    default: return MoveViolation::None;
    }
}

/// A set of arrows with at most one arrow per edge. Carries no sink/source
/// invariant, so it also represents flowers that fail to be states.
class Decoration {
public:
    Decoration() : graph_(share(Graph{})) {}

    explicit Decoration(GraphPtr graph) : graph_(std::move(graph))
    {
        slots_.assign(graph_->edge_count(), Slot::Unmarked);
    }

    /// Throws invalid-parameter for arrows off the graph and occupied for a
    /// second arrow on the same edge.
    Decoration(GraphPtr graph, const std::vector<Arrow>& arrows) : Decoration(std::move(graph))
    {
        for (const auto& a : arrows) mark(a);
    }

    const Graph& graph() const noexcept { return *graph_; }
    const GraphPtr& graph_ptr() const noexcept { return graph_; }
    const std::vector<Slot>& slots() const noexcept { return slots_; }
    Slot slot(std::size_t edge) const { return slots_.at(edge); }
    bool is_marked(std::size_t edge) const { return slots_.at(edge) != Slot::Unmarked; }

    std::size_t marked_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(slots_.begin(), slots_.end(), [](Slot s) { return s != Slot::Unmarked; }));
    }
    std::size_t unmarked_count() const { return slots_.size() - marked_count(); }

    /// Arrow on a marked edge.
    Arrow arrow_on(std::size_t edge) const
    {
        const auto e = graph_->edge(edge);
        return slots_[edge] == Slot::Forward ? Arrow{e.first, e.second} : Arrow{e.second, e.first};
    }

    /// Arrows in edge-index order.
    std::vector<Arrow> arrows() const
    {
        std::vector<Arrow> out;
        for (std::size_t i = 0; i < slots_.size(); ++i)
            if (slots_[i] != Slot::Unmarked) out.push_back(arrow_on(i));
        return out;
    }

    bool contains(const Arrow& a) const
    {
        auto idx = graph_->edge_index(a.tail, a.head);
        return idx && is_marked(*idx) && arrow_on(*idx) == a;
    }

    /// Adds an arrow in place.
    void mark(const Arrow& a)
    {
        auto idx = graph_->edge_index(a.tail, a.head);
        if (!idx) fail(ErrorCode::InvalidParameter, "arrow " + to_string(a) + " is not on an edge");
        if (slots_[*idx] != Slot::Unmarked) throw Error(ErrorCode::Occupied, "edge already marked");
        slots_[*idx] = graph_->edge(*idx).first == a.tail ? Slot::Forward : Slot::Backward;
    }

    bool points_into(std::size_t edge, Vertex v) const
    {
        return is_marked(edge) && arrow_on(edge).head == v;
    }

    bool is_sink(Vertex v) const
    {
        const auto& inc = graph_->incident(v);
        if (inc.empty()) return false;
        for (auto i : inc)
            if (!is_marked(i.edge) || arrow_on(i.edge).head != v) return false;
        return true;
    }

    bool is_source(Vertex v) const
    {
        const auto& inc = graph_->incident(v);
        if (inc.empty()) return false;
        for (auto i : inc)
            if (!is_marked(i.edge) || arrow_on(i.edge).tail != v) return false;
        return true;
    }

    /// No internal sinks or sources.
    bool is_state() const
    {
        for (Vertex v = 0; v < graph_->vertex_count(); ++v)
            if (graph_->is_internal(v) && (is_sink(v) || is_source(v))) return false;
        return true;
    }

    /// No sinks or sources anywhere.
    bool is_dormant() const
    {
        for (Vertex v = 0; v < graph_->vertex_count(); ++v)
            if (is_sink(v) || is_source(v)) return false;
        return true;
    }

    bool is_valid(RuleSet rules) const { return rules == RuleSet::Trimmed ? is_state() : is_dormant(); }

    /// Exact base-3 code of the slots; graphs up to 40 edges.
    std::uint64_t code() const
    {
        if (slots_.size() > 40) fail(ErrorCode::ResourceLimit, "exact code needs at most 40 edges");
        std::uint64_t c = 0;
        for (auto it = slots_.rbegin(); it != slots_.rend(); ++it) c = c * 3 + static_cast<std::uint64_t>(*it);
        return c;
    }

    friend bool operator==(const Decoration& a, const Decoration& b)
    {
        return *a.graph_ == *b.graph_ && a.slots_ == b.slots_;
    }

protected:
    GraphPtr graph_;
    std::vector<Slot> slots_;
};

/// A decoration with no internal sinks or sources.
class State : public Decoration {
public:
    State() = default;

    /// Empty state; the graph must not have isolated vertices.
    explicit State(GraphPtr graph) : Decoration(std::move(graph))
    {
        if (graph_->has_isolated_vertex())
            fail(ErrorCode::InvalidGraph, "game graphs must not have isolated vertices");
    }

    State(GraphPtr graph, const std::vector<Arrow>& arrows) : State(std::move(graph))
    {
        for (const auto& a : arrows) mark(a);
        if (!is_state()) fail(ErrorCode::InvalidState, "decoration has an internal sink or source");
    }

    static State from_decoration(const Decoration& d)
    {
        return State(d.graph_ptr(), d.arrows());
    }

    MoveStatus move_status(const Arrow& a, RuleSet rules = RuleSet::Trimmed) const
    {
        auto idx = graph_->edge_index(a.tail, a.head);
        if (!idx) return MoveStatus::NotAnEdge;
        if (is_marked(*idx)) return MoveStatus::Occupied;
        const bool sink = completes(a.head, *idx, true);
        const bool source = completes(a.tail, *idx, false);
        if (sink && graph_->is_internal(a.head)) return MoveStatus::CreatesSink;
        if (source && graph_->is_internal(a.tail)) return MoveStatus::CreatesSource;
        if (rules == RuleSet::Arrows && (sink || source)) return MoveStatus::LeafViolation;
        return MoveStatus::Legal;
    }

    /// Adds a legal arrow in place. Throws occupied or illegal-move.
    void play(const Arrow& a, RuleSet rules = RuleSet::Trimmed)
    {
        switch (auto s = move_status(a, rules)) {
        case MoveStatus::Legal: break;
        case MoveStatus::NotAnEdge:
            fail(ErrorCode::InvalidParameter, "arrow " + to_string(a) + " is not on an edge");
        case MoveStatus::Occupied:
            throw Error(ErrorCode::Occupied, "edge of " + to_string(a) + " is already marked");
        default:
            throw Error(ErrorCode::IllegalMove,
                        "arrow " + to_string(a) + " " + std::string(to_string(violation_of(s))),
                        violation_of(s));
        }
        mark(a);
    }

private:
    // True when marking edge `skip` toward (into=true) or away from v leaves
    // every edge at v pointing the same way.
    bool completes(Vertex v, std::size_t skip, bool into) const
    {
        for (auto i : graph_->incident(v)) {
            if (i.edge == skip) continue;
            if (!is_marked(i.edge)) return false;
            if ((arrow_on(i.edge).head == v) != into) return false;
        }
        return true;
    }
};

inline State empty_state(GraphPtr g) { return State(std::move(g)); }
inline State empty_state(const Graph& g) { return State(share(g)); }

namespace detail {

inline void require_valid(const State& x, RuleSet rules)
{
    if (!x.is_valid(rules))
        fail(ErrorCode::InvalidState,
             rules == RuleSet::Arrows ? "position is not a dormant state" : "position is not a state");
}

}  // namespace detail

/// Legal arrows in edge-index order, the forward orientation first.
inline std::vector<Arrow> legal_moves(const State& x, RuleSet rules = RuleSet::Trimmed)
{
    std::vector<Arrow> out;
    const auto& g = x.graph();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (x.is_marked(i)) continue;
        const auto e = g.edge(i);
        for (Arrow a : {Arrow{e.first, e.second}, Arrow{e.second, e.first}})
            if (x.move_status(a, rules) == MoveStatus::Legal) out.push_back(a);
    }
    return out;
}

inline std::vector<Arrow> dormant_legal_moves(const State& x)
{
    detail::require_valid(x, RuleSet::Arrows);
    return legal_moves(x, RuleSet::Arrows);
}

inline State apply_move(const State& x, const Arrow& a, RuleSet rules = RuleSet::Trimmed)
{
    State y = x;
    y.play(a, rules);
    return y;
}

inline bool is_terminal(const State& x, RuleSet rules = RuleSet::Trimmed)
{
    return legal_moves(x, rules).empty();
}

inline State flip(const State& x)
{
    std::vector<Arrow> arrows;
    for (auto a : x.arrows()) arrows.push_back(a.flipped());
    return State(x.graph_ptr(), arrows);
}

/// Disjoint union of two states on the disjoint union of their graphs.
inline State disjoint_union(const State& x, const State& y)
{
    auto g = share(disjoint_union(x.graph(), y.graph()));
    auto arrows = x.arrows();
    const auto shift = static_cast<Vertex>(x.graph().vertex_count());
    for (auto a : y.arrows()) arrows.push_back({a.tail + shift, a.head + shift});
    return State(g, arrows);
}

inline std::set<Vertex> heads(const Decoration& x)
{
    std::set<Vertex> out;
    for (auto a : x.arrows()) out.insert(a.head);
    return out;
}

inline std::set<Vertex> tails(const Decoration& x)
{
    std::set<Vertex> out;
    for (auto a : x.arrows()) out.insert(a.tail);
    return out;
}

/// U(X): the subgraph induced by the unmarked edges, with ambient vertex ids.
inline SubgraphMap unmarked_subgraph(const Decoration& x)
{
    const auto& g = x.graph();
    std::vector<Vertex> verts;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (x.is_marked(i)) continue;
        verts.push_back(g.edge(i).first);
        verts.push_back(g.edge(i).second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<Vertex> local(g.vertex_count(), UINT32_MAX);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!x.is_marked(i)) edges.emplace_back(local[g.edge(i).first], local[g.edge(i).second]);
    if (g.has_labels())
        for (auto v : verts) labels.push_back(g.label(v));
    return {Graph(verts.size(), std::move(edges), std::move(labels)), std::move(verts)};
}

inline bool in_unmarked_subgraph(const Decoration& x, Vertex v)
{
    if (v >= x.graph().vertex_count()) return false;
    for (auto i : x.graph().incident(v))
        if (!x.is_marked(i.edge)) return true;
    return false;
}

namespace detail {

inline Decoration flower(const Decoration& x, Vertex v, bool outward)
{
    if (!in_unmarked_subgraph(x, v))
        fail(ErrorCode::InvalidParameter, "vertex " + std::to_string(v) + " is not in U(X)");
    Decoration d = x;
    for (auto i : x.graph().incident(v)) {
        if (x.is_marked(i.edge)) continue;
        d.mark(outward ? Arrow{v, i.neighbor} : Arrow{i.neighbor, v});
    }
    return d;
}

}  // namespace detail

/// X with every unmarked edge at v oriented out of v. May fail to be a state.
inline Decoration tail_flower(const Decoration& x, Vertex v) { return detail::flower(x, v, true); }

/// X with every unmarked edge at v oriented into v. May fail to be a state.
inline Decoration head_flower(const Decoration& x, Vertex v) { return detail::flower(x, v, false); }

/// Vertex map between unmarked subgraphs, keyed by ambient vertex ids.
using VertexMap = std::map<Vertex, Vertex>;

/// Arrow map between arrow sets of unmarked subgraphs.
using ArrowMap = std::map<Arrow, Arrow>;

namespace detail {

inline std::set<Vertex> unmarked_vertices(const Decoration& x)
{
    auto u = unmarked_subgraph(x);
    return {u.to_parent.begin(), u.to_parent.end()};
}

inline std::set<Arrow> unmarked_arrows(const Decoration& x)
{
    std::set<Arrow> out;
    const auto& g = x.graph();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (x.is_marked(i)) continue;
        out.insert({g.edge(i).first, g.edge(i).second});
        out.insert({g.edge(i).second, g.edge(i).first});
    }
    return out;
}

// a+(D) = Y u a(D \ X); nullopt when the image is not a decoration.
inline std::optional<Decoration> push_forward(const ArrowMap& a, const Decoration& x,
                                              const Decoration& y, const Decoration& d)
{
    Decoration out = y;
    for (auto arrow : d.arrows()) {
        if (x.contains(arrow)) continue;
        auto it = a.find(arrow);
        if (it == a.end()) return std::nullopt;
        auto idx = out.graph().edge_index(it->second.tail, it->second.head);
        if (!idx || out.is_marked(*idx)) return std::nullopt;
        out.mark(it->second);
    }
    return out;
}

}  // namespace detail

/// The arrow map a_f induced by a vertex map on U(X). Throws
/// invalid-parameter when some unmarked edge of X does not land on an
/// unmarked edge of Y.
inline ArrowMap induced_arrow_map(const VertexMap& f, const Decoration& x, const Decoration& y)
{
    ArrowMap a;
    auto target = detail::unmarked_arrows(y);
    for (auto arrow : detail::unmarked_arrows(x)) {
        auto t = f.find(arrow.tail);
        auto h = f.find(arrow.head);
        if (t == f.end() || h == f.end())
            fail(ErrorCode::InvalidParameter, "vertex map does not cover U(X)");
        Arrow image{t->second, h->second};
        if (!target.count(image))
            fail(ErrorCode::InvalidParameter, "vertex map sends an edge of U(X) off U(Y)");
        a[arrow] = image;
    }
    return a;
}

/// Sufficient condition for a_f to be a state isomorphism, given a graph
/// isomorphism f: U(X) -> U(Y): f carries heads-or-leaves onto heads-or-leaves
/// and tails-or-leaves onto tails-or-leaves (all restricted to the unmarked
/// subgraphs).
inline bool check_iso_sufficient(const VertexMap& f, const Decoration& x, const Decoration& y)
{
    auto ux = detail::unmarked_vertices(x);
    auto uy = detail::unmarked_vertices(y);
    std::set<Vertex> domain, image;
    for (auto [p, q] : f) {
        domain.insert(p);
        image.insert(q);
    }
    if (domain != ux || image != uy || f.size() != uy.size())
        fail(ErrorCode::InvalidParameter, "vertex map is not a bijection between unmarked subgraphs");
    auto a = induced_arrow_map(f, x, y);
    if (a.size() != detail::unmarked_arrows(y).size())
        fail(ErrorCode::InvalidParameter, "vertex map is not a graph isomorphism of unmarked subgraphs");

    auto hx = heads(x), tx = tails(x), hy = heads(y), ty = tails(y);
    auto with_leaves = [](const Decoration& d, const std::set<Vertex>& base, const std::set<Vertex>& u) {
        std::set<Vertex> out;
        for (auto v : u)
            if (base.count(v) || d.graph().is_leaf(v)) out.insert(v);
        return out;
    };
    auto image_of = [&](const std::set<Vertex>& s) {
        std::set<Vertex> out;
        for (auto v : s) out.insert(f.at(v));
        return out;
    };
    return image_of(with_leaves(x, hx, ux)) == with_leaves(y, hy, uy) &&
           image_of(with_leaves(x, tx, ux)) == with_leaves(y, ty, uy);
}

/// Local criterion: `a` is a state isomorphism iff a+ and its inverse are
/// locally state-preventing at every vertex, checked flower by flower.
/// Throws invalid-parameter unless `a` is a flip-commuting bijection
/// A(U(X)) -> A(U(Y)).
inline bool check_iso_local(const ArrowMap& a, const Decoration& x, const Decoration& y)
{
    auto ax = detail::unmarked_arrows(x);
    auto ay = detail::unmarked_arrows(y);
    ArrowMap inverse;
    for (auto [from, to] : a) {
        if (!ax.count(from) || !ay.count(to))
            fail(ErrorCode::InvalidParameter, "arrow map is not between unmarked arrow sets");
        if (!inverse.emplace(to, from).second)
            fail(ErrorCode::InvalidParameter, "arrow map is not injective");
    }
    if (a.size() != ax.size() || inverse.size() != ay.size())
        fail(ErrorCode::InvalidParameter, "arrow map is not a bijection");
    for (auto [from, to] : a)
        if (a.at(from.flipped()) != to.flipped())
            fail(ErrorCode::InvalidParameter, "arrow map does not commute with flip");

    auto preventing = [](const ArrowMap& m, const Decoration& src, const Decoration& dst) {
        for (auto v : detail::unmarked_vertices(src)) {
            for (bool outward : {true, false}) {
                auto fl = outward ? tail_flower(src, v) : head_flower(src, v);
                if (fl.is_state()) continue;
                auto img = detail::push_forward(m, src, dst, fl);
                if (img && img->is_state()) return false;
            }
        }
        return true;
    };
    return preventing(a, x, y) && preventing(inverse, y, x);
}

/// G and T(G) shared between the two rule sets.
struct TrimmedGame {
    GraphPtr original;
    GraphPtr trimmed;
    Trimmed map;
};

inline TrimmedGame make_trimmed_game(GraphPtr g)
{
    auto t = trim(*g);
    auto tg = share(t.graph);
    return {std::move(g), std::move(tg), std::move(t)};
}

/// Dormant state of G -> state of T(G).
inline State state_trim(const TrimmedGame& game, const State& x)
{
    if (x.graph() != *game.original) fail(ErrorCode::InvalidParameter, "state is not on the trimmed game's graph");
    detail::require_valid(x, RuleSet::Arrows);
    std::vector<Arrow> arrows;
    const auto& t = game.map;
    for (std::size_t i = 0; i < x.graph().edge_count(); ++i) {
        if (!x.is_marked(i)) continue;
        auto ti = t.original_edge_to_trimmed[i];
        if (!ti) fail(ErrorCode::InvalidState, "dormant state marks a leaf edge");
        const auto a = x.arrow_on(i);
        const auto e = game.trimmed->edge(*ti);
        arrows.push_back(t.to_original[e.first] == a.tail ? Arrow{e.first, e.second}
                                                          : Arrow{e.second, e.first});
    }
    Decoration d(game.trimmed, arrows);
    if (!d.is_state()) fail(ErrorCode::InvalidState, "trimmed decoration is not a state");
    return State::from_decoration(d);
}

/// State of T(G) -> dormant state of G.
inline State state_untrim(const TrimmedGame& game, const State& y)
{
    if (y.graph() != *game.trimmed) fail(ErrorCode::InvalidParameter, "state is not on T(G)");
    detail::require_valid(y, RuleSet::Trimmed);
    std::vector<Arrow> arrows;
    for (auto a : y.arrows()) arrows.push_back({game.map.to_original[a.tail], game.map.to_original[a.head]});
    Decoration d(game.original, arrows);
    if (!d.is_dormant()) fail(ErrorCode::InvalidState, "untrimmed decoration is not dormant");
    return State::from_decoration(d);
}

/// Arrow of T(G) -> arrow of G under the trimming homomorphism.
inline Arrow untrim_arrow(const TrimmedGame& game, const Arrow& a)
{
    return {game.map.to_original.at(a.tail), game.map.to_original.at(a.head)};
}

}  // namespace arrows
