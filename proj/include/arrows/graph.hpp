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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "tree_code.hpp"

namespace arrows {

using Vertex = std::uint32_t;

/// Unordered edge stored with `first < second`.
struct Edge {
    Vertex first = 0;
    Vertex second = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Edges are kept normalized and sorted, so the edge index of {u,w} is its
/// rank in lexicographic order. That index is the slot a game state uses for
/// the mark on the edge. Graphs are immutable once built.
class Graph {
public:
    struct Incidence {
        Vertex neighbor;
        std::size_t edge;
    };

    Graph() = default;

    /// Throws invalid-graph on self-loops, duplicates or out-of-range ends.
    Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
          std::vector<std::string> labels = {})
        : n_(vertex_count), labels_(std::move(labels))
    {
        if (!labels_.empty() && labels_.size() != n_)
            fail(ErrorCode::InvalidGraph, "label count does not match vertex count");
        edges_.reserve(edges.size());
        for (auto [u, w] : edges) {
            if (u >= n_ || w >= n_)
                fail(ErrorCode::InvalidGraph,
                     "edge {" + std::to_string(u) + "," + std::to_string(w) + "} out of range");
            if (u == w) fail(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(u));
            edges_.push_back(u < w ? Edge{u, w} : Edge{w, u});
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            fail(ErrorCode::InvalidGraph, "duplicate edge");
        adj_.assign(n_, {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            adj_[edges_[i].first].push_back({edges_[i].second, i});
            adj_[edges_[i].second].push_back({edges_[i].first, i});
        }
        for (auto& list : adj_)
            std::sort(list.begin(), list.end(),
                      [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    const std::vector<Incidence>& incident(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    bool is_leaf(Vertex v) const { return degree(v) == 1; }
    bool is_internal(Vertex v) const { return degree(v) != 1; }
    bool empty() const noexcept { return n_ == 0; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Provenance label, or the decimal id when the graph carries none.
    std::string label(Vertex v) const
    {
        if (v >= n_) fail(ErrorCode::InvalidParameter, "vertex out of range");
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    std::optional<Vertex> find_label(const std::string& name) const
    {
        for (Vertex v = 0; v < n_; ++v)
            if (label(v) == name) return v;
        return std::nullopt;
    }

    std::optional<std::size_t> edge_index(Vertex u, Vertex w) const
    {
        if (u == w) return std::nullopt;
        Edge key = u < w ? Edge{u, w} : Edge{w, u};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    bool has_isolated_vertex() const
    {
        for (const auto& a : adj_)
            if (a.empty()) return true;
        return false;
    }

    std::vector<std::pair<Vertex, Vertex>> edge_pairs() const
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(edges_.size());
        for (auto e : edges_) out.emplace_back(e.first, e.second);
        return out;
    }

    /// Structural equality: vertex count and edge set. Labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
    std::vector<std::string> labels_;
};

struct SpiderSpec {
    unsigned a = 0;
    unsigned b = 0;
    unsigned c = 0;
};

inline Graph path_graph(std::size_t n)
{
    if (n == 0) fail(ErrorCode::InvalidParameter, "path_graph needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

/// Leg vertex ids: hub is 0, then legs u, v, w numbered outward in turn.
inline Vertex spider_vertex(const SpiderSpec& s, int leg, unsigned index)
{
    const unsigned len[3] = {s.a, s.b, s.c};
    if (leg < 0 || leg > 2) fail(ErrorCode::InvalidParameter, "leg must be 0, 1 or 2");
    if (index > len[leg]) fail(ErrorCode::InvalidParameter, "leg index out of range");
    if (index == 0) return 0;
    Vertex offset = 0;
    for (int l = 0; l < leg; ++l) offset += len[l];
    return offset + index;
}

inline Graph spider_graph(const SpiderSpec& s)
{
    if (s.a == 0 && s.b == 0 && s.c == 0)
        fail(ErrorCode::InvalidParameter, "spider needs at least one nonzero leg");
    std::vector<std::pair<Vertex, Vertex>> edges;
    const unsigned len[3] = {s.a, s.b, s.c};
    for (int leg = 0; leg < 3; ++leg)
        for (unsigned i = 1; i <= len[leg]; ++i)
            edges.emplace_back(spider_vertex(s, leg, i - 1), spider_vertex(s, leg, i));
    return Graph(1 + s.a + s.b + s.c, std::move(edges));
}

inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    const auto shift = static_cast<Vertex>(g.vertex_count());
    auto edges = g.edge_pairs();
    for (auto e : h.edges()) edges.emplace_back(e.first + shift, e.second + shift);
    std::vector<std::string> labels;
    if (g.has_labels() || h.has_labels()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            labels.push_back(h.has_labels() ? h.label(v) : std::to_string(v + shift));
    }
    return Graph(g.vertex_count() + h.vertex_count(), std::move(edges), std::move(labels));
}

inline std::vector<Vertex> leaves(const Graph& g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.is_leaf(v)) out.push_back(v);
    return out;
}

inline std::vector<Vertex> internal_vertices(const Graph& g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.is_internal(v)) out.push_back(v);
    return out;
}

/// A subgraph together with the ids its vertices had in the parent graph.
struct SubgraphMap {
    Graph graph;
    std::vector<Vertex> to_parent;
};

inline SubgraphMap induced_subgraph(const Graph& g, const std::vector<Vertex>& keep)
{
    std::vector<Vertex> local(g.vertex_count(), UINT32_MAX);
    std::vector<Vertex> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= g.vertex_count()) fail(ErrorCode::InvalidParameter, "vertex out of range");
        local[sorted[i]] = static_cast<Vertex>(i);
        if (g.has_labels()) labels.push_back(g.label(sorted[i]));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto e : g.edges())
        if (local[e.first] != UINT32_MAX && local[e.second] != UINT32_MAX)
            edges.emplace_back(local[e.first], local[e.second]);
    return {Graph(sorted.size(), std::move(edges), std::move(labels)), std::move(sorted)};
}

/// Components in order of their smallest vertex; isolated vertices form
/// single-vertex components.
inline std::vector<SubgraphMap> connected_components(const Graph& g)
{
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<std::vector<Vertex>> members;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(members.size());
        members.push_back({s});
        comp[s] = id;
        for (std::size_t i = 0; i < members.back().size(); ++i) {
            for (auto inc : g.incident(members.back()[i])) {
                if (comp[inc.neighbor] == -1) {
                    comp[inc.neighbor] = id;
                    members.back().push_back(inc.neighbor);
                }
            }
        }
    }
    std::vector<SubgraphMap> out;
    out.reserve(members.size());
    for (auto& m : members) out.push_back(induced_subgraph(g, m));
    return out;
}

inline bool is_forest(const Graph& g)
{
    return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

/// Ramification R_K(G) plus the natural homomorphism back onto G.
struct Ramified {
    Graph graph;
    std::vector<Vertex> to_original;
};

/// Splits every vertex of `k` into one copy per incident edge. Copies are
/// labelled "a_x"; kept vertices come first in their original order, then the
/// copies ordered by (a, x).
inline Ramified ramify(const Graph& g, const std::vector<Vertex>& k)
{
    std::vector<char> in_k(g.vertex_count(), 0);
    for (auto v : k) {
        if (v >= g.vertex_count())
            fail(ErrorCode::InvalidParameter, "ramification vertex " + std::to_string(v) + " out of range");
        in_k[v] = 1;
    }
    std::vector<Vertex> to_original;
    if (std::find(in_k.begin(), in_k.end(), 1) == in_k.end()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) to_original.push_back(v);
        return {g, std::move(to_original)};
    }

    std::vector<std::string> labels;
    std::vector<Vertex> kept(g.vertex_count(), UINT32_MAX);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_k[v]) continue;
        kept[v] = static_cast<Vertex>(to_original.size());
        to_original.push_back(v);
        labels.push_back(g.label(v));
    }
    // copy[(a, edge index)] -> new vertex
    std::vector<std::vector<std::pair<std::size_t, Vertex>>> copies(g.vertex_count());
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        if (!in_k[a]) continue;
        for (auto inc : g.incident(a)) {
            copies[a].emplace_back(inc.edge, static_cast<Vertex>(to_original.size()));
            to_original.push_back(a);
            labels.push_back(g.label(a) + "_" + g.label(inc.neighbor));
        }
    }
    auto endpoint = [&](Vertex v, std::size_t edge) {
        if (!in_k[v]) return kept[v];
        for (auto [e, id] : copies[v])
            if (e == edge) return id;
        return UINT32_MAX;
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        edges.emplace_back(endpoint(e.first, i), endpoint(e.second, i));
    }
    return {Graph(to_original.size(), std::move(edges), std::move(labels)), std::move(to_original)};
}

inline Graph ramification(const Graph& g, const std::vector<Vertex>& k)
{
    return ramify(g, k).graph;
}

/// T(G) together with the arrow correspondence e between T(G) and G.
struct Trimmed {
    Graph graph;
    /// e: vertex of T(G) -> vertex of G.
    std::vector<Vertex> to_original;
    /// Edge index in T(G) -> edge index in G.
    std::vector<std::size_t> edge_to_original;
    /// Edge index in G -> edge index in T(G); empty for leaf edges.
    std::vector<std::optional<std::size_t>> original_edge_to_trimmed;
};

/// Trimming: drop the leaves, then ramify the internal subgraph at the
/// internal vertices that were adjacent to leaves. Isolated vertices of the
/// input have nothing to attach to and are dropped as well, so the result
/// never has isolated vertices.
inline Trimmed trim(const Graph& g)
{
    std::vector<Vertex> interior;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 2) interior.push_back(v);
    auto inner = induced_subgraph(g, interior);

    std::vector<Vertex> k;
    for (Vertex local = 0; local < inner.graph.vertex_count(); ++local) {
        const Vertex v = inner.to_parent[local];
        for (auto inc : g.incident(v))
            if (g.is_leaf(inc.neighbor)) {
                k.push_back(local);
                break;
            }
    }
    auto r = ramify(inner.graph, k);

    Trimmed out;
    out.graph = std::move(r.graph);
    out.to_original.resize(out.graph.vertex_count());
    for (Vertex v = 0; v < out.graph.vertex_count(); ++v)
        out.to_original[v] = inner.to_parent[r.to_original[v]];
    out.original_edge_to_trimmed.assign(g.edge_count(), std::nullopt);
    for (std::size_t i = 0; i < out.graph.edge_count(); ++i) {
        auto e = out.graph.edge(i);
        auto orig = g.edge_index(out.to_original[e.first], out.to_original[e.second]);
        out.edge_to_original.push_back(*orig);
        out.original_edge_to_trimmed[*orig] = i;
    }
    return out;
}

inline Graph trimming(const Graph& g) { return trim(g).graph; }

/// A graph whose trimming is `h`: one pendant vertex x' per leaf x of h.
inline Graph inverse_trimming(const Graph& h)
{
    if (h.has_isolated_vertex())
        fail(ErrorCode::InvalidParameter, "inverse_trimming needs a graph without isolated vertices");
    auto edges = h.edge_pairs();
    std::vector<std::string> labels = h.labels();
    Vertex next = static_cast<Vertex>(h.vertex_count());
    for (auto x : leaves(h)) {
        edges.emplace_back(x, next++);
        if (h.has_labels()) labels.push_back(h.label(x) + "'");
    }
    return Graph(next, std::move(edges), std::move(labels));
}

namespace detail {

inline tree_code::Adjacency adjacency_of(const Graph& g)
{
    tree_code::Adjacency adj(g.vertex_count());
    for (auto e : g.edges()) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    return adj;
}

}  // namespace detail

/// Sorted multiset of per-component tree codes. Throws invalid-parameter on
/// graphs with a cycle.
inline std::vector<std::string> forest_code(const Graph& g)
{
    if (!is_forest(g)) fail(ErrorCode::InvalidParameter, "forest_code needs an acyclic graph");
    std::vector<std::string> codes;
    for (auto& c : connected_components(g)) {
        std::vector<std::uint8_t> labels(c.graph.vertex_count(), 0);
        codes.push_back(tree_code::canonical(detail::adjacency_of(c.graph), labels));
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

inline bool forests_isomorphic(const Graph& g, const Graph& h)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    return forest_code(g) == forest_code(h);
}

}  // namespace arrows
