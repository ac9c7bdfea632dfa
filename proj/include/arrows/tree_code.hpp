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

// AHU canonical codes for small vertex-labelled trees.
//
// A tree is given as adjacency lists over vertices 0..n-1 together with one
// small label per vertex. Two labelled trees receive the same code iff there
// is a label-preserving isomorphism between them. Codes are plain strings so
// they can be compared, sorted and used as hash keys directly.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace arrows::tree_code {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

namespace detail {

inline std::string rooted_code(const Adjacency& adj, const std::vector<std::uint8_t>& labels,
                               std::uint32_t root)
{
    const std::size_t n = adj.size();
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> parent(n, UINT32_MAX);
    order.reserve(n);
    order.push_back(root);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (auto w : adj[order[i]]) {
            if (parent[w] == UINT32_MAX) {
                parent[w] = order[i];
                order.push_back(w);
            }
        }
    }

    std::vector<std::string> code(n);
    std::vector<std::vector<std::string>> children(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = *it;
        auto& kids = children[v];
        std::sort(kids.begin(), kids.end());
        std::string c;
        c.push_back(static_cast<char>('a' + labels[v]));
        c.push_back('(');
        for (auto& k : kids) c += k;
        c.push_back(')');
        kids.clear();
        if (v != root) children[parent[v]].push_back(std::move(c));
        else code[v] = std::move(c);
    }
    return code[root];
}

}  // namespace detail

/// Centers of a tree (one or two vertices) by repeated leaf stripping.
inline std::vector<std::uint32_t> centers(const Adjacency& adj)
{
    const std::size_t n = adj.size();
    if (n == 0) return {};
    if (n == 1) return {0};
    std::vector<std::size_t> degree(n);
    std::vector<std::uint32_t> layer;
    for (std::uint32_t v = 0; v < n; ++v) {
        degree[v] = adj[v].size();
        if (degree[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<std::uint32_t> next;
        for (auto v : layer) {
            for (auto w : adj[v]) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

/// Canonical code of a connected labelled tree. Labels must be < 26.
inline std::string canonical(const Adjacency& adj, const std::vector<std::uint8_t>& labels)
{
    std::string best;
    bool first = true;
    for (auto c : centers(adj)) {
        auto code = detail::rooted_code(adj, labels, c);
        if (first || code < best) {
            best = std::move(code);
            first = false;
        }
    }
    return best;
}

}  // namespace arrows::tree_code
