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

// Line-oriented text formats.
//
//   # comment               anywhere; runs to end of line
//   v <n>                   vertex count, followed by
//   e <u> <w>               one line per edge
//   path <n>                shorthand for P_n
//   spider <a> <b> <c>      shorthand for S(a,b,c)
//   a <tail> <head>         one arrow
//   sstate <mu> <mv> <mw> / <ku> <kv> <kw>
//                           spider state: unmarked leg lengths, then leg
//                           marks from {-, out, in}
//
// A graph file holds one graph description. A state file holds arrow lines
// and/or one sstate line; a position file may hold both.

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "spider.hpp"
#include "state.hpp"

namespace arrows {

struct ParsedPosition {
    Graph graph;
    std::vector<Arrow> arrows;
    bool has_graph = false;
};

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what)
{
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

inline std::vector<std::string> tokenize(std::string_view line)
{
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

inline unsigned parse_uint(const std::string& s, std::size_t line, const char* what)
{
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        parse_fail(line, std::string("expected a nonnegative integer for ") + what + ", got '" + s + "'");
    return v;
}

inline Mark parse_mark(const std::string& s, std::size_t line)
{
    if (s == "-") return Mark::None;
    if (s == "out") return Mark::Outward;
    if (s == "in") return Mark::Inward;
    parse_fail(line, "leg mark must be -, out or in, got '" + s + "'");
}

}  // namespace detail

/// Parses graph, arrow and sstate lines. Arrows are validated against the
/// graph only by the State constructor, not here.
inline ParsedPosition parse_position(std::string_view text)
{
    ParsedPosition out;
    std::optional<std::size_t> declared;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::size_t> edge_lines;
    std::size_t line_no = 0;

    auto claim_graph = [&](std::size_t line) {
        if (out.has_graph || declared) detail::parse_fail(line, "graph already described");
    };

    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        const auto tok = detail::tokenize(raw);
        if (tok.empty()) continue;
        const auto& kw = tok[0];
        auto need = [&](std::size_t n) {
            if (tok.size() != n)
                detail::parse_fail(line_no, "'" + kw + "' takes " + std::to_string(n - 1) + " argument(s)");
        };
        if (kw == "v") {
            need(2);
            claim_graph(line_no);
            declared = detail::parse_uint(tok[1], line_no, "vertex count");
        } else if (kw == "e") {
            need(3);
            if (!declared) detail::parse_fail(line_no, "edge before 'v' line");
            edges.emplace_back(detail::parse_uint(tok[1], line_no, "vertex"),
                               detail::parse_uint(tok[2], line_no, "vertex"));
            edge_lines.push_back(line_no);
        } else if (kw == "path") {
            need(2);
            claim_graph(line_no);
            const auto n = detail::parse_uint(tok[1], line_no, "path length");
            if (n == 0) detail::parse_fail(line_no, "path needs n >= 1");
            out.graph = path_graph(n);
            out.has_graph = true;
        } else if (kw == "spider") {
            need(4);
            claim_graph(line_no);
            SpiderSpec s{detail::parse_uint(tok[1], line_no, "leg"), detail::parse_uint(tok[2], line_no, "leg"),
                         detail::parse_uint(tok[3], line_no, "leg")};
            if (s.a + s.b + s.c == 0) detail::parse_fail(line_no, "spider needs a nonzero leg");
            out.graph = spider_graph(s);
            out.has_graph = true;
        } else if (kw == "a") {
            need(3);
            out.arrows.push_back(
                {detail::parse_uint(tok[1], line_no, "tail"), detail::parse_uint(tok[2], line_no, "head")});
        } else if (kw == "sstate") {
            need(8);
            if (tok[4] != "/") detail::parse_fail(line_no, "expected '/' between lengths and marks");
            SpiderStateSpec spec;
            for (int i = 0; i < 3; ++i)
                spec.legs[i] = {detail::parse_uint(tok[1 + i], line_no, "leg length"),
                                detail::parse_mark(tok[5 + i], line_no)};
            const auto shape = spider_shape(spec);
            if (shape.a + shape.b + shape.c == 0) detail::parse_fail(line_no, "spider needs a nonzero leg");
            const auto g = spider_graph(shape);
            if (out.has_graph || declared) {
                if (declared || !(out.graph == g)) detail::parse_fail(line_no, "sstate does not match the graph");
            } else {
                out.graph = g;
                out.has_graph = true;
            }
            for (int leg = 0; leg < 3; ++leg)
                if (spec.legs[leg].mark != Mark::None)
                    out.arrows.push_back(leg_arrow(shape, leg, spec.legs[leg].unmarked + 1, spec.legs[leg].mark));
        } else {
            detail::parse_fail(line_no, "unknown directive '" + kw + "'");
        }
    }
    if (declared) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, w] = edges[i];
            if (u >= *declared || w >= *declared)
                detail::parse_fail(edge_lines[i], "edge endpoint out of range");
            if (u == w) detail::parse_fail(edge_lines[i], "self-loop");
            for (std::size_t j = 0; j < i; ++j)
                if (std::minmax(u, w) == std::minmax(edges[j].first, edges[j].second))
                    detail::parse_fail(edge_lines[i], "duplicate edge");
        }
        out.graph = Graph(*declared, edges);
        out.has_graph = true;
    }
    return out;
}

/// Graph description only; arrow lines are an error here.
inline Graph parse_graph(std::string_view text)
{
    auto p = parse_position(text);
    if (!p.has_graph) throw Error(ErrorCode::Parse, "line 1: no graph description");
    if (!p.arrows.empty()) throw Error(ErrorCode::Parse, "graph file contains arrows");
    return std::move(p.graph);
}

/// Arrow lines (and optionally an sstate line) for a known graph.
inline State parse_state(std::string_view text, GraphPtr g)
{
    auto p = parse_position(text);
    if (p.has_graph && !(p.graph == *g)) throw Error(ErrorCode::Parse, "state describes a different graph");
    for (const auto& a : p.arrows)
        if (a.tail >= g->vertex_count() || a.head >= g->vertex_count() || !g->edge_index(a.tail, a.head))
            throw Error(ErrorCode::InvalidState, "arrow " + to_string(a) + " is not on an edge");
    return State(std::move(g), p.arrows);
}

inline std::string serialize_graph(const Graph& g)
{
    std::string s = "v " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& e : g.edges()) s += "e " + std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
    return s;
}

/// Long-form graph followed by arrows in edge-index order.
inline std::string serialize_state(const Decoration& x)
{
    std::string s = serialize_graph(x.graph());
    for (const auto& a : x.arrows()) s += "a " + std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return s;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidParameter, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace arrows
