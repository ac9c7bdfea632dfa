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

// Bracket notation for spider states and the canonical path states.
//
// A spider state S[x, y, z] names, per leg, the number of unmarked edges and
// an optional mark on the edge just past them: Outward (the hat accent, arrow
// pointing away from the hub) or Inward (the check accent). Leg-local
// coordinates put the hub at index 0 on every leg.

#include <array>
#include <string>
#include <vector>

#include "graph.hpp"
#include "state.hpp"

namespace arrows {

enum class Mark { None, Outward, Inward };

inline Mark opposite(Mark m)
{
    return m == Mark::Outward ? Mark::Inward : m == Mark::Inward ? Mark::Outward : Mark::None;
}

struct LegSpec {
    unsigned unmarked = 0;
    Mark mark = Mark::None;

    unsigned length() const { return unmarked + (mark == Mark::None ? 0 : 1); }
};

struct SpiderStateSpec {
    std::array<LegSpec, 3> legs;
};

enum Leg : int { LegU = 0, LegV = 1, LegW = 2 };

inline SpiderSpec spider_shape(const SpiderStateSpec& s)
{
    return {s.legs[0].length(), s.legs[1].length(), s.legs[2].length()};
}

/// Outward at index i is (i-1 -> i) on the leg; Inward is (i -> i-1).
inline Arrow leg_arrow(const SpiderSpec& shape, int leg, unsigned index, Mark direction)
{
    const unsigned len[3] = {shape.a, shape.b, shape.c};
    if (leg < 0 || leg > 2) fail(ErrorCode::InvalidParameter, "leg must be 0, 1 or 2");
    if (index < 1 || index > len[leg])
        fail(ErrorCode::InvalidParameter, "leg index " + std::to_string(index) + " out of range");
    if (direction == Mark::None) fail(ErrorCode::InvalidParameter, "arrow needs a direction");
    const Vertex inner = spider_vertex(shape, leg, index - 1);
    const Vertex outer = spider_vertex(shape, leg, index);
    return direction == Mark::Outward ? Arrow{inner, outer} : Arrow{outer, inner};
}

/// Throws invalid-state when the marks create an internal sink or source
/// (for example all three legs of S(1,1,1) marked outward).
inline State spider_state(const SpiderStateSpec& s)
{
    const auto shape = spider_shape(s);
    auto g = share(spider_graph(shape));
    std::vector<Arrow> arrows;
    for (int leg = 0; leg < 3; ++leg) {
        const auto& l = s.legs[leg];
        if (l.mark != Mark::None) arrows.push_back(leg_arrow(shape, leg, l.unmarked + 1, l.mark));
    }
    return State(g, arrows);
}

inline State spider_state(LegSpec u, LegSpec v, LegSpec w)
{
    return spider_state(SpiderStateSpec{{u, v, w}});
}

struct LegArrow {
    int leg;
    unsigned index;
    Mark direction;
};

/// S[...] plus further arrows, as in the parenthesized descendent notation.
/// Throws occupied or illegal-move on a bad arrow.
inline State spider_descendent(const SpiderStateSpec& base, const std::vector<LegArrow>& extra)
{
    const auto shape = spider_shape(base);
    State y = spider_state(base);
    for (const auto& e : extra) y.play(leg_arrow(shape, e.leg, e.index, e.direction));
    return y;
}

// Short constructors for the leg notation: hat(n), check(n), bare(n).
inline LegSpec hat(unsigned n) { return {n, Mark::Outward}; }
inline LegSpec check(unsigned n) { return {n, Mark::Inward}; }
inline LegSpec bare(unsigned n) { return {n, Mark::None}; }
inline LegSpec marked(unsigned n, Mark m) { return {n, m}; }

/// F_n on the path -1..n+1 (stored shifted by one): arrows (-1,0), (n,n+1).
inline State flow_state(unsigned n)
{
    auto g = share(path_graph(n + 3));
    return State(g, {{0, 1}, {n + 1, n + 2}});
}

/// C_n, n >= 1: arrows (-1,0), (n+1,n).
inline State crash_state(unsigned n)
{
    if (n == 0) fail(ErrorCode::InvalidParameter, "C_0 is not a state");
    auto g = share(path_graph(n + 3));
    return State(g, {{0, 1}, {n + 2, n + 1}});
}

/// T_n on P_{n+2}: arrow (n, n+1).
inline State twig_state(unsigned n)
{
    auto g = share(path_graph(n + 2));
    return State(g, {{n, n + 1}});
}

/// R_n, n >= 1: the empty state of P_{n+1}.
inline State rod_state(unsigned n)
{
    if (n == 0) fail(ErrorCode::InvalidParameter, "R_0 needs n >= 1");
    return empty_state(path_graph(n + 1));
}

}  // namespace arrows
