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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "arrows/arrows.hpp"

using namespace arrows;

namespace {

// Same state on a randomly relabelled copy of its graph.
State relabel(const State& x, std::mt19937_64& rng)
{
    const auto n = x.graph().vertex_count();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto e : x.graph().edges()) edges.emplace_back(perm[e.first], perm[e.second]);
    std::vector<Arrow> arrows;
    for (auto a : x.arrows()) arrows.push_back({perm[a.tail], perm[a.head]});
    return State(share(Graph(n, edges)), arrows);
}

std::set<Arrow> reduced_moves(const State& x)
{
    std::set<Arrow> out;
    for (const auto& c : reduce(x))
        for (auto mv : legal_moves(c)) {
            const auto e = c.edges[mv.edge];
            const Vertex p = c.vertex_origin[e[mv.forward ? 0 : 1]];
            const Vertex q = c.vertex_origin[e[mv.forward ? 1 : 0]];
            out.insert({p, q});
        }
    return out;
}

}  // namespace

TEST(MexTest, Basics)
{
    EXPECT_EQ(mex({}), 0u);
    EXPECT_EQ(mex({0, 1, 2, 4}), 3u);
    EXPECT_EQ(mex({1, 2, 3}), 0u);
    EXPECT_EQ(mex(std::vector<Grundy>{2, 0, 0, 1}), 3u);
}

TEST(NimSumTest, Basics)
{
    EXPECT_EQ(nim_sum(3, 5), 6u);
    for (Grundy v : {0u, 1u, 7u, 1000u}) EXPECT_EQ(nim_sum(v, v), 0u);
    const auto t2 = grundy_naive(twig_state(2)), t1 = grundy_naive(twig_state(1));
    EXPECT_EQ(nim_sum(t2, t1), 3u);
    EXPECT_EQ(grundy_naive(disjoint_union(twig_state(2), twig_state(1))), 3u);
}

TEST(ReduceTest, RodIsOneDoublyWatchedComponent)
{
    auto parts = reduce(rod_state(3));
    ASSERT_EQ(parts.size(), 1u);
    const auto& r = parts[0];
    EXPECT_EQ(r.vertex_count(), 4u);
    EXPECT_EQ(r.edge_count(), 3u);
    for (std::size_t v = 0; v < r.vertex_count(); ++v) {
        const bool internal = r.vertex_origin[v] == 1 || r.vertex_origin[v] == 2;
        EXPECT_EQ(r.sink_watch(v), internal);
        EXPECT_EQ(r.source_watch(v), internal);
    }
}

TEST(ReduceTest, OutwardSpiderEndsHaveSinkWatchOnly)
{
    for (unsigned a = 1; a <= 3; ++a) {
        auto x = spider_state(hat(a), hat(a + 1), hat(2));
        const auto shape = spider_shape({{hat(a), hat(a + 1), hat(2)}});
        auto parts = reduce(x);
        ASSERT_EQ(parts.size(), 1u);
        const auto& r = parts[0];
        const std::set<Vertex> ends = {spider_vertex(shape, LegU, a), spider_vertex(shape, LegV, a + 1),
                                       spider_vertex(shape, LegW, 2)};
        std::size_t seen = 0;
        for (std::size_t v = 0; v < r.vertex_count(); ++v) {
            if (!ends.count(r.vertex_origin[v])) continue;
            ++seen;
            EXPECT_FALSE(r.sink_watch(v));
            EXPECT_TRUE(r.source_watch(v));
        }
        EXPECT_EQ(seen, 3u);
        EXPECT_EQ(reduced_moves(x), [&] {
            auto m = legal_moves(x);
            return std::set<Arrow>(m.begin(), m.end());
        }());
    }
}

TEST(ReduceTest, ComponentsFollowUnmarkedSubgraph)
{
    auto x = spider_state(check(2), hat(0), bare(3));
    auto g = share(spider_graph({3, 1, 3}));
    State y(g, {{1, 2}});  // cuts the outer end of the u-leg off
    auto parts = reduce(y);
    auto comps = connected_components(unmarked_subgraph(y).graph);
    EXPECT_EQ(comps.size(), 2u);
    EXPECT_EQ(parts.size(), comps.size());
    EXPECT_EQ(reduce(x).size(), 1u);
}

TEST(ReduceTest, MovesMatchStateMovesExhaustively)
{
    for (const auto& ng : game_corpus(10)) {
        auto g = share(ng.graph);
        for_each_state(g, RuleSet::Trimmed, [&](const State& x) {
            const auto m = legal_moves(x);
            ASSERT_EQ(reduced_moves(x), std::set<Arrow>(m.begin(), m.end())) << ng.name;
        });
    }
}

TEST(CanonicalKeyTest, FlowMatchesItsFlip)
{
    for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(state_key(flow_state(n)), state_key(flip(flow_state(n))));
}

TEST(CanonicalKeyTest, CrashSpiderMatchesCrash)
{
    for (unsigned n = 1; n <= 8; ++n)
        EXPECT_EQ(state_key(spider_state(check(0), check(0), check(n))), state_key(crash_state(n))) << n;
}

TEST(CanonicalKeyTest, InvariantUnderRelabelling)
{
    std::mt19937_64 rng(11);
    Engine e;
    for (const auto& ng : game_corpus(12)) {
        auto g = share(ng.graph);
        for (int k = 0; k < 20; ++k) {
            const auto x = random_state(g, rng);
            const auto y = relabel(x, rng);
            if (is_forest(ng.graph)) {
                EXPECT_EQ(state_key(x), state_key(y)) << ng.name;
            }
            EXPECT_EQ(e.grundy(x), e.grundy(y)) << ng.name;
        }
    }
}

TEST(CanonicalKeyTest, DistinguishesDifferentValues)
{
    EXPECT_NE(state_key(twig_state(3)), state_key(twig_state(4)));
    EXPECT_NE(state_key(flow_state(2)), state_key(crash_state(2)));
}

TEST(EngineTest, PublishedValues)
{
    Engine e;
    EXPECT_EQ(e.grundy(empty_state(spider_graph({2, 2, 2}))), 0u);
    EXPECT_EQ(e.grundy(spider_state(hat(2), hat(3), hat(4))), 5u);
    EXPECT_EQ(e.grundy(twig_state(5)), 5u);
    EXPECT_EQ(e.grundy(flow_state(0)), 0u);
    EXPECT_EQ(e.grundy(empty_state(Graph())), 0u);
}

TEST(EngineTest, FreeFunctionSharesCache)
{
    GrundyCache cache;
    EXPECT_EQ(grundy(twig_state(4), cache), 4u);
    EXPECT_GT(cache.size(), 0u);
    const auto before = cache.size();
    EXPECT_EQ(grundy(twig_state(4), cache), 4u);
    EXPECT_EQ(cache.size(), before);
    EXPECT_GT(cache.hits(), 0u);
}

TEST(EngineTest, ResourceLimit)
{
    Engine small(std::make_shared<GrundyCache>(), 5);
    EXPECT_EQ(small.grundy(rod_state(5)), 1u);
    try {
        small.grundy(rod_state(6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
    }
    try {
        grundy_naive(rod_state(15));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
    }
}

TEST(EngineTest, EnvironmentOverridesBound)
{
    ::setenv("ARROWS_MAX_EDGES", "7", 1);
    EXPECT_EQ(default_max_edges(), 7u);
    Engine e;
    EXPECT_EQ(e.max_edges(), 7u);
    ::setenv("ARROWS_MAX_EDGES", "junk", 1);
    EXPECT_EQ(default_max_edges(), 24u);
    ::unsetenv("ARROWS_MAX_EDGES");
    EXPECT_EQ(default_max_edges(), 24u);
}

TEST(EngineTest, StatsCountExpansions)
{
    Engine e;
    e.grundy(empty_state(spider_graph({3, 3, 3})));
    const auto s = e.stats();
    EXPECT_GT(s.nodes_expanded, 0u);
    EXPECT_GT(s.cache_entries, 0u);
    e.grundy(empty_state(spider_graph({3, 3, 3})));
    EXPECT_EQ(e.stats().nodes_expanded, s.nodes_expanded);
}

TEST(EngineTest, ConcurrentEvaluationAgrees)
{
    auto cache = std::make_shared<GrundyCache>();
    Engine shared(cache);
    std::vector<std::thread> pool;
    std::vector<Grundy> values(8);
    for (unsigned t = 0; t < 8; ++t)
        pool.emplace_back([&, t] { values[t] = shared.grundy(empty_state(spider_graph({2 + t % 3, 3, 4}))); });
    for (auto& th : pool) th.join();
    Engine fresh;
    for (unsigned t = 0; t < 8; ++t) EXPECT_EQ(values[t], fresh.grundy(empty_state(spider_graph({2 + t % 3, 3, 4}))));
}

TEST(CacheTest, RejectsRemapping)
{
    GrundyCache c;
    c.insert("k", 3);
    c.insert("k", 3);
    EXPECT_THROW(c.insert("k", 4), std::logic_error);
    EXPECT_EQ(c.find("k"), 3u);
    EXPECT_FALSE(c.find("other"));
    EXPECT_EQ(c.hits(), 1u);
    EXPECT_EQ(c.misses(), 1u);
    c.clear();
    EXPECT_EQ(c.size(), 0u);
}

TEST(NaiveTest, PublishedValues)
{
    EXPECT_EQ(grundy_naive(crash_state(4)), 1u);
    EXPECT_EQ(grundy_naive(rod_state(4)), 0u);
    EXPECT_EQ(grundy_naive(empty_state(spider_graph({1, 1, 1}))), 1u);
}

TEST(NaiveTest, RejectsForeignStates)
{
    NaiveSolver solver(share(path_graph(4)), RuleSet::Trimmed);
    EXPECT_THROW(solver.grundy(rod_state(4)), Error);
    NaiveSolver dormant(share(path_graph(4)), RuleSet::Arrows);
    EXPECT_THROW(dormant.grundy(twig_state(2)), Error);
}

TEST(DormantTest, Values)
{
    EXPECT_EQ(grundy_dormant(empty_state(path_graph(3))), 0u);
    EXPECT_EQ(grundy_dormant(empty_state(spider_graph({3, 3, 3}))), 0u);
    Engine e;
    EXPECT_EQ(e.grundy(empty_state(spider_graph({2, 2, 2}))), 0u);
}

TEST(DormantTest, TrimmingEquivalenceOnCorpus)
{
    Engine e;
    std::size_t trees = 0;
    for (const auto& ng : game_corpus(10)) {
        if (!is_forest(ng.graph)) continue;
        ++trees;
        EXPECT_EQ(grundy_dormant(empty_state(ng.graph)), e.grundy(empty_state(trimming(ng.graph)))) << ng.name;
        auto game = make_trimmed_game(share(ng.graph));
        EXPECT_EQ(e.grundy(game, State(game.original)), e.grundy(State(game.trimmed))) << ng.name;
    }
    EXPECT_GT(trees, 100u);
}

TEST(WinnerTest, PublishedWinners)
{
    Engine e;
    EXPECT_EQ(e.winner(spider_graph({3, 5, 7}), RuleSet::Arrows), Player::PlayerTwo);
    EXPECT_EQ(e.winner(path_graph(5), RuleSet::Arrows), Player::PlayerTwo);
    EXPECT_EQ(e.winner(path_graph(4), RuleSet::Arrows), Player::PlayerOne);
    EXPECT_EQ(e.winner(spider_graph({2, 2, 2}), RuleSet::Trimmed), Player::PlayerTwo);
    EXPECT_EQ(e.winner(path_graph(2), RuleSet::Trimmed), Player::PlayerOne);
    EXPECT_THROW(e.winner(path_graph(1), RuleSet::Arrows), Error);
}

TEST(BestMoveTest, WinningMovesReachZero)
{
    Engine e;
    std::mt19937_64 rng(5);
    std::size_t winning = 0;
    for (const auto& ng : game_corpus(10)) {
        auto g = share(ng.graph);
        for (int k = 0; k < 10; ++k) {
            const auto x = random_state(g, rng);
            const auto mv = e.best_move(x);
            ASSERT_EQ(mv.has_value(), !is_terminal(x));
            if (!mv) continue;
            const auto after = e.grundy(apply_move(x, *mv));
            if (e.grundy(x) != 0) {
                ++winning;
                ASSERT_EQ(after, 0u) << ng.name;
            }
        }
    }
    EXPECT_GT(winning, 100u);
}

TEST(BestMoveTest, LosingPolicyMaximizesThenTakesFirst)
{
    Engine e;
    auto x = empty_state(spider_graph({2, 2, 2}));
    ASSERT_EQ(e.grundy(x), 0u);
    const auto mv = e.best_move(x);
    ASSERT_TRUE(mv);
    Grundy best = 0;
    std::optional<Arrow> first;
    for (auto a : legal_moves(x)) {
        const auto v = e.grundy(apply_move(x, a));
        if (!first || v > best) {
            best = v;
            first = a;
        }
    }
    EXPECT_EQ(*mv, *first);
    EXPECT_FALSE(e.best_move(twig_state(0)));
}

TEST(BestMoveTest, SmallSpiderConsistency)
{
    Engine e;
    auto x = empty_state(spider_graph({2, 3, 4}));
    const auto mv = e.best_move(x);
    ASSERT_TRUE(mv);
    EXPECT_EQ(e.grundy(apply_move(x, *mv)) == 0, e.grundy(x) != 0);
}

TEST(BestMoveTest, ArrowsModeUsesOriginalGraph)
{
    Engine e;
    auto g = share(spider_graph({3, 3, 3}));
    auto game = make_trimmed_game(g);
    State x(g);
    while (auto mv = e.best_move(game, x)) {
        ASSERT_EQ(x.move_status(*mv, RuleSet::Arrows), MoveStatus::Legal);
        x.play(*mv, RuleSet::Arrows);
    }
    EXPECT_TRUE(dormant_legal_moves(x).empty());
}

TEST(ParityTest, PublishedClasses)
{
    for (unsigned n = 0; n <= 8; ++n) {
        const auto want = n % 2 ? ParityClass::Odd : ParityClass::Even;
        EXPECT_EQ(parity_moves_class(flow_state(n)), want) << n;
        EXPECT_EQ(parity_moves_class(crash_state(n + 1)), want) << n;
    }
    for (unsigned n = 0; n <= 6; ++n)
        EXPECT_EQ(parity_moves_class(spider_state(check(1), check(1), check(n))),
                  (n + 1) % 2 ? ParityClass::Odd : ParityClass::Even)
            << n;
    EXPECT_EQ(parity_moves_class(empty_state(spider_graph({1, 1, 1}))), ParityClass::Odd);
    EXPECT_EQ(parity_moves_class(twig_state(0)), ParityClass::Even);
    EXPECT_EQ(parity_moves_class(twig_state(2)), ParityClass::Mixed);
}
