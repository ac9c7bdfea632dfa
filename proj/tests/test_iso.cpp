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

#include <map>

#include "arrows/arrows.hpp"

using namespace arrows;

namespace {

ArrowMap edge_map(const std::vector<std::pair<Arrow, Arrow>>& edges)
{
    ArrowMap m;
    for (auto [from, to] : edges) {
        m[from] = to;
        m[from.flipped()] = to.flipped();
    }
    return m;
}

VertexMap identity_on_unmarked(const Decoration& x)
{
    VertexMap f;
    for (auto v : unmarked_subgraph(x).to_parent) f[v] = v;
    return f;
}

ArrowMap identity_arrows(const Decoration& x)
{
    return induced_arrow_map(identity_on_unmarked(x), x, x);
}

}  // namespace

TEST(LocalCriterionTest, SplitVertexIsomorphism)
{
    // X: top-s-t1-u-bottom with top->s and u->bottom, plus t2-v-w with two
    // leaves at w oriented through w.
    auto g = share(Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {8, 7}, {7, 9}}));
    State x(g, {{0, 1}, {3, 4}, {8, 7}, {7, 9}});
    // Y: s with two inward leaves, s-t-u-q with u->q, and t-v-w.
    auto h = share(Graph(8, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {0, 5}, {1, 6}, {6, 7}}));
    State y(h, {{4, 0}, {5, 0}, {2, 3}});
    // t1 and t2 both go to t
    VertexMap f{{1, 0}, {2, 1}, {3, 2}, {5, 1}, {6, 6}, {7, 7}};
    const auto a = induced_arrow_map(f, x, y);
    EXPECT_EQ(a.size(), 8u);
    EXPECT_TRUE(check_iso_local(a, x, y));
    EXPECT_EQ(grundy_naive(x), grundy_naive(y));
}

TEST(LocalCriterionTest, IdentifyingPathEndsIsNotAnIsomorphism)
{
    // X: L-u-v1 with L->u, and v2-w-R with R->w
    auto g = share(Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}));
    State x(g, {{0, 1}, {5, 4}});
    // Y: L-u-v-w-R with L->u and R->w
    auto h = share(path_graph(5));
    State y(h, {{0, 1}, {4, 3}});
    const auto a = edge_map({{{1, 2}, {1, 2}}, {{3, 4}, {2, 3}}});
    EXPECT_FALSE(check_iso_local(a, x, y));
    EXPECT_NE(grundy_naive(x), grundy_naive(y));
}

TEST(LocalCriterionTest, IdentityIsAlwaysAnIsomorphism)
{
    for (const auto& ng : game_corpus(5)) {
        auto g = share(ng.graph);
        for_each_state(g, RuleSet::Trimmed, [&](const State& x) {
            if (x.unmarked_count() == 0) return;
            ASSERT_TRUE(check_iso_local(identity_arrows(x), x, x)) << ng.name;
            ASSERT_TRUE(check_iso_sufficient(identity_on_unmarked(x), x, x)) << ng.name;
        });
    }
}

TEST(LocalCriterionTest, RejectsMapsThatDoNotCommuteWithFlip)
{
    auto x = rod_state(2);
    ArrowMap bad{{{0, 1}, {0, 1}}, {{1, 0}, {1, 0}}, {{1, 2}, {1, 2}}, {{2, 1}, {1, 2}}};
    EXPECT_THROW(check_iso_local(bad, x, x), Error);
    ArrowMap partial{{{0, 1}, {0, 1}}, {{1, 0}, {1, 0}}};
    EXPECT_THROW(check_iso_local(partial, x, x), Error);
}

TEST(SufficientConditionTest, HeadsAndTailsWithLeaves)
{
    // X on G: u-v-w with two leaves at w, both oriented into w
    auto g = share(Graph(5, {{0, 1}, {1, 2}, {3, 2}, {4, 2}}));
    State x(g, {{3, 2}, {4, 2}});
    // Y on H: u-v-w-r with p->u, u->q and r->w
    auto h = share(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {0, 5}}));
    State y(h, {{4, 0}, {0, 5}, {3, 2}});
    VertexMap f{{0, 0}, {1, 1}, {2, 2}};
    EXPECT_TRUE(check_iso_sufficient(f, x, y));
    EXPECT_TRUE(check_iso_local(induced_arrow_map(f, x, y), x, y));
    EXPECT_EQ(grundy_naive(x), grundy_naive(y));
}

TEST(SufficientConditionTest, NotNecessary)
{
    // X: l-u-v-w-r with l->u, r->w and a leaf d->v
    auto g = share(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 2}}));
    State x(g, {{0, 1}, {4, 3}, {5, 2}});
    // Y: l-u-v-w-r with l->u, r->w
    auto h = share(path_graph(5));
    State y(h, {{0, 1}, {4, 3}});
    VertexMap f{{1, 1}, {2, 2}, {3, 3}};
    EXPECT_FALSE(check_iso_sufficient(f, x, y));
    EXPECT_TRUE(check_iso_local(induced_arrow_map(f, x, y), x, y));
    EXPECT_EQ(grundy_naive(x), grundy_naive(y));
}

TEST(SufficientConditionTest, RejectsNonIsomorphisms)
{
    auto x = rod_state(2);
    auto y = rod_state(3);
    EXPECT_THROW(check_iso_sufficient(VertexMap{{0, 0}, {1, 1}, {2, 2}}, x, y), Error);
    EXPECT_THROW(check_iso_sufficient(VertexMap{{0, 0}, {1, 1}, {2, 1}}, x, x), Error);
}

TEST(SufficientConditionTest, ImpliesLocalCriterion)
{
    std::size_t sufficient_pairs = 0, local_only_pairs = 0;
    for (const auto& ng : game_corpus(6)) {
        auto g = share(ng.graph);
        std::map<std::vector<bool>, std::vector<State>> by_unmarked;
        for_each_state(g, RuleSet::Trimmed, [&](const State& x) {
            std::vector<bool> mask;
            for (std::size_t i = 0; i < g->edge_count(); ++i) mask.push_back(x.is_marked(i));
            if (x.unmarked_count() > 0) by_unmarked[mask].push_back(x);
        });
        for (const auto& [mask, group] : by_unmarked)
            for (const auto& x : group)
                for (const auto& y : group) {
                    const auto f = identity_on_unmarked(x);
                    const bool sufficient = check_iso_sufficient(f, x, y);
                    const bool local = check_iso_local(induced_arrow_map(f, x, y), x, y);
                    if (sufficient) {
                        ++sufficient_pairs;
                        ASSERT_TRUE(local) << ng.name;
                    } else if (local) {
                        ++local_only_pairs;
                    }
                }
    }
    EXPECT_GT(sufficient_pairs, 1000u);
    EXPECT_GT(local_only_pairs, 0u);
}

TEST(SufficientConditionTest, LocalIsomorphismPreservesValue)
{
    // Whenever the local criterion accepts the identity between two states
    // with the same unmarked edges, their values agree.
    for (const auto& ng : game_corpus(6)) {
        auto g = share(ng.graph);
        NaiveSolver naive(g, RuleSet::Trimmed);
        std::map<std::vector<bool>, std::vector<State>> by_unmarked;
        for_each_state(g, RuleSet::Trimmed, [&](const State& x) {
            std::vector<bool> mask;
            for (std::size_t i = 0; i < g->edge_count(); ++i) mask.push_back(x.is_marked(i));
            if (x.unmarked_count() > 0) by_unmarked[mask].push_back(x);
        });
        for (const auto& [mask, group] : by_unmarked)
            for (const auto& x : group)
                for (const auto& y : group)
                    if (check_iso_local(identity_arrows(x), x, y)) {
                        ASSERT_EQ(naive.grundy(x), naive.grundy(y)) << ng.name;
                    }
    }
}
