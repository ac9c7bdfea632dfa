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

#include <string>

#include "arrows/arrows.hpp"

using namespace arrows;

namespace {

std::string parse_error(std::string_view text)
{
    try {
        parse_graph(text);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        return e.what();
    }
    return "no error";
}

}  // namespace

TEST(GraphIoTest, LongForm)
{
    auto g = parse_graph("# triangle with a tail\nv 4\ne 0 1\ne 1 2 # inline comment\ne 2 0\n\ne 2 3\n");
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_TRUE(g.edge_index(0, 2));
}

TEST(GraphIoTest, Shorthands)
{
    EXPECT_EQ(parse_graph("path 5"), path_graph(5));
    EXPECT_EQ(parse_graph("spider 2 3 4\n"), spider_graph({2, 3, 4}));
}

TEST(GraphIoTest, SerializeIsSortedLongForm)
{
    Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
    EXPECT_EQ(serialize_graph(g), "v 4\ne 0 1\ne 0 2\ne 2 3\n");
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
    EXPECT_EQ(serialize_graph(spider_graph({1, 1, 1})), "v 4\ne 0 1\ne 0 2\ne 0 3\n");
}

TEST(GraphIoTest, RoundTripOnCorpus)
{
    for (const auto& ng : corpus_graphs()) EXPECT_EQ(parse_graph(serialize_graph(ng.graph)), ng.graph) << ng.name;
}

TEST(GraphIoTest, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(parse_error("v 3\ne 0 1\ne 1 3\n"), "line 3: edge endpoint out of range");
    EXPECT_EQ(parse_error("v 3\ne 0 1\ne 1 1\n"), "line 3: self-loop");
    EXPECT_EQ(parse_error("v 3\ne 0 1\n# note\ne 1 0\n"), "line 4: duplicate edge");
    EXPECT_EQ(parse_error("e 0 1\n"), "line 1: edge before 'v' line");
    EXPECT_EQ(parse_error("\n\nbogus 1\n"), "line 3: unknown directive 'bogus'");
    EXPECT_EQ(parse_error("path 3\nspider 1 1 1\n"), "line 2: graph already described");
    EXPECT_EQ(parse_error("path 0\n"), "line 1: path needs n >= 1");
    EXPECT_EQ(parse_error("spider 0 0 0\n"), "line 1: spider needs a nonzero leg");
    EXPECT_EQ(parse_error("v x\n"), "line 1: expected a nonnegative integer for vertex count, got 'x'");
    EXPECT_EQ(parse_error("v 2 3\n"), "line 1: 'v' takes 1 argument(s)");
    EXPECT_EQ(parse_error("# nothing\n"), "line 1: no graph description");
}

TEST(GraphIoTest, GraphFileRejectsArrows)
{
    EXPECT_THROW(parse_graph("path 3\na 0 1\n"), Error);
}

TEST(StateIoTest, ArrowLines)
{
    auto g = share(path_graph(4));
    auto x = parse_state("a 0 1\na 3 2\n", g);
    EXPECT_EQ(x.arrows().size(), 2u);
    EXPECT_TRUE(x.contains({0, 1}));
    EXPECT_TRUE(x.contains({3, 2}));
    EXPECT_EQ(serialize_state(x), "v 4\ne 0 1\ne 1 2\ne 2 3\na 0 1\na 3 2\n");
}

TEST(StateIoTest, SpiderShorthandMatchesConstructor)
{
    auto text = "sstate 2 2 3 / - in out\n";
    auto pos = parse_position(text);
    ASSERT_TRUE(pos.has_graph);
    const auto y = spider_state(bare(2), check(2), hat(3));
    EXPECT_EQ(pos.graph, y.graph());
    auto x = parse_state(text, y.graph_ptr());
    EXPECT_EQ(x.code(), y.code());
}

TEST(StateIoTest, InvalidStates)
{
    auto g = share(spider_graph({1, 1, 1}));
    try {
        parse_state("a 1 0\na 2 0\na 3 0\n", g);
        FAIL() << "expected invalid-state";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidState);
    }
    try {
        parse_state("a 1 2\n", g);
        FAIL() << "expected invalid-state";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidState);
    }
    EXPECT_THROW(parse_state("path 3\n", g), Error);
    EXPECT_THROW(parse_state("sstate 1 1 1 / in in zz\n", g), Error);
}
