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

// Plays the engine against itself on S(3,5,7) under the Game of Arrows.

#include <iostream>

#include "arrows/arrows.hpp"

int main()
{
    using namespace arrows;
    Engine engine;
    auto g = share(spider_graph({3, 5, 7}));
    const auto game = make_trimmed_game(g);

    State x(g);
    std::cout << "winner under perfect play: " << to_string(engine.winner(*g, RuleSet::Arrows)) << "\n";
    Player turn = Player::PlayerOne;
    while (auto mv = engine.best_move(game, x)) {
        std::cout << to_string(turn) << " plays " << to_string(*mv) << "  (value before "
                  << engine.grundy(game, x) << ")\n";
        x.play(*mv, RuleSet::Arrows);
        turn = other(turn);
    }
    std::cout << to_string(turn) << " has no move and loses\n";
}
