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

// Game sessions behind a small JSON API: a human plays either rule set
// against the engine. Transport-free; service_http.hpp binds it to HTTP.
//
//   POST /games                  {"graph": G, "mode": "arrows"|"trimmed",
//                                 "human": "player1"|"player2"}
//   GET  /games/{id}             session view
//   GET  /games/{id}/legal       legal arrows for the side to move
//   POST /games/{id}/moves       {"tail": u, "head": w}; engine replies
//   POST /games/{id}/resign
//
// G is {"vertices": n, "edges": [[u, w], ...]}, {"spider": [a, b, c]} or
// {"path": n}. Appending ?analysis=1 adds the current Grundy value.

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "graph.hpp"
#include "grundy.hpp"
#include "state.hpp"

namespace arrows {

using Json = nlohmann::json;

struct ServiceResponse {
    int status = 200;
    Json body;
};

struct ServiceConfig {
    using Clock = std::chrono::steady_clock;

    std::chrono::seconds ttl{3600};
    std::size_t max_vertices = 4096;
    std::size_t max_edges = default_max_edges();
    std::function<Clock::time_point()> now = [] { return Clock::now(); };
    std::optional<std::uint64_t> seed;
};

inline Json arrow_json(const Arrow& a) { return {{"tail", a.tail}, {"head", a.head}}; }

inline Json graph_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
    return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

/// Throws invalid-graph on malformed input.
inline Graph graph_from_json(const Json& j, std::size_t max_vertices)
{
    auto bad = [](const std::string& what) { fail(ErrorCode::InvalidGraph, what); };
    if (!j.is_object()) bad("graph must be an object");
    auto count = [&](const Json& v, const char* what) -> unsigned {
        if (!v.is_number_unsigned()) bad(std::string(what) + " must be a nonnegative integer");
        const auto n = v.get<std::uint64_t>();
        if (n > max_vertices) bad(std::string(what) + " too large");
        return static_cast<unsigned>(n);
    };
    Graph g;
    if (j.contains("spider")) {
        const auto& s = j["spider"];
        if (!s.is_array() || s.size() != 3) bad("spider must be [a, b, c]");
        SpiderSpec spec{count(s[0], "leg"), count(s[1], "leg"), count(s[2], "leg")};
        if (spec.a + spec.b + spec.c == 0) bad("spider needs a nonzero leg");
        if (spec.a + spec.b + spec.c + 1 > max_vertices) bad("spider too large");
        g = spider_graph(spec);
    } else if (j.contains("path")) {
        const auto n = count(j["path"], "path");
        if (n == 0) bad("path needs n >= 1");
        g = path_graph(n);
    } else if (j.contains("vertices")) {
        const auto n = count(j["vertices"], "vertices");
        std::vector<std::pair<Vertex, Vertex>> edges;
        if (!j.contains("edges") || !j["edges"].is_array()) bad("edges must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) bad("edge must be [u, w]");
            edges.emplace_back(count(e[0], "vertex"), count(e[1], "vertex"));
        }
        g = Graph(n, std::move(edges));
    } else {
        bad("graph needs one of vertices, spider, path");
    }
    if (g.has_isolated_vertex()) bad("game graphs must not have isolated vertices");
    return g;
}

class SessionStore {
public:
    explicit SessionStore(ServiceConfig config = {},
                          std::shared_ptr<GrundyCache> cache = std::make_shared<GrundyCache>())
        : config_(std::move(config)),
          engine_(std::move(cache), config_.max_edges),
          rng_(config_.seed ? *config_.seed : std::random_device{}())
    {
    }

    Engine& engine() noexcept { return engine_; }

    std::size_t session_count()
    {
        std::lock_guard lock(mutex_);
        return sessions_.size();
    }

    /// Routes one request. `target` may carry a query string.
    ServiceResponse handle(std::string_view method, std::string_view target, std::string_view body = {})
    {
        bool analysis = false;
        std::string_view path = target;
        if (auto q = target.find('?'); q != std::string_view::npos) {
            path = target.substr(0, q);
            std::string_view query = target.substr(q + 1);
            while (!query.empty()) {
                auto amp = query.find('&');
                auto kv = query.substr(0, amp);
                if (kv == "analysis=1" || kv == "analysis=true") analysis = true;
                if (amp == std::string_view::npos) break;
                query.remove_prefix(amp + 1);
            }
        }
        evict_expired();

        std::vector<std::string_view> parts;
        for (std::string_view rest = path; !rest.empty();) {
            if (rest.front() == '/') {
                rest.remove_prefix(1);
                continue;
            }
            auto slash = rest.find('/');
            parts.push_back(rest.substr(0, slash));
            if (slash == std::string_view::npos) break;
            rest.remove_prefix(slash);
        }
        if (parts.empty() || parts[0] != "games") return error(404, "not-found", "no such endpoint");

        if (parts.size() == 1) {
            if (method != "POST") return error(405, "method-not-allowed", "use POST /games");
            Json req;
            try {
                req = body.empty() ? Json::object() : Json::parse(body);
            } catch (const Json::exception& e) {
                return error(400, "bad-json", e.what());
            }
            return create(req, analysis);
        }
        const std::string id(parts[1]);
        if (parts.size() == 2) {
            if (method != "GET") return error(405, "method-not-allowed", "use GET");
            return view(id, analysis);
        }
        if (parts.size() == 3 && parts[2] == "legal") {
            if (method != "GET") return error(405, "method-not-allowed", "use GET");
            return legal(id);
        }
        if (parts.size() == 3 && parts[2] == "moves") {
            if (method != "POST") return error(405, "method-not-allowed", "use POST");
            Json req;
            try {
                req = Json::parse(body);
            } catch (const Json::exception& e) {
                return error(400, "bad-json", e.what());
            }
            return move(id, req, analysis);
        }
        if (parts.size() == 3 && parts[2] == "resign") {
            if (method != "POST") return error(405, "method-not-allowed", "use POST");
            return resign(id, analysis);
        }
        return error(404, "not-found", "no such endpoint");
    }

    ServiceResponse create(const Json& req, bool analysis = false)
    {
        Graph g;
        RuleSet mode = RuleSet::Arrows;
        Player human = Player::PlayerOne;
        try {
            if (!req.is_object() || !req.contains("graph")) return error(400, "invalid-graph", "missing graph");
            g = graph_from_json(req["graph"], config_.max_vertices);
            if (req.contains("mode")) {
                const auto m = req["mode"];
                if (m == "arrows") mode = RuleSet::Arrows;
                else if (m == "trimmed") mode = RuleSet::Trimmed;
                else return error(400, "invalid-parameter", "mode must be arrows or trimmed");
            }
            if (req.contains("human")) {
                const auto h = req["human"];
                if (h == "player1") human = Player::PlayerOne;
                else if (h == "player2") human = Player::PlayerTwo;
                else return error(400, "invalid-parameter", "human must be player1 or player2");
            }
        } catch (const Error& e) {
            return error(400, "invalid-graph", e.what());
        }

        auto s = std::make_shared<Session>();
        s->graph = share(std::move(g));
        s->mode = mode;
        s->human = human;
        s->position = State(s->graph);
        if (mode == RuleSet::Arrows) s->trimmed = make_trimmed_game(s->graph);
        const std::size_t playable =
            mode == RuleSet::Arrows ? s->trimmed->trimmed->edge_count() : s->graph->edge_count();
        if (playable > engine_.max_edges())
            return error(422, "too-large",
                         std::to_string(playable) + " playable edges exceed the bound of " +
                             std::to_string(engine_.max_edges()));

        std::lock_guard slock(s->mutex);
        {
            std::lock_guard lock(mutex_);
            do {
                s->id = fresh_id();
            } while (sessions_.count(s->id));
            sessions_.emplace(s->id, s);
        }
        s->touched = config_.now();
        settle(*s);
        if (s->in_progress() && s->to_move() != s->human) engine_reply(*s);
        return {201, view_json(*s, analysis)};
    }

    ServiceResponse view(const std::string& id, bool analysis = false)
    {
        auto s = find(id);
        if (!s) return unknown(id);
        std::lock_guard lock(s->mutex);
        return {200, view_json(*s, analysis)};
    }

    ServiceResponse legal(const std::string& id)
    {
        auto s = find(id);
        if (!s) return unknown(id);
        std::lock_guard lock(s->mutex);
        Json out = Json::array();
        if (s->in_progress())
            for (const auto& a : legal_moves(s->position, s->mode)) out.push_back(arrow_json(a));
        return {200, {{"id", s->id}, {"legal", out}}};
    }

    ServiceResponse move(const std::string& id, const Json& req, bool analysis = false)
    {
        auto s = find(id);
        if (!s) return unknown(id);
        std::lock_guard lock(s->mutex);
        if (!req.is_object() || !req.contains("tail") || !req.contains("head") ||
            !req["tail"].is_number_unsigned() || !req["head"].is_number_unsigned())
            return error(400, "invalid-parameter", "move needs integer tail and head");
        const Arrow a{req["tail"].get<Vertex>(), req["head"].get<Vertex>()};
        if (!s->in_progress()) return error(409, "game-over", "the game has ended");
        if (s->to_move() != s->human) return error(409, "not-your-turn", "engine to move");
        if (a.tail >= s->graph->vertex_count() || a.head >= s->graph->vertex_count())
            return error(400, "not-an-edge", "vertex out of range");
        switch (s->position.move_status(a, s->mode)) {
        case MoveStatus::Legal: break;
        case MoveStatus::NotAnEdge: return error(400, "not-an-edge", "arrow is not on an edge");
        case MoveStatus::Occupied: return error(409, "occupied", "edge already marked");
        case MoveStatus::CreatesSink: return error(409, "creates-sink", "arrow would create an internal sink");
        case MoveStatus::CreatesSource:
            return error(409, "creates-source", "arrow would create an internal source");
        case MoveStatus::LeafViolation:
            return error(409, "leaf-violation", "arrow would make a leaf a sink or source");
        }
        play(*s, a);
        if (s->in_progress()) engine_reply(*s);
        return {200, view_json(*s, analysis)};
    }

    ServiceResponse resign(const std::string& id, bool analysis = false)
    {
        auto s = find(id);
        if (!s) return unknown(id);
        std::lock_guard lock(s->mutex);
        if (!s->in_progress()) return error(409, "game-over", "the game has ended");
        s->winner = other(s->human);
        s->resigned = true;
        return {200, view_json(*s, analysis)};
    }

    /// Drops sessions idle for longer than the TTL.
    void evict_expired()
    {
        const auto now = config_.now();
        std::lock_guard lock(mutex_);
        for (auto it = sessions_.begin(); it != sessions_.end();) {
            std::unique_lock slock(it->second->mutex, std::try_to_lock);
            if (slock.owns_lock() && now - it->second->touched > config_.ttl) {
                slock.unlock();
                it = sessions_.erase(it);
            } else {
                ++it;
            }
        }
    }

private:
    struct Session {
        std::string id;
        GraphPtr graph;
        RuleSet mode = RuleSet::Arrows;
        Player human = Player::PlayerOne;
        State position;
        std::optional<TrimmedGame> trimmed;
        std::vector<Arrow> history;
        std::optional<Player> winner;
        bool resigned = false;
        ServiceConfig::Clock::time_point touched;
        std::mutex mutex;

        Player to_move() const { return history.size() % 2 == 0 ? Player::PlayerOne : Player::PlayerTwo; }
        bool in_progress() const { return !winner; }
    };

    std::shared_ptr<Session> find(const std::string& id)
    {
        std::lock_guard lock(mutex_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) return nullptr;
        it->second->touched = config_.now();
        return it->second;
    }

    std::string fresh_id()
    {
        static constexpr char hex[] = "0123456789abcdef";
        std::string id;
        auto bits = rng_();
        for (int i = 0; i < 16; ++i, bits >>= 4) id.push_back(hex[bits & 15]);
        return id;
    }

    // The player to move at a terminal position has lost.
    void settle(Session& s)
    {
        if (!s.winner && is_terminal(s.position, s.mode)) s.winner = other(s.to_move());
    }

    void play(Session& s, const Arrow& a)
    {
        s.position.play(a, s.mode);
        s.history.push_back(a);
        settle(s);
    }

    void engine_reply(Session& s)
    {
        const auto mv = s.mode == RuleSet::Arrows ? engine_.best_move(*s.trimmed, s.position)
                                                  : engine_.best_move(s.position);
        if (mv) play(s, *mv);
    }

    Grundy grundy_of(const Session& s)
    {
        return s.mode == RuleSet::Arrows ? engine_.grundy(*s.trimmed, s.position) : engine_.grundy(s.position);
    }

    Json view_json(Session& s, bool analysis)
    {
        Json history = Json::array();
        for (const auto& a : s.history) history.push_back(arrow_json(a));
        Json legal = Json::array();
        if (s.in_progress())
            for (const auto& a : legal_moves(s.position, s.mode)) legal.push_back(arrow_json(a));
        Json v = {
            {"id", s.id},
            {"mode", s.mode == RuleSet::Arrows ? "arrows" : "trimmed"},
            {"human", std::string(to_string(s.human))},
            {"graph", graph_json(*s.graph)},
            {"history", history},
            {"legal", legal},
            {"status", s.in_progress() ? "in-progress" : "won"},
            {"to_move", s.in_progress() ? Json(std::string(to_string(s.to_move()))) : Json(nullptr)},
            {"winner", s.winner ? Json(std::string(to_string(*s.winner))) : Json(nullptr)},
            {"resigned", s.resigned},
        };
        if (analysis) v["grundy"] = grundy_of(s);
        return v;
    }

    static ServiceResponse error(int status, std::string reason, std::string message)
    {
        return {status, {{"error", std::move(reason)}, {"message", std::move(message)}}};
    }

    static ServiceResponse unknown(const std::string& id) { return error(404, "unknown-game", "no game " + id); }

    ServiceConfig config_;
    Engine engine_;
    std::mutex mutex_;
    std::mt19937_64 rng_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace arrows
