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

// HTTP binding for SessionStore (cpp-httplib).

#include <string>

#include <httplib.h>

#include "service.hpp"

namespace arrows {

inline void bind_routes(httplib::Server& server, SessionStore& store)
{
    auto forward = [&store](const char* method) {
        return [&store, method](const httplib::Request& req, httplib::Response& res) {
            std::string target = req.path;
            if (req.has_param("analysis")) target += "?analysis=" + req.get_param_value("analysis");
            const auto out = store.handle(method, target, req.body);
            res.status = out.status;
            res.set_header("Access-Control-Allow-Origin", "*");
            res.set_content(out.body.dump(), "application/json");
        };
    };
    server.Get(R"(/games/[^/]+(/legal)?)", forward("GET"));
    server.Post(R"(/games(/[^/]+/(moves|resign))?)", forward("POST"));
    server.Options(R"(/games.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
}

/// Blocks until the server stops.
inline bool serve(SessionStore& store, const std::string& host, int port)
{
    httplib::Server server;
    bind_routes(server, store);
    return server.listen(host, port);
}

}  // namespace arrows
