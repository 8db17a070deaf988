/*
   Copyright 2026 The secretgame Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SECRETGAME_HTTP_SERVER_HPP
#define SECRETGAME_HTTP_SERVER_HPP

#include <iostream>
#include <optional>
#include <string>

#include <httplib.h>

#include "service.hpp"

namespace secretgame {

inline ApiRequest to_api_request(const httplib::Request& req) {
    ApiRequest out{req.method, req.path, {}, req.body};
    for (const auto& [key, value] : req.params) out.query.emplace(key, value);
    return out;
}

/// Binds `service` to an httplib server. Static files (the web client)
/// are mounted at "/" when `static_dir` is given; API routes win on
/// conflicts.
inline void install_routes(httplib::Server& server, GameService& service,
                           const std::optional<std::string>& static_dir = std::nullopt) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    auto dispatch = [&service](const httplib::Request& req, httplib::Response& res) {
        const ApiResponse out = service.handle(to_api_request(req));
        res.status = out.status;
        res.set_content(out.body.dump(), "application/json");
    };
    for (const char* pattern : {R"(/sessions(/.*)?)", R"(/lab)"}) {
        server.Get(pattern, dispatch);
        server.Post(pattern, dispatch);
    }
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    if (static_dir) server.set_mount_point("/", *static_dir);
}

/// Blocks until the server stops. Returns false if the address could not
/// be bound.
inline bool serve(GameService& service, const std::string& host, int port,
                  const std::optional<std::string>& static_dir = std::nullopt) {
    httplib::Server server;
    install_routes(server, service, static_dir);
    std::cerr << "listening on http://" << host << ":" << port << std::endl;
    return server.listen(host, port);
}

}  // namespace secretgame

#endif  // SECRETGAME_HTTP_SERVER_HPP
