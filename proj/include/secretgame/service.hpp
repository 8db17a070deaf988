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

#ifndef SECRETGAME_SERVICE_HPP
#define SECRETGAME_SERVICE_HPP

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "enumeration.hpp"
#include "json_codec.hpp"
#include "quantifier_lab.hpp"
#include "solvers.hpp"

namespace secretgame {

using codec::json;

struct ServiceConfig {
    std::size_t candidate_limit = kDefaultCandidateLimit;
    std::uint64_t lab_grid_limit = 1'000'000;
};

/// Transport-neutral request; the HTTP adapter and the tests both build
/// these.
struct ApiRequest {
    std::string method;
    std::string path;
    std::map<std::string, std::string> query;
    std::string body;
};

struct ApiResponse {
    int status = 200;
    json body;
};

constexpr int http_status(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::SessionNotFound: return 404;
        case ErrorCode::GameOver: return 409;
        case ErrorCode::UniverseTooLarge: return 413;
        case ErrorCode::InvariantViolation: return 500;
        default: return 400;
    }
}

inline json error_body(ErrorCode code, const std::string& message) {
    return json{{"error_code", std::string(to_string(code))}, {"message", message}};
}

/// Session state plus per-round candidate counts, guarded by its own mutex.
struct SessionSlot {
    struct RoundStats {
        std::size_t candidate_count = 0;
        bool truncated = false;
    };

    explicit SessionSlot(GameSession s) : session(std::move(s)) {}

    std::mutex mutex;
    GameSession session;
    std::vector<RoundStats> stats;
};

/// In-memory id -> session map. Ids are "s1", "s2", ... per store, so a
/// fresh store replays a request log identically.
class SessionStore {
public:
    std::string next_id() { return "s" + std::to_string(++counter_); }

    std::shared_ptr<SessionSlot> insert(GameSession session) {
        auto slot = std::make_shared<SessionSlot>(std::move(session));
        std::unique_lock lock(mutex_);
        const std::string id = slot->session.id();
        if (sessions_.contains(id)) {
            throw Error(ErrorCode::MalformedRequest, "session id '" + id + "' already exists");
        }
        sessions_.emplace(id, slot);
        return slot;
    }

    std::shared_ptr<SessionSlot> find(const std::string& id) const {
        std::shared_lock lock(mutex_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) {
            throw Error(ErrorCode::SessionNotFound, "no session with id '" + id + "'");
        }
        return it->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return sessions_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<SessionSlot>> sessions_;
    std::atomic<std::uint64_t> counter_{0};
};

/// Full session state including the secret. For export only; never sent
/// by a game endpoint.
inline json session_to_json(const GameSession& session) {
    json rounds = json::array();
    for (const auto& round : session.transcript()) {
        rounds.push_back({{"question", codec::encode(round.question)}, {"response", codec::encode(round.response)}});
    }
    return json{{"id", session.id()},
                {"n", std::to_string(session.dimension().value())},
                {"secret", codec::encode(session.hidden_secret())},
                {"transcript", std::move(rounds)},
                {"status", std::string(to_string(session.status()))},
                {"guesses_used", std::to_string(session.guesses_used())}};
}

inline GameSession session_from_json(const json& doc) {
    SecretVector secret(codec::decode_integers(codec::require(doc, "secret"), "secret"));
    if (codec::decode_u64(codec::require(doc, "n"), "n") != secret.size()) {
        throw Error(ErrorCode::DimensionMismatch, "exported n does not match the secret length");
    }
    Transcript transcript;
    for (const auto& round : codec::require(doc, "transcript")) {
        transcript.add(QuestionVector(codec::decode_integers(codec::require(round, "question"), "question")),
                       codec::decode_integer(codec::require(round, "response"), "response"));
    }
    return GameSession::restore(codec::require(doc, "id").get<std::string>(), std::move(secret), transcript,
                                parse_status(codec::require(doc, "status").get<std::string>()),
                                codec::decode_u64(codec::require(doc, "guesses_used"), "guesses_used"));
}

/// The game and lab API. Each public method takes and returns wire JSON and
/// throws Error on failure; handle() adds routing and the error mapping.
class GameService {
public:
    explicit GameService(ServiceConfig config = {}) : config_(config) {}

    const ServiceConfig& config() const noexcept { return config_; }

    json create_session(const json& body) {
        if (!body.is_object()) throw Error(ErrorCode::MalformedRequest, "request body must be a JSON object");
        SessionOptions options;
        if (body.contains("secret") && !body.at("secret").is_null()) {
            options.secret = SecretVector(codec::decode_integers(body.at("secret"), "secret"));
            options.dimension = options.secret->size();
        }
        if (body.contains("n")) options.dimension = codec::decode_u64(body.at("n"), "n");
        if (body.contains("seed") && !body.at("seed").is_null()) options.seed = codec::decode_u64(body.at("seed"), "seed");
        if (body.contains("max_entry") && !body.at("max_entry").is_null()) {
            options.max_entry = codec::decode_u64(body.at("max_entry"), "max_entry");
        }
        auto slot = store_.insert(new_session(options, store_.next_id()));
        std::lock_guard lock(slot->mutex);
        return summary(slot->session);
    }

    json ask_question(const std::string& id, const json& body) {
        auto slot = store_.find(id);
        QuestionVector q(codec::decode_integers(codec::require(body, "question"), "question"));
        std::lock_guard lock(slot->mutex);
        const Response r = slot->session.ask(q);
        const CandidateSet remaining = consistent_candidates(slot->session.transcript(), config_.candidate_limit);
        slot->stats.push_back({remaining.size(), remaining.truncated});
        return json{{"response", codec::encode(r)},
                    {"candidate_count", std::to_string(remaining.size())},
                    {"truncated", remaining.truncated}};
    }

    json submit_guess(const std::string& id, const json& body) {
        auto slot = store_.find(id);
        SecretVector s(codec::decode_integers(codec::require(body, "secret"), "secret"));
        std::lock_guard lock(slot->mutex);
        const bool correct = slot->session.guess(s);
        return json{{"correct", correct},
                    {"status", std::string(to_string(slot->session.status()))},
                    {"guesses_used", std::to_string(slot->session.guesses_used())}};
    }

    json get_session(const std::string& id) const {
        auto slot = store_.find(id);
        std::lock_guard lock(slot->mutex);
        const GameSession& session = slot->session;
        json rounds = json::array();
        for (std::size_t k = 0; k < session.transcript().size(); ++k) {
            const Round& round = session.transcript()[k];
            json row{{"question", codec::encode(round.question)}, {"response", codec::encode(round.response)}};
            if (k < slot->stats.size()) {
                row["candidate_count"] = std::to_string(slot->stats[k].candidate_count);
                row["truncated"] = slot->stats[k].truncated;
            }
            rounds.push_back(std::move(row));
        }
        json out{{"id", session.id()},
                 {"n", std::to_string(session.dimension().value())},
                 {"status", std::string(to_string(session.status()))},
                 {"transcript", std::move(rounds)},
                 {"guesses_used", std::to_string(session.guesses_used())}};
        if (auto secret = session.revealed_secret()) out["secret"] = codec::encode(*secret);
        return out;
    }

    json reveal(const std::string& id) {
        auto slot = store_.find(id);
        std::lock_guard lock(slot->mutex);
        const SecretVector& secret = slot->session.reveal();
        return json{{"secret", codec::encode(secret)}, {"status", std::string(to_string(slot->session.status()))}};
    }

    json get_hint(const std::string& id, std::string_view strategy_text) {
        auto slot = store_.find(id);
        const HintStrategy strategy = parse_hint_strategy(strategy_text);
        std::lock_guard lock(slot->mutex);
        if (!slot->session.is_open()) {
            throw Error(ErrorCode::GameOver, "session " + id + " is " + std::string(to_string(slot->session.status())));
        }
        const QuestionVector q = suggest_question(slot->session.transcript(), slot->session.dimension(), strategy);
        return json{{"question", codec::encode(q)}};
    }

    json run_lab(const json& body) const {
        const Statement statement = parse_statement(codec::require(body, "statement").get<std::string>());
        BoundedUniverse u;
        u.n = codec::decode_u64(codec::require(body, "n"), "n");
        u.s_max = codec::decode_u64(codec::require(body, "s_max"), "s_max");
        if (body.contains("q_max") && !body.at("q_max").is_null()) u.q_max = codec::decode_u64(body.at("q_max"), "q_max");
        if (u.n < 1 || u.s_max < 1 || (u.q_max && *u.q_max < 1)) {
            throw Error(ErrorCode::MalformedRequest, "n, q_max and s_max must be at least 1");
        }
        if (statement == Statement::exists_forall && !u.q_max) {
            throw Error(ErrorCode::MalformedRequest, "exists_forall needs q_max");
        }
        const BigInt size = grid_size(statement, u);
        if (size > config_.lab_grid_limit) {
            throw Error(ErrorCode::UniverseTooLarge, "universe has " + to_decimal(size) + " elements, limit is " +
                                                         std::to_string(config_.lab_grid_limit));
        }
        return report_to_json(evaluate(statement, u));
    }

    /// Number of (question, secret) pairs exists_forall may have to check,
    /// or the number of secrets for forall_exists.
    static BigInt grid_size(Statement statement, const BoundedUniverse& u) {
        BigInt size = boost::multiprecision::pow(BigInt(u.s_max), static_cast<unsigned>(std::min<std::size_t>(u.n, 4096)));
        if (statement == Statement::exists_forall && u.q_max) {
            size *= boost::multiprecision::pow(BigInt(*u.q_max), static_cast<unsigned>(std::min<std::size_t>(u.n, 4096)));
        }
        return size;
    }

    json export_session(const std::string& id) const {
        auto slot = store_.find(id);
        std::lock_guard lock(slot->mutex);
        return session_to_json(slot->session);
    }

    /// Imports an exported session under its original id; candidate counts
    /// are recomputed from the transcript.
    std::string import_session(const json& doc) {
        GameSession session = session_from_json(doc);
        std::vector<SessionSlot::RoundStats> stats;
        Transcript prefix;
        for (const auto& round : session.transcript()) {
            prefix.add(round.question, round.response);
            const CandidateSet c = consistent_candidates(prefix, config_.candidate_limit);
            stats.push_back({c.size(), c.truncated});
        }
        auto slot = store_.insert(std::move(session));
        std::lock_guard lock(slot->mutex);
        slot->stats = std::move(stats);
        return slot->session.id();
    }

    ApiResponse handle(const ApiRequest& request) {
        try {
            return route(request);
        } catch (const Error& e) {
            return {http_status(e.code()), error_body(e.code(), e.what())};
        } catch (const json::exception& e) {
            return {400, error_body(ErrorCode::MalformedRequest, e.what())};
        }
    }

private:
    static json summary(const GameSession& session) {
        return json{{"id", session.id()},
                    {"n", std::to_string(session.dimension().value())},
                    {"status", std::string(to_string(session.status()))}};
    }

    static json parse_body(const std::string& body) {
        if (body.empty()) return json::object();
        return json::parse(body);
    }

    static std::vector<std::string> split_path(std::string_view path) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (start <= path.size()) {
            const std::size_t end = std::min(path.find('/', start), path.size());
            if (end > start) parts.emplace_back(path.substr(start, end - start));
            start = end + 1;
        }
        return parts;
    }

    ApiResponse route(const ApiRequest& request) {
        const auto parts = split_path(request.path);
        const std::string& method = request.method;
        auto not_found = [&] {
            return ApiResponse{404, json{{"error_code", "RouteNotFound"}, {"message", "no route for " + method + " " + request.path}}};
        };
        auto bad_method = [&] {
            return ApiResponse{405, json{{"error_code", "MethodNotAllowed"}, {"message", method + " not allowed on " + request.path}}};
        };

        if (parts.size() == 1 && parts[0] == "lab") {
            if (method != "POST") return bad_method();
            return {200, run_lab(parse_body(request.body))};
        }
        if (parts.empty() || parts[0] != "sessions") return not_found();
        if (parts.size() == 1) {
            if (method != "POST") return bad_method();
            return {201, create_session(parse_body(request.body))};
        }
        const std::string& id = parts[1];
        if (parts.size() == 2) {
            if (method != "GET") return bad_method();
            return {200, get_session(id)};
        }
        if (parts.size() != 3) return not_found();
        const std::string& action = parts[2];
        if (action == "hint") {
            if (method != "GET") return bad_method();
            auto it = request.query.find("strategy");
            if (it == request.query.end()) {
                throw Error(ErrorCode::MalformedRequest, "missing query parameter 'strategy'");
            }
            return {200, get_hint(id, it->second)};
        }
        if (action != "ask" && action != "guess" && action != "reveal") return not_found();
        if (method != "POST") return bad_method();
        const json body = parse_body(request.body);
        if (action == "ask") return {200, ask_question(id, body)};
        if (action == "guess") return {200, submit_guess(id, body)};
        return {200, reveal(id)};
    }

    ServiceConfig config_;
    SessionStore store_;
};

}  // namespace secretgame

#endif  // SECRETGAME_SERVICE_HPP
