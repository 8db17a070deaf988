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

#ifndef SECRETGAME_CORE_HPP
#define SECRETGAME_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace secretgame {

inline constexpr std::size_t kDefaultDimension = 4;

/// Number of entries in every secret and question of one game; at least 1.
class Dimension {
public:
    explicit Dimension(std::size_t n) : n_(n) {
        if (n == 0) {
            throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
        }
    }

    std::size_t value() const noexcept { return n_; }
    friend bool operator==(Dimension, Dimension) = default;

private:
    std::size_t n_;
};

/// A non-empty sequence of strictly positive integers. The tag keeps
/// secrets and questions from being swapped by accident; the two are
/// otherwise the same shape.
template <class Tag>
class PositiveVector {
public:
    explicit PositiveVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw Error(ErrorCode::DimensionMismatch, std::string(Tag::name) + " must have at least one entry");
        }
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 1) {
                throw Error(ErrorCode::NonPositiveEntry,
                            std::string(Tag::name) + " entry " + std::to_string(i + 1) + " is " +
                                to_decimal(entries_[i]) + "; entries must be positive integers");
            }
        }
    }

    PositiveVector(std::initializer_list<BigInt> entries)
        : PositiveVector(std::vector<BigInt>(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    Dimension dimension() const { return Dimension(entries_.size()); }
    const BigInt& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const BigInt> entries() const noexcept { return entries_; }
    const std::vector<BigInt>& to_vector() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const PositiveVector& a, const PositiveVector& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const PositiveVector& a, const PositiveVector& b) { return a.entries_ < b.entries_; }

private:
    std::vector<BigInt> entries_;
};

struct SecretTag { static constexpr const char* name = "secret"; };
struct QuestionTag { static constexpr const char* name = "question"; };

using SecretVector = PositiveVector<SecretTag>;
using QuestionVector = PositiveVector<QuestionTag>;

// Responses are plain integers; the only invariant (r >= sum of q) is
// relative to the question, so Transcript enforces it per round.
using Response = BigInt;

/// "(1, 5, 10, 20)" style rendering shared by the CLI and reports.
inline std::string format_tuple(std::span<const BigInt> values, std::string_view sep = ", ") {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += sep;
        out += to_decimal(values[i]);
    }
    out += ")";
    return out;
}

template <class Tag>
std::ostream& operator<<(std::ostream& os, const PositiveVector<Tag>& v) {
    return os << format_tuple(v.entries());
}

inline BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                                      std::to_string(b.size()));
    }
    BigInt sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

inline BigInt entry_sum(std::span<const BigInt> values) {
    BigInt sum = 0;
    for (const auto& v : values) sum += v;
    return sum;
}

/// Suzy's answer to question q: the exact scalar product q . s.
inline Response scalar_product(const QuestionVector& q, const SecretVector& s) {
    return dot(q.entries(), s.entries());
}

struct Round {
    QuestionVector question;
    Response response;

    friend bool operator==(const Round&, const Round&) = default;
};

/// Ordered (question, response) rounds over one dimension.
class Transcript {
public:
    Transcript() = default;

    void add(QuestionVector question, Response response) {
        if (!rounds_.empty() && question.size() != rounds_.front().question.size()) {
            throw Error(ErrorCode::DimensionMismatch, "question has " + std::to_string(question.size()) +
                                                          " entries, transcript dimension is " +
                                                          std::to_string(rounds_.front().question.size()));
        }
        if (response < entry_sum(question.entries())) {
            throw Error(ErrorCode::InconsistentResponses,
                        "response " + to_decimal(response) + " is below the minimum " +
                            to_decimal(entry_sum(question.entries())) + " for question " +
                            format_tuple(question.entries()));
        }
        rounds_.push_back(Round{std::move(question), std::move(response)});
    }

    std::size_t size() const noexcept { return rounds_.size(); }
    bool empty() const noexcept { return rounds_.empty(); }
    const Round& operator[](std::size_t i) const { return rounds_[i]; }
    auto begin() const noexcept { return rounds_.begin(); }
    auto end() const noexcept { return rounds_.end(); }

    friend bool operator==(const Transcript&, const Transcript&) = default;

private:
    std::vector<Round> rounds_;
};

enum class SessionStatus { open, won, revealed };

constexpr std::string_view to_string(SessionStatus status) noexcept {
    switch (status) {
        case SessionStatus::open: return "open";
        case SessionStatus::won: return "won";
        case SessionStatus::revealed: return "revealed";
    }
    return "open";
}

inline SessionStatus parse_status(std::string_view text) {
    if (text == "open") return SessionStatus::open;
    if (text == "won") return SessionStatus::won;
    if (text == "revealed") return SessionStatus::revealed;
    throw Error(ErrorCode::MalformedRequest, "unknown session status '" + std::string(text) + "'");
}

/// One game: a hidden secret plus everything Quentin has asked so far.
///
/// The secret is only reachable through revealed_secret() once the game is
/// over. hidden_secret() exists for persistence and verification code and
/// must never feed anything shown to a player of an open game.
class GameSession {
public:
    GameSession(std::string id, SecretVector secret) : id_(std::move(id)), secret_(std::move(secret)) {}

    /// Rebuilds a session from exported state. Every stored response is
    /// recomputed from the secret; a mismatch means the export was tampered
    /// with or corrupted.
    static GameSession restore(std::string id, SecretVector secret, const Transcript& transcript,
                               SessionStatus status, std::uint64_t guesses_used) {
        GameSession session(std::move(id), std::move(secret));
        for (const auto& round : transcript) {
            if (round.question.size() != session.secret_.size()) {
                throw Error(ErrorCode::DimensionMismatch, "restored round has the wrong dimension");
            }
            if (scalar_product(round.question, session.secret_) != round.response) {
                throw Error(ErrorCode::InconsistentResponses,
                            "restored response " + to_decimal(round.response) + " does not match the secret");
            }
        }
        session.transcript_ = transcript;
        session.status_ = status;
        session.guesses_used_ = guesses_used;
        return session;
    }

    const std::string& id() const noexcept { return id_; }
    Dimension dimension() const { return secret_.dimension(); }
    SessionStatus status() const noexcept { return status_; }
    const Transcript& transcript() const noexcept { return transcript_; }
    std::uint64_t guesses_used() const noexcept { return guesses_used_; }
    bool is_open() const noexcept { return status_ == SessionStatus::open; }

    std::optional<SecretVector> revealed_secret() const {
        if (is_open()) return std::nullopt;
        return secret_;
    }

    const SecretVector& hidden_secret() const noexcept { return secret_; }

    Response ask(const QuestionVector& q) {
        require_open();
        require_dimension(q.size());
        Response r = scalar_product(q, secret_);
        transcript_.add(q, r);
        return r;
    }

    bool guess(const SecretVector& s) {
        require_open();
        require_dimension(s.size());
        if (s == secret_) {
            status_ = SessionStatus::won;
            return true;
        }
        ++guesses_used_;
        return false;
    }

    const SecretVector& reveal() {
        require_open();
        status_ = SessionStatus::revealed;
        return secret_;
    }

private:
    void require_open() const {
        if (!is_open()) {
            throw Error(ErrorCode::GameOver, "session " + id_ + " is " + std::string(to_string(status_)));
        }
    }

    void require_dimension(std::size_t n) const {
        if (n != secret_.size()) {
            throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(secret_.size()) +
                                                          " entries, got " + std::to_string(n));
        }
    }

    std::string id_;
    SecretVector secret_;
    Transcript transcript_;
    SessionStatus status_ = SessionStatus::open;
    std::uint64_t guesses_used_ = 0;
};

/// Uniform draw on [1, bound] by rejection from raw mt19937_64 output, so a
/// seed reproduces the same secret on every standard library.
inline std::uint64_t draw_uniform(std::mt19937_64& engine, std::uint64_t bound) {
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t reject_from = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = engine();
    } while (x > reject_from);
    return 1 + x % bound;
}

inline SecretVector random_secret(Dimension n, std::uint64_t seed, std::uint64_t max_entry) {
    if (max_entry < 1) {
        throw Error(ErrorCode::NonPositiveEntry, "max_entry must be at least 1");
    }
    std::mt19937_64 engine(seed);
    std::vector<BigInt> entries;
    entries.reserve(n.value());
    for (std::size_t i = 0; i < n.value(); ++i) {
        entries.emplace_back(draw_uniform(engine, max_entry));
    }
    return SecretVector(std::move(entries));
}

struct SessionOptions {
    std::size_t dimension = kDefaultDimension;
    std::optional<SecretVector> secret;
    std::optional<std::uint64_t> seed;
    std::uint64_t max_entry = 9;
};

/// Opens a game. An explicit secret wins; otherwise entries are drawn
/// uniformly from [1, max_entry] using `seed`, or a fresh nondeterministic
/// seed when none is given.
inline GameSession new_session(const SessionOptions& options, std::string id = "local") {
    const Dimension n(options.dimension);
    if (options.secret) {
        if (options.secret->size() != n.value()) {
            throw Error(ErrorCode::DimensionMismatch, "secret has " + std::to_string(options.secret->size()) +
                                                          " entries, dimension is " + std::to_string(n.value()));
        }
        return GameSession(std::move(id), *options.secret);
    }
    const std::uint64_t seed = options.seed ? *options.seed : std::random_device{}() * 0x9E3779B97F4A7C15ULL;
    return GameSession(std::move(id), random_secret(n, seed, options.max_entry));
}

}  // namespace secretgame

#endif  // SECRETGAME_CORE_HPP
