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

#ifndef SECRETGAME_SOLVERS_HPP
#define SECRETGAME_SOLVERS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"
#include "enumeration.hpp"
#include "numtheory.hpp"

namespace secretgame {

// ---------------------------------------------------------------------------
// Non-adaptive: n fixed questions, then a closed-form inversion.
// ---------------------------------------------------------------------------

/// Question i is all ones with entry i set to 2, i.e. the rows of I + J.
inline std::vector<QuestionVector> nonadaptive_questions(Dimension n) {
    std::vector<QuestionVector> questions;
    questions.reserve(n.value());
    for (std::size_t i = 0; i < n.value(); ++i) {
        std::vector<BigInt> row(n.value(), 1);
        row[i] = 2;
        questions.emplace_back(std::move(row));
    }
    return questions;
}

/// Inverts the responses to nonadaptive_questions(n):
/// s_i = r_i - (r_1 + ... + r_n) / (n + 1).
inline SecretVector nonadaptive_solve(std::span<const Response> responses) {
    if (responses.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "need one response per question, got none");
    }
    const BigInt divisor = responses.size() + 1;
    const BigInt total = entry_sum(responses);
    if (total % divisor != 0) {
        throw Error(ErrorCode::InconsistentResponses, "response sum " + to_decimal(total) +
                                                          " is not divisible by " + to_decimal(divisor));
    }
    const BigInt secret_sum = total / divisor;
    std::vector<BigInt> s;
    s.reserve(responses.size());
    for (const auto& r : responses) {
        s.push_back(r - secret_sum);
        if (s.back() < 1) {
            throw Error(ErrorCode::InconsistentResponses,
                        "responses imply a non-positive entry " + to_decimal(s.back()));
        }
    }
    return SecretVector(std::move(s));
}

// ---------------------------------------------------------------------------
// One key per lock: the coprime-product question.
// ---------------------------------------------------------------------------

struct DecodingKey {
    QuestionVector question;
    CoprimeBasis basis;
};

/// q_i = prod_{j != i} a_j over the greedy prime basis above s. Since a_i
/// divides every q_j except q_i and a_i > s_i, q decodes s.
inline DecodingKey build_decoding_question(const SecretVector& s) {
    CoprimeBasis basis = coprime_basis_above(s);
    const auto& a = basis.values;
    const std::size_t n = a.size();

    std::vector<BigInt> prefix(n + 1, 1), suffix(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * a[i];
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * a[i];

    std::vector<BigInt> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = prefix[i] * suffix[i + 1];
    return DecodingKey{QuestionVector(std::move(q)), std::move(basis)};
}

// ---------------------------------------------------------------------------
// No master key: two secrets any given question confuses.
// ---------------------------------------------------------------------------

struct CollisionWitness {
    SecretVector s;
    SecretVector t;
    Response response;
};

/// s = ones with s_{n-1} = 1 + q_n, t = ones with t_n = 1 + q_{n-1}.
/// Both answer q_{n-1} + q_n + q_{n-1} q_n + (sum of the other q).
inline CollisionWitness collision_witness(const QuestionVector& q) {
    const std::size_t n = q.size();
    if (n < 2) {
        throw Error(ErrorCode::NoCollisionInDimensionOne,
                    "in dimension 1 every question decodes every secret; no collision exists");
    }
    std::vector<BigInt> s(n, 1), t(n, 1);
    s[n - 2] = 1 + q[n - 1];
    t[n - 1] = 1 + q[n - 2];
    SecretVector sv(std::move(s)), tv(std::move(t));
    Response r = scalar_product(q, sv);
    return CollisionWitness{std::move(sv), std::move(tv), std::move(r)};
}

// ---------------------------------------------------------------------------
// Adaptive: any first question, then a base-(r1 + 1) follow-up.
// ---------------------------------------------------------------------------

struct AdaptivePlan {
    QuestionVector first;
    Response first_response;
    BigInt base;
    QuestionVector followup;
};

/// Every candidate entry is at most r1 (all q_i >= 1), so the powers of
/// B = r1 + 1 read a candidate off as the base-B digits of its response.
inline AdaptivePlan adaptive_followup(const QuestionVector& q1, const Response& r1) {
    const BigInt minimum = entry_sum(q1.entries());
    if (r1 < minimum) {
        throw Error(ErrorCode::InconsistentResponses, "first response " + to_decimal(r1) +
                                                          " is below the minimum " + to_decimal(minimum));
    }
    BigInt base = r1 + 1;
    std::vector<BigInt> powers;
    powers.reserve(q1.size());
    BigInt power = 1;
    for (std::size_t i = 0; i < q1.size(); ++i) {
        powers.push_back(power);
        power *= base;
    }
    return AdaptivePlan{q1, r1, std::move(base), QuestionVector(std::move(powers))};
}

/// Little-endian base-B digits of r2. Every digit must be in [1, B-1] and
/// there must be exactly n of them.
inline SecretVector adaptive_decode(const AdaptivePlan& plan, const Response& r2) {
    const std::size_t n = plan.followup.size();
    if (r2 < 1) {
        throw Error(ErrorCode::InvalidDigit, "follow-up response must be positive");
    }
    BigInt rest = r2;
    std::vector<BigInt> digits;
    digits.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt digit = rest % plan.base;
        rest /= plan.base;
        if (digit == 0) {
            throw Error(ErrorCode::InvalidDigit,
                        "digit " + std::to_string(i + 1) + " of " + to_decimal(r2) + " in base " +
                            to_decimal(plan.base) + " is 0");
        }
        digits.push_back(std::move(digit));
    }
    if (rest != 0) {
        throw Error(ErrorCode::InvalidDigit, to_decimal(r2) + " has more than " + std::to_string(n) +
                                                 " digits in base " + to_decimal(plan.base));
    }
    return SecretVector(std::move(digits));
}

/// Plays the two-question strategy against a live session.
inline SecretVector adaptive_solve(GameSession& session, const QuestionVector& q1) {
    const Response r1 = session.ask(q1);
    const AdaptivePlan plan = adaptive_followup(q1, r1);
    const Response r2 = session.ask(plan.followup);
    SecretVector s = adaptive_decode(plan, r2);
    if (scalar_product(q1, s) != r1) {
        throw Error(ErrorCode::InvariantViolation, "decoded secret " + format_tuple(s.entries()) +
                                                       " does not reproduce the first response");
    }
    return s;
}

// ---------------------------------------------------------------------------
// Hints for interactive play.
// ---------------------------------------------------------------------------

enum class HintStrategy { nonadaptive, followup };

inline HintStrategy parse_hint_strategy(std::string_view text) {
    if (text == "nonadaptive") return HintStrategy::nonadaptive;
    if (text == "followup") return HintStrategy::followup;
    throw Error(ErrorCode::MalformedRequest,
                "unknown hint strategy '" + std::string(text) + "' (expected nonadaptive or followup)");
}

/// nonadaptive: the first question of nonadaptive_questions(n) not yet in
/// the transcript. followup: the adaptive follow-up, only after exactly one
/// round.
inline QuestionVector suggest_question(const Transcript& transcript, Dimension n, HintStrategy strategy) {
    if (strategy == HintStrategy::followup) {
        if (transcript.size() != 1) {
            throw Error(ErrorCode::HintUnavailable, "the follow-up hint needs exactly one asked question, have " +
                                                        std::to_string(transcript.size()));
        }
        return adaptive_followup(transcript[0].question, transcript[0].response).followup;
    }
    for (auto& q : nonadaptive_questions(n)) {
        const bool asked = std::any_of(transcript.begin(), transcript.end(),
                                       [&](const Round& round) { return round.question == q; });
        if (!asked) return q;
    }
    throw Error(ErrorCode::HintUnavailable, "all non-adaptive questions have been asked");
}

}  // namespace secretgame

#endif  // SECRETGAME_SOLVERS_HPP
