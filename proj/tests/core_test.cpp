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

#include <gtest/gtest.h>

#include "secretgame/core.hpp"
#include "support/oracles.hpp"

namespace secretgame {
namespace {

TEST(ScalarProduct, DollarBillExamples) {
    EXPECT_EQ(scalar_product(QuestionVector{1, 5, 10, 20}, SecretVector{1, 1, 1, 1}), 36);
    EXPECT_EQ(scalar_product(QuestionVector{1, 5, 10, 20}, SecretVector{6, 1, 1, 1}), 41);
    EXPECT_EQ(scalar_product(QuestionVector{1, 1, 1, 1}, SecretVector{1, 1, 1, 1}), 4);
}

TEST(ScalarProduct, DimensionMismatch) {
    try {
        scalar_product(QuestionVector{1, 2, 3}, SecretVector{1, 2});
        FAIL() << "expected DimensionMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(ScalarProduct, ExactBeyond64Bits) {
    const BigInt big = parse_decimal("123456789012345678901234567890");
    EXPECT_EQ(scalar_product(QuestionVector{big, 1}, SecretVector{big, 2}),
              parse_decimal("15241578753238836750495351562536198787501905199875019052102"));
}

TEST(ScalarProduct, LowerBoundAndSymmetryProperty) {
    oracle::Generator gen(11);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = gen.dimension(1, 6);
        const auto qv = gen.vector(n, 50);
        const auto sv = gen.vector(n, trial % 3 == 0 ? 1 : 50);
        const QuestionVector q(qv);
        const SecretVector s(sv);
        const BigInt r = scalar_product(q, s);
        const bool all_ones = std::all_of(sv.begin(), sv.end(), [](const BigInt& e) { return e == 1; });
        EXPECT_GE(r, entry_sum(qv));
        EXPECT_EQ(r == entry_sum(qv), all_ones);
        EXPECT_EQ(r, scalar_product(QuestionVector(sv), SecretVector(qv)));
        EXPECT_EQ(r, oracle::dot(oracle::to_vec(qv), oracle::to_vec(sv)));
    }
}

TEST(PositiveVector, RejectsZeroAndEmpty) {
    EXPECT_THROW(SecretVector({0, 1, 1, 1}), Error);
    try {
        SecretVector s{1, -3};
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPositiveEntry);
    }
    try {
        QuestionVector q(std::vector<BigInt>{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(Dimension, ZeroRejected) { EXPECT_THROW(Dimension(0), Error); }

TEST(Transcript, EnforcesResponseLowerBound) {
    Transcript t;
    t.add(QuestionVector{1, 5, 10, 20}, 36);
    try {
        t.add(QuestionVector{1, 5, 10, 20}, 30);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InconsistentResponses);
    }
    EXPECT_THROW(t.add(QuestionVector{1, 1}, 5), Error);
    EXPECT_EQ(t.size(), 1u);
}

TEST(NewSession, ExplicitSecret) {
    GameSession s = new_session({4, SecretVector{1, 2, 3, 4}, std::nullopt, 9});
    EXPECT_EQ(s.dimension().value(), 4u);
    EXPECT_TRUE(s.transcript().empty());
    EXPECT_EQ(s.status(), SessionStatus::open);
    EXPECT_FALSE(s.revealed_secret().has_value());
    EXPECT_EQ(s.hidden_secret(), (SecretVector{1, 2, 3, 4}));
}

TEST(NewSession, SeededIsDeterministic) {
    const SessionOptions opts{4, std::nullopt, 7, 5};
    const GameSession a = new_session(opts);
    const GameSession b = new_session(opts);
    EXPECT_EQ(a.hidden_secret(), b.hidden_secret());
    for (const auto& e : a.hidden_secret()) {
        EXPECT_GE(e, 1);
        EXPECT_LE(e, 5);
    }
    EXPECT_NE(new_session({4, std::nullopt, 8, 1'000'000}).hidden_secret(),
              new_session({4, std::nullopt, 7, 1'000'000}).hidden_secret());
}

TEST(NewSession, SeededDrawCoversRange) {
    std::set<BigInt> seen;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        for (const auto& e : random_secret(Dimension(4), seed, 3)) seen.insert(e);
    }
    EXPECT_EQ(seen, (std::set<BigInt>{1, 2, 3}));
}

TEST(NewSession, Errors) {
    EXPECT_THROW(new_session({4, SecretVector{0, 1, 1, 1}, std::nullopt, 9}), Error);
    try {
        new_session({3, SecretVector{1, 1, 1, 1}, std::nullopt, 9});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(Ask, RecordsResponses) {
    GameSession s("g", SecretVector{1, 1, 1, 1});
    EXPECT_EQ(s.ask(QuestionVector{2, 1, 1, 1}), 5);
    GameSession t("h", SecretVector{1, 2, 3, 4});
    EXPECT_EQ(t.ask(QuestionVector{1, 1, 1, 1}), 10);
    ASSERT_EQ(t.transcript().size(), 1u);
    EXPECT_EQ(t.transcript()[0].response, 10);
    EXPECT_THROW(t.ask(QuestionVector{1, 1}), Error);
}

TEST(Ask, GameOverAfterWin) {
    GameSession s("g", SecretVector{1, 1, 1, 1});
    EXPECT_TRUE(s.guess(SecretVector{1, 1, 1, 1}));
    EXPECT_EQ(s.status(), SessionStatus::won);
    try {
        s.ask(QuestionVector{1, 1, 1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GameOver);
    }
    EXPECT_THROW(s.guess(SecretVector{1, 1, 1, 1}), Error);
    EXPECT_THROW(s.reveal(), Error);
}

TEST(Guess, WrongGuessCounts) {
    GameSession s("g", SecretVector{1, 1, 1, 1});
    EXPECT_FALSE(s.guess(SecretVector{2, 1, 1, 1}));
    EXPECT_FALSE(s.guess(SecretVector{1, 2, 1, 1}));
    EXPECT_EQ(s.guesses_used(), 2u);
    EXPECT_TRUE(s.is_open());
    EXPECT_THROW(s.guess(SecretVector{1, 1, 1}), Error);
}

TEST(Reveal, TransitionsToRevealed) {
    GameSession s("g", SecretVector{3, 1});
    EXPECT_EQ(s.reveal(), (SecretVector{3, 1}));
    EXPECT_EQ(s.status(), SessionStatus::revealed);
    EXPECT_EQ(s.revealed_secret(), (SecretVector{3, 1}));
}

TEST(Session, ReplayReproducesTranscript) {
    oracle::Generator gen(5);
    GameSession s = new_session({5, std::nullopt, 99, 1000});
    for (int i = 0; i < 20; ++i) s.ask(QuestionVector(gen.vector(5, 100000)));
    for (const auto& round : s.transcript()) {
        EXPECT_EQ(scalar_product(round.question, s.hidden_secret()), round.response);
    }
    const GameSession restored =
        GameSession::restore("copy", s.hidden_secret(), s.transcript(), s.status(), s.guesses_used());
    EXPECT_EQ(restored.transcript(), s.transcript());

    Transcript forged;
    forged.add(QuestionVector{1, 1, 1, 1, 1}, 999999);
    EXPECT_THROW(GameSession::restore("x", s.hidden_secret(), forged, SessionStatus::open, 0), Error);
}

TEST(ParseDecimal, RejectsGarbage) {
    EXPECT_EQ(parse_decimal("-12"), -12);
    EXPECT_THROW(parse_decimal(""), Error);
    EXPECT_THROW(parse_decimal("1e5"), Error);
    EXPECT_THROW(parse_decimal(" 5"), Error);
    EXPECT_THROW(parse_decimal("-"), Error);
}

}  // namespace
}  // namespace secretgame
