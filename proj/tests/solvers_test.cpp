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

#include <set>

#include <gtest/gtest.h>

#include "secretgame/solvers.hpp"
#include "support/oracles.hpp"

namespace secretgame {
namespace {

std::vector<std::vector<BigInt>> rows(const std::vector<QuestionVector>& qs) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& q : qs) out.push_back(q.to_vector());
    return out;
}

template <class F>
ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvariantViolation;
}

TEST(NonadaptiveQuestions, Examples) {
    EXPECT_EQ(rows(nonadaptive_questions(Dimension(4))),
              (std::vector<std::vector<BigInt>>{{2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2}}));
    EXPECT_EQ(rows(nonadaptive_questions(Dimension(1))), (std::vector<std::vector<BigInt>>{{2}}));
    EXPECT_EQ(rows(nonadaptive_questions(Dimension(2))), (std::vector<std::vector<BigInt>>{{2, 1}, {1, 2}}));
}

TEST(NonadaptiveQuestions, DeterminantIsNPlusOne) {
    for (std::size_t n = 1; n <= 8; ++n) {
        EXPECT_EQ(oracle::determinant(rows(nonadaptive_questions(Dimension(n)))), BigInt(n + 1)) << n;
    }
}

TEST(NonadaptiveSolve, Examples) {
    EXPECT_EQ(nonadaptive_solve(std::vector<BigInt>{5, 5, 5, 5}), (SecretVector{1, 1, 1, 1}));
    EXPECT_EQ(nonadaptive_solve(std::vector<BigInt>{11, 12, 13, 14}), (SecretVector{1, 2, 3, 4}));
    EXPECT_EQ(error_of([] { nonadaptive_solve(std::vector<BigInt>{1, 1, 1, 1}); }), ErrorCode::InconsistentResponses);
    // Divisible sum but a non-positive entry: (2, 2, 2, 9) sums to 15, s_sum = 3.
    EXPECT_EQ(error_of([] { nonadaptive_solve(std::vector<BigInt>{2, 2, 2, 9}); }), ErrorCode::InconsistentResponses);
    EXPECT_EQ(error_of([] { nonadaptive_solve(std::vector<BigInt>{}); }), ErrorCode::DimensionMismatch);
}

TEST(NonadaptiveSolve, ForwardResponsesForTheExampleSecret) {
    // w = 2s1 + s2 + s3 + s4 etc. for s = (1, 2, 3, 4).
    const SecretVector s{1, 2, 3, 4};
    std::vector<BigInt> responses;
    for (const auto& q : nonadaptive_questions(Dimension(4))) responses.push_back(scalar_product(q, s));
    EXPECT_EQ(responses, (std::vector<BigInt>{11, 12, 13, 14}));
}

TEST(NonadaptiveSolve, RoundTripAllDimensions) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto qs = nonadaptive_questions(Dimension(n));
        oracle::for_each_point(n, 3, [&](const oracle::Vec& point) {
            const SecretVector s(oracle::to_big(point));
            std::vector<BigInt> r;
            for (const auto& q : qs) r.push_back(scalar_product(q, s));
            EXPECT_EQ(nonadaptive_solve(r), s);
        });
    }
}

TEST(NonadaptiveSolve, MatchesFourQuestionFormulas) {
    oracle::Generator gen(9);
    for (int trial = 0; trial < 200; ++trial) {
        const SecretVector s(gen.vector(4, 1'000'000));
        std::vector<BigInt> r;
        for (const auto& q : nonadaptive_questions(Dimension(4))) r.push_back(scalar_product(q, s));
        EXPECT_EQ(nonadaptive_solve(r).to_vector(), oracle::four_question_formulas(r[0], r[1], r[2], r[3]));
    }
}

TEST(BuildDecodingQuestion, Examples) {
    const DecodingKey ones = build_decoding_question(SecretVector{1, 1, 1, 1});
    EXPECT_EQ(ones.question, (QuestionVector{105, 70, 42, 30}));
    EXPECT_EQ(ones.basis.values, (std::vector<BigInt>{2, 3, 5, 7}));

    const DecodingKey k = build_decoding_question(SecretVector{2, 3, 4, 5});
    EXPECT_EQ(k.question, (QuestionVector{385, 231, 165, 105}));
    EXPECT_EQ(k.basis.values, (std::vector<BigInt>{3, 5, 7, 11}));
    EXPECT_EQ(scalar_product(k.question, SecretVector{2, 3, 4, 5}), 2648);
    EXPECT_EQ(oracle::brute_force_solutions({385, 231, 165, 105}, 2648), (std::vector<oracle::Vec>{{2, 3, 4, 5}}));

    EXPECT_EQ(build_decoding_question(SecretVector{9}).question, (QuestionVector{1}));
}

TEST(BuildDecodingQuestion, DivisibilityStructure) {
    oracle::Generator gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = gen.dimension(1, 6);
        const SecretVector s(gen.vector(n, 40));
        const DecodingKey key = build_decoding_question(s);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(gcd(key.question[i], key.basis.values[i]), 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    EXPECT_EQ(key.question[j] % key.basis.values[i], 0);
                }
            }
        }
    }
}

TEST(BuildDecodingQuestion, DecodesAgainstBruteForce) {
    for (std::size_t n = 1; n <= 3; ++n) {
        oracle::for_each_point(n, 4, [&](const oracle::Vec& point) {
            const DecodingKey key = build_decoding_question(SecretVector(oracle::to_big(point)));
            EXPECT_TRUE(oracle::brute_force_decodes(oracle::to_vec(key.question.to_vector()), point));
        });
    }
}

TEST(CollisionWitness, Examples) {
    const CollisionWitness a = collision_witness(QuestionVector{1, 1, 1, 1});
    EXPECT_EQ(a.s, (SecretVector{1, 1, 2, 1}));
    EXPECT_EQ(a.t, (SecretVector{1, 1, 1, 2}));
    EXPECT_EQ(a.response, 5);

    const CollisionWitness b = collision_witness(QuestionVector{1, 5, 10, 20});
    EXPECT_EQ(b.s, (SecretVector{1, 1, 21, 1}));
    EXPECT_EQ(b.t, (SecretVector{1, 1, 1, 11}));
    EXPECT_EQ(b.response, 236);

    const CollisionWitness c = collision_witness(QuestionVector{3, 4});
    EXPECT_EQ(c.s, (SecretVector{5, 1}));
    EXPECT_EQ(c.t, (SecretVector{1, 4}));
    EXPECT_EQ(c.response, 19);

    EXPECT_EQ(error_of([] { collision_witness(QuestionVector{7}); }), ErrorCode::NoCollisionInDimensionOne);
}

TEST(CollisionWitness, AlwaysCollidesProperty) {
    oracle::Generator gen(13);
    for (int trial = 0; trial < 300; ++trial) {
        const QuestionVector q(gen.vector(gen.dimension(2, 7), trial < 150 ? 20 : 1'000'000'000'000ULL));
        const CollisionWitness w = collision_witness(q);
        EXPECT_NE(w.s, w.t);
        EXPECT_EQ(scalar_product(q, w.s), scalar_product(q, w.t));
        EXPECT_EQ(scalar_product(q, w.s), w.response);
        EXPECT_FALSE(decodes(q, w.s));
    }
}

TEST(AdaptiveFollowup, Examples) {
    const AdaptivePlan p = adaptive_followup(QuestionVector{1, 1, 1, 1}, 14);
    EXPECT_EQ(p.base, 15);
    EXPECT_EQ(p.followup, (QuestionVector{1, 15, 225, 3375}));

    const AdaptivePlan q = adaptive_followup(QuestionVector{1, 1}, 2);
    EXPECT_EQ(q.base, 3);
    EXPECT_EQ(q.followup, (QuestionVector{1, 3}));

    EXPECT_EQ(error_of([] { adaptive_followup(QuestionVector{1, 5, 10, 20}, 30); }), ErrorCode::InconsistentResponses);
}

TEST(AdaptiveDecode, Examples) {
    const AdaptivePlan p = adaptive_followup(QuestionVector{1, 1, 1, 1}, 14);
    EXPECT_EQ(adaptive_decode(p, 17822), (SecretVector{2, 3, 4, 5}));
    EXPECT_EQ(adaptive_decode(adaptive_followup(QuestionVector{1, 1}, 2), 4), (SecretVector{1, 1}));
    EXPECT_EQ(error_of([&] { adaptive_decode(p, 15); }), ErrorCode::InvalidDigit);
    // 5 digits: 1 + 15 + 225 + 3375 + 50625.
    EXPECT_EQ(error_of([&] { adaptive_decode(p, 54241); }), ErrorCode::InvalidDigit);
    EXPECT_EQ(error_of([&] { adaptive_decode(p, 0); }), ErrorCode::InvalidDigit);
}

TEST(AdaptiveSolve, Examples) {
    GameSession a("a", SecretVector{2, 3, 4, 5});
    EXPECT_EQ(adaptive_solve(a, QuestionVector{1, 1, 1, 1}), (SecretVector{2, 3, 4, 5}));
    EXPECT_EQ(a.transcript().size(), 2u);
    EXPECT_EQ(a.transcript()[0].response, 14);
    EXPECT_EQ(a.transcript()[1].response, 17822);

    GameSession b("b", SecretVector{1, 1, 1, 1});
    EXPECT_EQ(adaptive_solve(b, QuestionVector{1, 5, 10, 20}), (SecretVector{1, 1, 1, 1}));
    EXPECT_EQ(b.transcript()[0].response, 36);
    EXPECT_EQ(b.transcript()[1].question, (QuestionVector{1, 37, 1369, 50653}));

    GameSession c("c", SecretVector{7});
    EXPECT_EQ(adaptive_solve(c, QuestionVector{3}), (SecretVector{7}));
    EXPECT_EQ(c.transcript()[0].response, 21);
    EXPECT_EQ(c.transcript()[1].question, (QuestionVector{1}));

    GameSession done("d", SecretVector{1});
    done.reveal();
    EXPECT_EQ(error_of([&] { adaptive_solve(done, QuestionVector{1}); }), ErrorCode::GameOver);
}

TEST(AdaptiveSolve, FollowupInjectiveOnCandidates) {
    oracle::Generator gen(14);
    int checked = 0;
    while (checked < 100) {
        const std::size_t n = gen.dimension(2, 4);
        const QuestionVector q1(gen.vector(n, 4));
        const SecretVector s(gen.vector(n, 5));
        const BigInt r1 = scalar_product(q1, s);
        const CandidateSet c = enumerate_candidates(q1, r1, kUnlimited);
        if (c.size() < 2) continue;
        const AdaptivePlan plan = adaptive_followup(q1, r1);
        std::set<BigInt> seen;
        for (const auto& t : c.candidates) {
            EXPECT_TRUE(seen.insert(scalar_product(plan.followup, t)).second);
            EXPECT_EQ(adaptive_decode(plan, scalar_product(plan.followup, t)), t);
        }
        ++checked;
    }
}

TEST(SuggestQuestion, Nonadaptive) {
    Transcript t;
    EXPECT_EQ(suggest_question(t, Dimension(4), HintStrategy::nonadaptive), (QuestionVector{2, 1, 1, 1}));
    t.add(QuestionVector{2, 1, 1, 1}, 5);
    t.add(QuestionVector{1, 1, 2, 1}, 5);
    EXPECT_EQ(suggest_question(t, Dimension(4), HintStrategy::nonadaptive), (QuestionVector{1, 2, 1, 1}));
    t.add(QuestionVector{1, 2, 1, 1}, 5);
    t.add(QuestionVector{1, 1, 1, 2}, 5);
    EXPECT_EQ(error_of([&] { suggest_question(t, Dimension(4), HintStrategy::nonadaptive); }),
              ErrorCode::HintUnavailable);
}

TEST(SuggestQuestion, Followup) {
    Transcript t;
    EXPECT_EQ(error_of([&] { suggest_question(t, Dimension(4), HintStrategy::followup); }), ErrorCode::HintUnavailable);
    t.add(QuestionVector{1, 1, 1, 1}, 14);
    EXPECT_EQ(suggest_question(t, Dimension(4), HintStrategy::followup), (QuestionVector{1, 15, 225, 3375}));
    t.add(QuestionVector{1, 15, 225, 3375}, 17822);
    EXPECT_EQ(error_of([&] { suggest_question(t, Dimension(4), HintStrategy::followup); }), ErrorCode::HintUnavailable);
    EXPECT_EQ(error_of([] { parse_hint_strategy("greedy"); }), ErrorCode::MalformedRequest);
}

}  // namespace
}  // namespace secretgame
