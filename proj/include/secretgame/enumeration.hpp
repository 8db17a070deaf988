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

#ifndef SECRETGAME_ENUMERATION_HPP
#define SECRETGAME_ENUMERATION_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"
#include "numtheory.hpp"

namespace secretgame {

inline constexpr std::size_t kDefaultCandidateLimit = 10'000;
inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

enum class LimitMode {
    truncate,  // stop at the limit and set CandidateSet::truncated
    strict,    // throw CandidateLimitExceeded instead
};

/// Secrets consistent with some set of equations. When `truncated` is false
/// the list is every positive solution, in lexicographic order.
struct CandidateSet {
    std::vector<SecretVector> candidates;
    bool truncated = false;

    std::size_t size() const noexcept { return candidates.size(); }
    bool contains(const SecretVector& s) const {
        return std::find(candidates.begin(), candidates.end(), s) != candidates.end();
    }
};

namespace detail {

struct Equation {
    std::span<const BigInt> q;
    BigInt r;
};

// Depth-first search for all t >= 1 satisfying every q_k . t = r_k,
// lexicographic in (t_1, ..., t_n).
//
// Coordinate i ranges over 1..min_k (rem_k - sum_{j>i} q_kj) / q_ki, and
// only over values keeping each remainder divisible by the gcd of the
// remaining coefficients of its equation; the equation with the coarsest
// such progression drives the loop. The last two coordinates are solved in
// closed form: a 2x2 system when two equations are independent there,
// otherwise the positive solutions of a x + b y = c in ascending x.
//
// `visit` receives each solution and returns false to stop. run() returns
// false if the work budget (loop iterations) ran out first.
template <class Visitor>
class SolutionSearch {
public:
    SolutionSearch(const std::vector<Equation>& equations, Visitor& visit, std::size_t budget)
        : visit_(visit), budget_(budget) {
        n_ = equations.front().q.size();
        t_.resize(n_);
        for (const auto& eq : equations) {
            Prepared p{eq.q, eq.r, std::vector<BigInt>(n_ + 1, 0), std::vector<BigInt>(n_ + 1, 0)};
            for (std::size_t i = n_; i-- > 0;) {
                p.suffix_sum[i] = p.suffix_sum[i + 1] + eq.q[i];
                p.suffix_gcd[i] = gcd(p.suffix_gcd[i + 1], eq.q[i]);
            }
            eqs_.push_back(std::move(p));
        }
    }

    bool run() {
        std::vector<BigInt> rem;
        for (const auto& e : eqs_) {
            if (e.r < e.suffix_sum[0] || e.r % e.suffix_gcd[0] != 0) return true;
            rem.push_back(e.r);
        }
        descend(0, rem);
        return !exhausted_;
    }

private:
    struct Prepared {
        std::span<const BigInt> q;
        BigInt r;
        std::vector<BigInt> suffix_sum;
        std::vector<BigInt> suffix_gcd;
    };

    bool tick() {
        if (++used_ > budget_) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    bool emit() {
        for (std::size_t k = 1; k < eqs_.size(); ++k) {
            if (dot(eqs_[k].q, t_) != eqs_[k].r) return true;
        }
        return visit_(std::as_const(t_));
    }

    bool descend(std::size_t i, const std::vector<BigInt>& rem) {
        if (i + 1 == n_) return solve_last(i, rem);
        if (i + 2 == n_) return solve_pair(i, rem);

        BigInt upper = (rem[0] - eqs_[0].suffix_sum[i + 1]) / eqs_[0].q[i];
        std::size_t driver = 0;
        BigInt step = 0, first = 1;
        for (std::size_t k = 0; k < eqs_.size(); ++k) {
            const auto& e = eqs_[k];
            upper = std::min(upper, BigInt((rem[k] - e.suffix_sum[i + 1]) / e.q[i]));
            const BigInt& g = e.suffix_gcd[i + 1];
            const BigInt h = gcd(e.q[i], g);
            const BigInt k_step = g / h;
            if (k_step > step) {
                step = k_step;
                driver = k;
                first = k_step == 1 ? BigInt(1) : BigInt((rem[k] / h) % k_step * mod_inverse(e.q[i] / h, k_step) % k_step);
                if (first == 0) first = k_step;
            }
        }

        std::vector<BigInt> next(eqs_.size());
        for (BigInt v = first; v <= upper; v += step) {
            if (!tick()) return false;
            bool viable = true;
            for (std::size_t k = 0; k < eqs_.size(); ++k) {
                next[k] = rem[k] - v * eqs_[k].q[i];
                if (k != driver && next[k] % eqs_[k].suffix_gcd[i + 1] != 0) viable = false;
            }
            if (!viable) continue;
            t_[i] = v;
            if (!descend(i + 1, next)) return false;
        }
        return true;
    }

    bool solve_last(std::size_t i, const std::vector<BigInt>& rem) {
        if (!tick()) return false;
        if (rem[0] % eqs_[0].q[i] != 0) return true;
        t_[i] = rem[0] / eqs_[0].q[i];
        if (t_[i] < 1) return true;
        return emit();
    }

    bool solve_pair(std::size_t i, const std::vector<BigInt>& rem) {
        const BigInt& a0 = eqs_[0].q[i];
        const BigInt& b0 = eqs_[0].q[i + 1];
        for (std::size_t k = 1; k < eqs_.size(); ++k) {
            const BigInt& ak = eqs_[k].q[i];
            const BigInt& bk = eqs_[k].q[i + 1];
            const BigInt det = a0 * bk - ak * b0;
            if (det == 0) continue;
            if (!tick()) return false;
            const BigInt x_num = rem[0] * bk - rem[k] * b0;
            const BigInt y_num = a0 * rem[k] - ak * rem[0];
            if (x_num % det != 0 || y_num % det != 0) return true;
            t_[i] = x_num / det;
            t_[i + 1] = y_num / det;
            if (t_[i] < 1 || t_[i + 1] < 1) return true;
            return emit();
        }

        const BigInt g = gcd(a0, b0);
        const BigInt& c0 = rem[0];
        if (c0 % g != 0) return true;
        const BigInt a = a0 / g, b = b0 / g, c = c0 / g;
        if (c < a + b) return true;
        BigInt x = 1;
        if (b != 1) {
            x = (c % b) * mod_inverse(a, b) % b;
            if (x == 0) x = b;
        }
        const BigInt x_max = (c - b) / a;
        for (; x <= x_max; x += b) {
            if (!tick()) return false;
            t_[i] = x;
            t_[i + 1] = (c - a * x) / b;
            if (!emit()) return false;
        }
        return true;
    }

    Visitor& visit_;
    std::size_t budget_;
    std::size_t used_ = 0;
    bool exhausted_ = false;
    std::size_t n_ = 0;
    std::vector<Prepared> eqs_;
    std::vector<BigInt> t_;
};

template <class Visitor>
bool for_each_solution(const std::vector<Equation>& equations, Visitor visit,
                       std::size_t budget = std::numeric_limits<std::size_t>::max()) {
    SolutionSearch<Visitor> search(equations, visit, budget);
    return search.run();
}

template <class Visitor>
void for_each_solution(std::span<const BigInt> q, const BigInt& r, Visitor visit) {
    for_each_solution(std::vector<Equation>{{q, r}}, std::move(visit));
}

}  // namespace detail

/// All secrets t with q . t = r, capped at `limit` members.
inline CandidateSet enumerate_candidates(const QuestionVector& q, const Response& r,
                                         std::size_t limit = kDefaultCandidateLimit,
                                         LimitMode mode = LimitMode::truncate) {
    CandidateSet result;
    detail::for_each_solution(q.entries(), r, [&](const std::vector<BigInt>& t) {
        if (result.candidates.size() == limit) {
            result.truncated = true;
            return false;
        }
        result.candidates.emplace_back(t);
        return true;
    });
    if (result.truncated && mode == LimitMode::strict) {
        throw Error(ErrorCode::CandidateLimitExceeded,
                    "more than " + std::to_string(limit) + " candidates for response " + to_decimal(r));
    }
    return result;
}

namespace detail {

inline bool satisfies_all(const SecretVector& t, const Transcript& transcript, std::size_t skip) {
    for (std::size_t k = 0; k < transcript.size(); ++k) {
        if (k == skip) continue;
        if (scalar_product(transcript[k].question, t) != transcript[k].response) return false;
    }
    return true;
}

inline CandidateSet filter_by_base_round(const Transcript& transcript, std::size_t base, std::size_t limit) {
    CandidateSet raw = enumerate_candidates(transcript[base].question, transcript[base].response, limit);
    CandidateSet filtered;
    filtered.truncated = raw.truncated;
    for (auto& t : raw.candidates) {
        if (satisfies_all(t, transcript, base)) filtered.candidates.push_back(std::move(t));
    }
    return filtered;
}

inline CandidateSet joint_search(const Transcript& transcript, std::size_t limit, std::size_t budget) {
    std::vector<Equation> equations;
    for (const auto& round : transcript) equations.push_back({round.question.entries(), round.response});
    CandidateSet result;
    const bool finished = for_each_solution(
        equations,
        [&](const std::vector<BigInt>& t) {
            if (result.candidates.size() == limit) {
                result.truncated = true;
                return false;
            }
            result.candidates.emplace_back(t);
            return true;
        },
        budget);
    if (!finished) result.truncated = true;
    return result;
}

}  // namespace detail

inline constexpr std::size_t kDefaultSearchBudget = 2'000'000;

/// Secrets consistent with every round of a transcript, in lexicographic
/// order.
///
/// The first round is enumerated (up to `limit`) and filtered by the rest.
/// If that round alone has too many solutions, a search constrained by all
/// rounds at once runs for at most `budget` steps, and then each later round
/// is tried as the enumerated one. The first of these to finish under the
/// limit gives an exact answer. Otherwise the largest partial set found is
/// returned with truncated set; its size is a lower bound on the true count.
inline CandidateSet consistent_candidates(const Transcript& transcript, std::size_t limit = kDefaultCandidateLimit,
                                          LimitMode mode = LimitMode::truncate,
                                          std::size_t budget = kDefaultSearchBudget) {
    if (transcript.empty()) {
        throw Error(ErrorCode::EmptyTranscript, "cannot enumerate candidates of an empty transcript");
    }
    CandidateSet best = detail::filter_by_base_round(transcript, 0, limit);
    if (!best.truncated || transcript.size() == 1) {
        if (best.truncated && mode == LimitMode::strict) {
            throw Error(ErrorCode::CandidateLimitExceeded, "more than " + std::to_string(limit) + " candidates");
        }
        return best;
    }
    auto consider = [&](CandidateSet c) {
        if (!c.truncated || c.size() > best.size()) best = std::move(c);
        return !best.truncated;
    };
    if (consider(detail::joint_search(transcript, limit, budget))) return best;
    for (std::size_t base = 1; base < transcript.size(); ++base) {
        if (consider(detail::filter_by_base_round(transcript, base, limit))) return best;
    }
    if (mode == LimitMode::strict) {
        throw Error(ErrorCode::CandidateLimitExceeded,
                    "could not enumerate the candidates within " + std::to_string(limit) + " members");
    }
    return best;
}

/// True iff q . t = q . s has no positive solution t other than s. Stops
/// the search at the second solution.
inline bool decodes(const QuestionVector& q, const SecretVector& s) {
    const Response r = dot(q.entries(), s.entries());
    std::size_t found = 0;
    detail::for_each_solution(q.entries(), r, [&](const std::vector<BigInt>&) { return ++found < 2; });
    return found == 1;
}

}  // namespace secretgame

#endif  // SECRETGAME_ENUMERATION_HPP
