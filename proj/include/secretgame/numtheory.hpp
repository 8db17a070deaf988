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

#ifndef SECRETGAME_NUMTHEORY_HPP
#define SECRETGAME_NUMTHEORY_HPP

#include <set>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"

namespace secretgame {

/// gcd of two nonnegative integers; gcd(0, 0) = 0.
inline BigInt gcd(BigInt a, BigInt b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

/// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), in [0, m).
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = a % m, r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt quotient = old_r / r;
        old_r -= quotient * r;
        std::swap(old_r, r);
        old_s -= quotient * s;
        std::swap(old_s, s);
    }
    if (old_r != 1 && m != 1) {
        throw Error(ErrorCode::InvariantViolation, "mod_inverse: arguments are not coprime");
    }
    BigInt inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

// Trial division up to the integer square root. Basis values sit just above
// secret entries, so inputs stay small.
inline bool is_prime(const BigInt& m) {
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0 || m % 3 == 0) return false;
    for (BigInt d = 5; d * d <= m; d += 6) {
        if (m % d == 0 || m % (d + 2) == 0) return false;
    }
    return true;
}

/// Smallest prime strictly greater than m that is not in `excluded`.
inline BigInt next_prime_above(const BigInt& m, const std::set<BigInt>& excluded = {}) {
    BigInt candidate = m < 1 ? BigInt(2) : BigInt(m + 1);
    while (!is_prime(candidate) || excluded.contains(candidate)) {
        ++candidate;
    }
    return candidate;
}

/// Pairwise coprime a_1..a_n; when produced by coprime_basis_above(s),
/// also a_i > s_i.
struct CoprimeBasis {
    std::vector<BigInt> values;

    friend bool operator==(const CoprimeBasis&, const CoprimeBasis&) = default;
};

/// Greedy distinct primes: a_i = next_prime_above(s_i, {a_1..a_{i-1}}).
inline CoprimeBasis coprime_basis_above(const SecretVector& s) {
    CoprimeBasis basis;
    std::set<BigInt> taken;
    for (const auto& entry : s) {
        BigInt p = next_prime_above(entry, taken);
        taken.insert(p);
        basis.values.push_back(std::move(p));
    }
    return basis;
}

}  // namespace secretgame

#endif  // SECRETGAME_NUMTHEORY_HPP
