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

#ifndef SECRETGAME_BIGINT_HPP
#define SECRETGAME_BIGINT_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace secretgame {

// Arbitrary precision signed integer. Adaptive follow-up questions grow like
// r^(n-1), so nothing in the library works in fixed width.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// Parses an optionally signed base-10 integer. Whitespace, exponents and
/// other radix prefixes are rejected.
inline BigInt parse_decimal(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw Error(ErrorCode::MalformedRequest, "expected a decimal integer, got '" + std::string(text) + "'");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw Error(ErrorCode::MalformedRequest, "expected a decimal integer, got '" + std::string(text) + "'");
        }
    }
    const BigInt value{std::string(digits)};
    return (text.front() == '-') ? BigInt(-value) : value;
}

}  // namespace secretgame

#endif  // SECRETGAME_BIGINT_HPP
