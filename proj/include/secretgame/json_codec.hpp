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

#ifndef SECRETGAME_JSON_CODEC_HPP
#define SECRETGAME_JSON_CODEC_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "core.hpp"

// Wire encoding: every integer travels as a decimal string. Decoders also
// accept native JSON integers from lenient clients, but never emit them.
namespace secretgame::codec {

using json = nlohmann::json;

inline json encode(const BigInt& value) { return to_decimal(value); }

inline json encode(std::span<const BigInt> values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_decimal(v));
    return out;
}

template <class Tag>
json encode(const PositiveVector<Tag>& v) {
    return encode(v.entries());
}

inline BigInt decode_integer(const json& value, const std::string& field) {
    if (value.is_string()) {
        try {
            return parse_decimal(value.get<std::string>());
        } catch (const Error&) {
            throw Error(ErrorCode::MalformedRequest, "field '" + field + "' is not a decimal integer string");
        }
    }
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? BigInt(value.get<std::uint64_t>()) : BigInt(value.get<std::int64_t>());
    }
    throw Error(ErrorCode::MalformedRequest, "field '" + field + "' must be a decimal integer string");
}

inline std::vector<BigInt> decode_integers(const json& value, const std::string& field) {
    if (!value.is_array()) {
        throw Error(ErrorCode::MalformedRequest, "field '" + field + "' must be an array of decimal strings");
    }
    std::vector<BigInt> out;
    out.reserve(value.size());
    for (const auto& item : value) out.push_back(decode_integer(item, field));
    return out;
}

/// Decodes a small nonnegative count (dimension, bounds, seeds).
inline std::uint64_t decode_u64(const json& value, const std::string& field) {
    const BigInt v = decode_integer(value, field);
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorCode::MalformedRequest, "field '" + field + "' is out of range");
    }
    return v.convert_to<std::uint64_t>();
}

inline const json& require(const json& object, const char* field) {
    if (!object.is_object() || !object.contains(field)) {
        throw Error(ErrorCode::MalformedRequest, std::string("missing field '") + field + "'");
    }
    return object.at(field);
}

}  // namespace secretgame::codec

#endif  // SECRETGAME_JSON_CODEC_HPP
