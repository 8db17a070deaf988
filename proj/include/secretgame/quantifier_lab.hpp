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

#ifndef SECRETGAME_QUANTIFIER_LAB_HPP
#define SECRETGAME_QUANTIFIER_LAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"
#include "enumeration.hpp"
#include "json_codec.hpp"
#include "solvers.hpp"

namespace secretgame {

enum class Statement {
    exists_forall,  // some question decodes every secret
    forall_exists,  // every secret is decoded by some question
};

constexpr std::string_view to_string(Statement s) noexcept {
    return s == Statement::exists_forall ? "exists_forall" : "forall_exists";
}

inline Statement parse_statement(std::string_view text) {
    if (text == "exists_forall") return Statement::exists_forall;
    if (text == "forall_exists") return Statement::forall_exists;
    throw Error(ErrorCode::MalformedRequest,
                "unknown statement '" + std::string(text) + "' (expected exists_forall or forall_exists)");
}

/// Questions range over [1, q_max]^n and secrets over [1, s_max]^n. The
/// decoding predicate itself is never bounded: its inner "for all t" is
/// decided by exact enumeration. q_max is unused by forall_exists, whose
/// witnesses come from the coprime construction.
struct BoundedUniverse {
    std::size_t n = kDefaultDimension;
    std::optional<std::uint64_t> q_max;
    std::uint64_t s_max = 1;

    friend bool operator==(const BoundedUniverse&, const BoundedUniverse&) = default;
};

/// One outer-quantifier element and what happened to it.
///
/// exists_forall: outer is a question. `inner` is a secret it fails to
/// decode, or empty when it decoded the whole secret grid.
/// forall_exists: outer is a secret and `inner` the question decoding it.
struct EvidenceRow {
    std::vector<BigInt> outer;
    std::optional<std::vector<BigInt>> inner;
    bool decodes = false;

    friend bool operator==(const EvidenceRow&, const EvidenceRow&) = default;
};

struct QuantifierReport {
    Statement statement = Statement::exists_forall;
    BoundedUniverse universe;
    bool verdict = false;
    std::vector<EvidenceRow> evidence;
    bool matches_unbounded = true;
    std::string unbounded_note;

    friend bool operator==(const QuantifierReport&, const QuantifierReport&) = default;
};

/// Calls visit(point) for every point of [1, max]^n in lexicographic order.
template <class Visitor>
void for_each_grid_point(std::size_t n, std::uint64_t max, Visitor&& visit) {
    if (n == 0 || max == 0) return;
    std::vector<std::uint64_t> digits(n, 1);
    std::vector<BigInt> point(n, 1);
    while (true) {
        visit(std::as_const(point));
        std::size_t i = n;
        while (i > 0 && digits[i - 1] == max) {
            digits[i - 1] = 1;
            point[i - 1] = 1;
            --i;
        }
        if (i == 0) return;
        ++digits[i - 1];
        point[i - 1] = digits[i - 1];
    }
}

namespace detail {

inline bool fits_grid(const SecretVector& s, std::uint64_t s_max) {
    for (const auto& e : s) {
        if (e > s_max) return false;
    }
    return true;
}

// A secret in [1, s_max]^n that q fails to decode, if any. The collision
// witness is tried first; otherwise the grid is scanned in order.
inline std::optional<SecretVector> failing_secret(const QuestionVector& q, std::uint64_t s_max) {
    if (q.size() >= 2) {
        const CollisionWitness w = collision_witness(q);
        for (const SecretVector* candidate : {&w.s, &w.t}) {
            if (fits_grid(*candidate, s_max) && !decodes(q, *candidate)) return *candidate;
        }
    }
    std::optional<SecretVector> found;
    bool done = false;
    for_each_grid_point(q.size(), s_max, [&](const std::vector<BigInt>& point) {
        if (done) return;
        SecretVector s(point);
        if (!decodes(q, s)) {
            found = std::move(s);
            done = true;
        }
    });
    return found;
}

}  // namespace detail

inline QuantifierReport eval_exists_forall(const BoundedUniverse& u) {
    if (!u.q_max || *u.q_max < 1 || u.s_max < 1) {
        throw Error(ErrorCode::MalformedRequest, "exists_forall needs q_max >= 1 and s_max >= 1");
    }
    const Dimension n(u.n);
    QuantifierReport report{Statement::exists_forall, u, false, {}, true, {}};
    std::optional<std::vector<BigInt>> first_key;
    for_each_grid_point(n.value(), *u.q_max, [&](const std::vector<BigInt>& point) {
        const QuestionVector q(point);
        auto failing = detail::failing_secret(q, u.s_max);
        if (failing) {
            report.evidence.push_back(EvidenceRow{point, failing->to_vector(), false});
        } else {
            report.evidence.push_back(EvidenceRow{point, std::nullopt, true});
            if (!first_key) first_key = point;
        }
    });
    report.verdict = first_key.has_value();

    const std::string grid = "q in [1," + std::to_string(*u.q_max) + "]^" + std::to_string(u.n) +
                             ", s in [1," + std::to_string(u.s_max) + "]^" + std::to_string(u.n);
    if (u.n == 1) {
        report.matches_unbounded = true;
        report.unbounded_note =
            "boundary case n = 1: q.t = q.s forces t = s, so every question is a master key here and in the "
            "unbounded universe; the unbounded statement is FALSE only for n >= 2";
    } else if (report.verdict) {
        report.matches_unbounded = false;
        report.unbounded_note = "bounded artifact: " + grid + " is too small to hold the collision witnesses, so " +
                                format_tuple(*first_key) +
                                " looks like a master key; in the unbounded universe the statement is FALSE for "
                                "n >= 2 (s = (1,..,1+q_n,1) and t = (1,..,1,1+q_{n-1}) always collide)";
    } else {
        report.matches_unbounded = true;
        report.unbounded_note =
            "agrees with the unbounded universe: for n >= 2 no question decodes every secret, since "
            "s = (1,..,1+q_n,1) and t = (1,..,1,1+q_{n-1}) always collide";
    }
    return report;
}

inline QuantifierReport eval_forall_exists(const BoundedUniverse& u) {
    if (u.s_max < 1) {
        throw Error(ErrorCode::MalformedRequest, "forall_exists needs s_max >= 1");
    }
    const Dimension n(u.n);
    QuantifierReport report{Statement::forall_exists, u, true, {}, true, {}};
    for_each_grid_point(n.value(), u.s_max, [&](const std::vector<BigInt>& point) {
        const SecretVector s(point);
        const DecodingKey key = build_decoding_question(s);
        const bool ok = decodes(key.question, s);
        report.evidence.push_back(EvidenceRow{point, key.question.to_vector(), ok});
        if (!ok) report.verdict = false;
    });
    report.matches_unbounded = report.verdict;
    report.unbounded_note =
        report.verdict
            ? "agrees with the unbounded universe: the coprime-product question decodes every secret; witnesses "
              "are not restricted to [1,q_max]^n"
            : "construction failure: a coprime-product question did not decode its secret";
    return report;
}

inline QuantifierReport evaluate(Statement statement, const BoundedUniverse& u) {
    return statement == Statement::exists_forall ? eval_exists_forall(u) : eval_forall_exists(u);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

enum class ReportFormat { text, structured };

inline codec::json report_to_json(const QuantifierReport& report) {
    using codec::json;
    json universe = {{"n", std::to_string(report.universe.n)}, {"s_max", std::to_string(report.universe.s_max)}};
    if (report.universe.q_max) universe["q_max"] = std::to_string(*report.universe.q_max);

    const bool ef = report.statement == Statement::exists_forall;
    json rows = json::array();
    for (const auto& row : report.evidence) {
        json r;
        r[ef ? "question" : "secret"] = codec::encode(std::span<const BigInt>(row.outer));
        if (row.inner) r[ef ? "secret" : "question"] = codec::encode(std::span<const BigInt>(*row.inner));
        r["decodes"] = row.decodes;
        rows.push_back(std::move(r));
    }
    return json{{"statement", std::string(to_string(report.statement))},
                {"universe", std::move(universe)},
                {"verdict", report.verdict},
                {"evidence", std::move(rows)},
                {"matches_unbounded", report.matches_unbounded},
                {"unbounded_note", report.unbounded_note}};
}

inline QuantifierReport report_from_json(const codec::json& doc) {
    QuantifierReport report;
    report.statement = parse_statement(codec::require(doc, "statement").get<std::string>());
    const auto& u = codec::require(doc, "universe");
    report.universe.n = codec::decode_u64(codec::require(u, "n"), "n");
    report.universe.s_max = codec::decode_u64(codec::require(u, "s_max"), "s_max");
    if (u.contains("q_max")) report.universe.q_max = codec::decode_u64(u.at("q_max"), "q_max");
    report.verdict = codec::require(doc, "verdict").get<bool>();
    report.matches_unbounded = codec::require(doc, "matches_unbounded").get<bool>();
    report.unbounded_note = codec::require(doc, "unbounded_note").get<std::string>();

    const bool ef = report.statement == Statement::exists_forall;
    const char* outer_key = ef ? "question" : "secret";
    const char* inner_key = ef ? "secret" : "question";
    for (const auto& r : codec::require(doc, "evidence")) {
        EvidenceRow row;
        row.outer = codec::decode_integers(codec::require(r, outer_key), outer_key);
        if (r.contains(inner_key)) row.inner = codec::decode_integers(r.at(inner_key), inner_key);
        row.decodes = codec::require(r, "decodes").get<bool>();
        report.evidence.push_back(std::move(row));
    }
    return report;
}

/// Text form: a headline in quantifier notation ("∃q ∀s : FALSE"), the
/// unbounded note, then at most `max_rows` evidence rows. Structured form is
/// the wire JSON.
inline std::string render_report(const QuantifierReport& report, ReportFormat format = ReportFormat::text,
                                 std::size_t max_rows = 20) {
    if (format == ReportFormat::structured) return report_to_json(report).dump(2);

    const auto& u = report.universe;
    const bool ef = report.statement == Statement::exists_forall;
    std::string out = ef ? "∃q ∀s : " : "∀s ∃q : ";
    out += report.verdict ? "TRUE" : "FALSE";
    out += "   (n = " + std::to_string(u.n);
    if (ef && u.q_max) out += ", q in [1," + std::to_string(*u.q_max) + "]^" + std::to_string(u.n);
    out += ", s in [1," + std::to_string(u.s_max) + "]^" + std::to_string(u.n) + ")\n";
    out += std::string("unbounded: ") + (report.matches_unbounded ? "matches" : "DIVERGES") + " - " +
           report.unbounded_note + "\n";

    const std::size_t shown = std::min(max_rows, report.evidence.size());
    out += "evidence: " + std::to_string(report.evidence.size()) + " rows";
    if (shown < report.evidence.size()) out += ", showing " + std::to_string(shown);
    out += "\n";
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& row = report.evidence[i];
        if (ef) {
            out += "  q=" + format_tuple(row.outer, ",");
            out += row.inner ? "  fails on s=" + format_tuple(*row.inner, ",") : std::string("  decodes every s");
        } else {
            out += "  s=" + format_tuple(row.outer, ",") + "  decoded by q=" + format_tuple(*row.inner, ",");
            if (!row.decodes) out += "  (FAILED)";
        }
        out += "\n";
    }
    return out;
}

}  // namespace secretgame

#endif  // SECRETGAME_QUANTIFIER_LAB_HPP
