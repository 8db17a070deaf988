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

// Command-line front end: interactive play, machine demos of each strategy,
// key construction, collision witnesses, the quantifier lab, and the HTTP
// service.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "secretgame/http_server.hpp"
#include "secretgame/secretgame.hpp"

namespace {

using namespace secretgame;
using codec::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

struct CommonFlags {
    std::size_t dimension = kDefaultDimension;
    std::optional<std::uint64_t> seed;
    std::uint64_t max_entry = 9;
    std::string format = "text";
    std::vector<CLI::Option*> dimension_options;

    // An explicit secret fixes the dimension unless -n was given too.
    bool dimension_given() const {
        return std::any_of(dimension_options.begin(), dimension_options.end(),
                           [](const CLI::Option* o) { return o->count() > 0; });
    }

    bool structured() const { return format == "structured"; }
};

void add_format_flag(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output mode")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
}

void add_game_flags(CLI::App* cmd, CommonFlags& flags) {
    flags.dimension_options.push_back(cmd->add_option("-n,--dimension", flags.dimension, "Number of entries in the secret")
                                          ->check(CLI::PositiveNumber)
                                          ->capture_default_str());
    cmd->add_option("--seed", flags.seed, "Seed for the random secret");
    cmd->add_option("--max-entry", flags.max_entry, "Random secret entries are drawn from [1, max-entry]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::vector<BigInt> parse_all(const std::vector<std::string>& words) {
    std::vector<BigInt> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(parse_decimal(w));
    return out;
}

std::string candidates_phrase(const CandidateSet& c) {
    if (c.truncated) return "(>= " + std::to_string(c.size()) + " candidates remain)";
    return "(" + std::to_string(c.size()) + (c.size() == 1 ? " candidate remains)" : " candidates remain)");
}

SessionOptions session_options(const CommonFlags& flags, const std::vector<std::string>& secret_words) {
    SessionOptions options;
    options.dimension = flags.dimension;
    options.seed = flags.seed;
    options.max_entry = flags.max_entry;
    if (!secret_words.empty()) {
        options.secret = SecretVector(parse_all(secret_words));
        if (!flags.dimension_given()) options.dimension = options.secret->size();
    }
    return options;
}

// ---------------------------------------------------------------------------
// play
// ---------------------------------------------------------------------------

int cmd_play(const CommonFlags& flags, const std::vector<std::string>& secret_words, bool show_count,
             std::istream& in, std::ostream& out) {
    GameSession session = new_session(session_options(flags, secret_words));
    const std::size_t n = session.dimension().value();
    out << "Suzy holds a secret of " << n << " positive integers.\n"
        << "commands: ask <" << n << " numbers> | guess <" << n
        << " numbers> | hint [nonadaptive|followup] | reveal | quit\n";

    std::string line;
    while (out << "> " << std::flush, std::getline(in, line)) {
        std::istringstream words(line);
        std::string command;
        if (!(words >> command)) continue;
        std::vector<std::string> args;
        for (std::string w; words >> w;) args.push_back(w);

        try {
            if (command == "quit" || command == "exit") {
                return kExitOk;
            }
            if (command == "reveal") {
                out << "the secret was " << session.reveal() << "\n";
                return kExitOk;
            }
            if (command == "hint") {
                HintStrategy strategy = session.transcript().size() == 1 ? HintStrategy::followup
                                                                         : HintStrategy::nonadaptive;
                if (!args.empty()) strategy = parse_hint_strategy(args[0]);
                const QuestionVector q = suggest_question(session.transcript(), session.dimension(), strategy);
                out << "hint: ask";
                for (const auto& e : q) out << " " << to_decimal(e);
                out << "\n";
                continue;
            }
            if (command != "ask" && command != "guess") {
                out << "unknown command '" << command << "'\n";
                continue;
            }
            if (args.size() != n) {
                out << "expected " << n << " numbers (dimension is " << n << "), got " << args.size() << "\n";
                continue;
            }
            if (command == "ask") {
                const Response r = session.ask(QuestionVector(parse_all(args)));
                out << to_decimal(r);
                if (show_count) {
                    out << " " << candidates_phrase(consistent_candidates(session.transcript(), kDefaultCandidateLimit));
                }
                out << "\n";
            } else if (session.guess(SecretVector(parse_all(args)))) {
                out << "correct! the secret is " << *session.revealed_secret() << " (" << session.transcript().size()
                    << " questions, " << session.guesses_used() << " wrong guesses)\n";
                return kExitOk;
            } else {
                out << "wrong guess (" << session.guesses_used() << " so far)\n";
            }
        } catch (const Error& e) {
            out << "error: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// demo
// ---------------------------------------------------------------------------

int cmd_demo(const CommonFlags& flags, const std::string& strategy, const std::vector<std::string>& secret_words,
             const std::vector<std::string>& first_words, std::ostream& out) {
    GameSession session = new_session(session_options(flags, secret_words));
    const Dimension n = session.dimension();
    json steps = json::array();
    json doc{{"strategy", strategy}, {"n", std::to_string(n.value())}};

    auto ask = [&](const QuestionVector& q) {
        const Response r = session.ask(q);
        steps.push_back({{"question", codec::encode(q)}, {"response", codec::encode(r)}});
        if (!flags.structured()) {
            out << "Q" << session.transcript().size() << ": ask " << q << " -> " << to_decimal(r) << "\n";
        }
        return r;
    };

    if (!flags.structured()) out << "strategy: " << strategy << " (n = " << n.value() << ")\n";

    std::optional<SecretVector> recovered;
    if (strategy == "nonadaptive") {
        std::vector<Response> responses;
        for (const auto& q : nonadaptive_questions(n)) responses.push_back(ask(q));
        recovered = nonadaptive_solve(responses);
    } else if (strategy == "adaptive") {
        const QuestionVector q1 = first_words.empty() ? QuestionVector(std::vector<BigInt>(n.value(), 1))
                                                      : QuestionVector(parse_all(first_words));
        const Response r1 = ask(q1);
        const AdaptivePlan plan = adaptive_followup(q1, r1);
        doc["base"] = codec::encode(plan.base);
        if (!flags.structured()) out << "    base B = " << to_decimal(plan.base) << ", follow-up " << plan.followup << "\n";
        const Response r2 = ask(plan.followup);
        recovered = adaptive_decode(plan, r2);
        if (scalar_product(q1, *recovered) != r1) {
            throw Error(ErrorCode::InvariantViolation, "decoded secret does not reproduce the first response");
        }
    } else {
        // The key is built from the secret itself.
        const DecodingKey key = build_decoding_question(session.hidden_secret());
        doc["basis"] = codec::encode(std::span<const BigInt>(key.basis.values));
        if (!flags.structured()) {
            out << "    coprime basis " << format_tuple(key.basis.values)
                << " (built from the secret: one key per lock, not a master key)\n";
        }
        const Response r = ask(key.question);
        const CandidateSet c = enumerate_candidates(key.question, r, 2);
        if (c.size() != 1) {
            throw Error(ErrorCode::InvariantViolation, "decoding question left " + std::to_string(c.size()) + " candidates");
        }
        recovered = c.candidates.front();
    }

    const bool ok = recovered && session.guess(*recovered);
    doc["questions"] = std::move(steps);
    doc["recovered"] = codec::encode(*recovered);
    doc["questions_used"] = std::to_string(session.transcript().size());
    doc["correct"] = ok;
    if (flags.structured()) {
        out << doc.dump(2) << "\n";
    } else {
        out << "recovered " << *recovered << " in " << session.transcript().size() << " question"
            << (session.transcript().size() == 1 ? "" : "s") << (ok ? "" : "  MISMATCH") << "\n";
    }
    return ok ? kExitOk : kExitInternal;
}

// ---------------------------------------------------------------------------
// buildkey / collide / lab
// ---------------------------------------------------------------------------

int cmd_buildkey(const CommonFlags& flags, const std::vector<std::string>& secret_words, std::ostream& out) {
    const SecretVector s(parse_all(secret_words));
    const DecodingKey key = build_decoding_question(s);
    if (!decodes(key.question, s)) {
        throw Error(ErrorCode::InvariantViolation, "constructed question does not decode the secret");
    }
    if (flags.structured()) {
        out << json{{"secret", codec::encode(s)},
                    {"question", codec::encode(key.question)},
                    {"basis", codec::encode(std::span<const BigInt>(key.basis.values))}}
                   .dump(2)
            << "\n";
    } else {
        out << "q = " << key.question << ", basis " << format_tuple(key.basis.values) << "\n";
    }
    return kExitOk;
}

int cmd_collide(const CommonFlags& flags, const std::vector<std::string>& question_words, std::ostream& out) {
    const QuestionVector q(parse_all(question_words));
    const CollisionWitness w = collision_witness(q);
    if (w.s == w.t || scalar_product(q, w.t) != w.response) {
        throw Error(ErrorCode::InvariantViolation, "collision witness failed");
    }
    if (flags.structured()) {
        out << json{{"question", codec::encode(q)},
                    {"s", codec::encode(w.s)},
                    {"t", codec::encode(w.t)},
                    {"response", codec::encode(w.response)}}
                   .dump(2)
            << "\n";
    } else {
        out << "s=" << format_tuple(w.s.entries(), ",") << " t=" << format_tuple(w.t.entries(), ",")
            << " response=" << to_decimal(w.response) << "\n";
    }
    return kExitOk;
}

int cmd_lab(const CommonFlags& flags, const std::string& statement_text, std::optional<std::uint64_t> q_max,
            std::uint64_t s_max, std::size_t rows, std::ostream& out) {
    const Statement statement = parse_statement(statement_text);
    BoundedUniverse u{flags.dimension, q_max, s_max};
    if (statement == Statement::exists_forall && !q_max) {
        throw Error(ErrorCode::MalformedRequest, "exists_forall needs --qmax");
    }
    const QuantifierReport report = evaluate(statement, u);
    out << render_report(report, flags.structured() ? ReportFormat::structured : ReportFormat::text, rows);
    if (flags.structured()) out << "\n";
    return kExitOk;
}

std::string env_or(const char* name, std::string fallback) {
    const char* value = std::getenv(name);
    return value && *value ? std::string(value) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secret-sequence scalar-product game: play, strategies, and the quantifier lab"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::vector<std::string> vec_a, vec_b;
    std::string strategy = "adaptive";
    std::string statement;
    std::optional<std::uint64_t> q_max;
    std::uint64_t s_max = 1;
    std::size_t rows = 20;
    bool no_count = false;
    std::string host = env_or("HOST", "127.0.0.1");
    int port = std::stoi(env_or("PORT", "8080"));
    std::optional<std::string> static_dir;

    auto* play = app.add_subcommand("play", "Play Quentin against a hidden secret (reads commands from stdin)");
    add_game_flags(play, flags);
    play->add_option("--secret", vec_a, "Fix the secret instead of drawing one")->expected(1, -1);
    play->add_flag("--no-count", no_count, "Skip the surviving-candidate count after each answer");

    auto* demo = app.add_subcommand("demo", "Let the machine play one strategy on both sides");
    add_game_flags(demo, flags);
    add_format_flag(demo, flags);
    demo->add_option("--strategy", strategy, "Strategy")
        ->check(CLI::IsMember({"nonadaptive", "adaptive", "onekey"}))
        ->capture_default_str();
    demo->add_option("--secret", vec_a, "Secret entries (otherwise drawn from --seed)")->expected(1, -1);
    demo->add_option("--first", vec_b, "First question for the adaptive strategy (default all ones)")->expected(1, -1);

    auto* buildkey = app.add_subcommand("buildkey", "Build the coprime-product question that decodes a secret");
    add_format_flag(buildkey, flags);
    buildkey->add_option("secret", vec_a, "Secret entries")->required();

    auto* collide = app.add_subcommand("collide", "Show two secrets a question cannot tell apart");
    add_format_flag(collide, flags);
    collide->add_option("question", vec_a, "Question entries")->required();

    auto* lab = app.add_subcommand("lab", "Evaluate exists_forall or forall_exists over a bounded universe");
    add_format_flag(lab, flags);
    lab->add_option("statement", statement, "exists_forall | forall_exists")
        ->required()
        ->check(CLI::IsMember({"exists_forall", "forall_exists"}));
    lab->add_option("-n,--dimension", flags.dimension, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
    lab->add_option("--qmax", q_max, "Questions range over [1, qmax]^n");
    lab->add_option("--smax", s_max, "Secrets range over [1, smax]^n")->required()->check(CLI::PositiveNumber);
    lab->add_option("--rows", rows, "Evidence rows shown in text output")->capture_default_str();

    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP JSON service");
    serve_cmd->add_option("--host", host, "Bind address (env HOST)")->capture_default_str();
    serve_cmd->add_option("--port", port, "Port (env PORT)")->capture_default_str();
    serve_cmd->add_option("--static-dir", static_dir, "Serve web client files from this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*play) return cmd_play(flags, vec_a, !no_count, std::cin, std::cout);
        if (*demo) return cmd_demo(flags, strategy, vec_a, vec_b, std::cout);
        if (*buildkey) return cmd_buildkey(flags, vec_a, std::cout);
        if (*collide) return cmd_collide(flags, vec_a, std::cout);
        if (*lab) return cmd_lab(flags, statement, q_max, s_max, rows, std::cout);
        if (*serve_cmd) {
            GameService service;
            return serve(service, host, port, static_dir) ? kExitOk : kExitUsage;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InvariantViolation ? kExitInternal : kExitUsage;
    }
    return kExitUsage;
}
