/*
 * Copyright 2026 The ltsdiamond Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ltsdiamond/aut.hpp"
#include "ltsdiamond/detector.hpp"
#include "ltsdiamond/diamond_label.hpp"
#include "ltsdiamond/dot.hpp"
#include "ltsdiamond/equivalence.hpp"
#include "ltsdiamond/generator.hpp"
#include "ltsdiamond/oracle.hpp"
#include "ltsdiamond/reducer.hpp"

namespace ltsdiamond::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
}

/// 64-bit FNV-1a, as 16 hex digits.
std::string digest(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

std::size_t default_max_size() {
    const char* env = std::getenv("DIAMOND_MAX_SIZE");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxSize;
    }
    char* end = nullptr;
    auto value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) {
        throw UsageError("DIAMOND_MAX_SIZE must be a positive integer");
    }
    return static_cast<std::size_t>(value);
}

Lts load_lts(const std::string& path, std::string* bytes, std::ostream& err) {
    auto text = read_file(path);
    std::vector<AutWarning> warnings;
    auto lts = parse_aut(text, &warnings);
    for (const auto& w : warnings) {
        err << "warning: " << path << ":" << w.line << ": " << w.message << "\n";
    }
    if (bytes != nullptr) {
        *bytes = std::move(text);
    }
    return lts;
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json convergence_json(const Convergence& c, const Alphabet& alphabet) {
    Json j;
    j["type"] = "convergence";
    j["source"] = c.source;
    j["target"] = c.target;
    j["strict"] = c.strict;
    j["size"] = c.diamond.size();
    j["label"] = format_label(c.diamond, alphabet);
    return j;
}

std::string targets_text(const std::vector<StateId>& targets) {
    if (targets.empty()) {
        return "none";
    }
    std::string text;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        text += (i > 0 ? " " : "") + std::to_string(targets[i]);
    }
    return text;
}

struct Options {
    std::string input;
    std::string output;
    std::string dot;
    std::optional<StateId> target;
    std::size_t max_size = kDefaultMaxSize;
    std::size_t oracle_max_size = 6;
    unsigned threads = 0;
    bool json = false;
    bool strict_cap = false;
    bool maximal = false;
    bool timing = false;
    std::string diamond;
    std::string prefix;
    std::string suffix;
    bool unfold = false;
};

int cmd_find(const Options& o, std::ostream& out, std::ostream& err) {
    auto start = Clock::now();
    std::string bytes;
    auto lts = load_lts(o.input, &bytes, err);
    DetectorOptions detector;
    detector.max_size = o.max_size;
    detector.threads = o.threads;

    FindResult found;
    if (o.target) {
        if (*o.target >= lts.state_count()) {
            throw UsageError("--target " + std::to_string(*o.target) + " is not a state");
        }
        auto table = find_diamonds_to(lts, *o.target, detector);
        std::vector<std::pair<std::string, Convergence>> keyed;
        for (const auto& c : table.entries()) {
            keyed.emplace_back(format_label(c.diamond, lts.alphabet()), c);
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
            return std::tie(x.second.source, x.first) < std::tie(y.second.source, y.first);
        });
        for (auto& [label, c] : keyed) {
            found.convergences.push_back(std::move(c));
        }
        if (table.truncated()) {
            found.truncated_targets.push_back(*o.target);
        }
    } else {
        found = find_all_diamonds(lts, detector);
    }
    auto convergences = o.maximal ? maximal_strict(found.convergences) : found.convergences;

    if (o.json) {
        Json header;
        header["type"] = "header";
        header["command"] = "find";
        header["input_digest"] = digest(bytes);
        header["states"] = lts.state_count();
        header["transitions"] = lts.transition_count();
        header["max_size"] = o.max_size;
        out << header.dump() << "\n";
        for (const auto& c : convergences) {
            out << convergence_json(c, lts.alphabet()).dump() << "\n";
        }
        Json summary;
        summary["type"] = "summary";
        summary["convergences"] = convergences.size();
        summary["truncated_targets"] = found.truncated_targets;
        if (o.timing) {
            summary["elapsed_ms"] = elapsed_ms(start);
        }
        out << summary.dump() << "\n";
    } else {
        out << "input " << digest(bytes) << " (" << lts.state_count() << " states, " << lts.transition_count()
            << " transitions)\n";
        out << std::left << std::setw(8) << "source" << std::setw(8) << "target" << std::setw(12) << "kind"
            << "label\n";
        for (const auto& c : convergences) {
            out << std::left << std::setw(8) << c.source << std::setw(8) << c.target << std::setw(12)
                << (c.strict ? "strict" : "non-strict") << format_label(c.diamond, lts.alphabet()) << "\n";
        }
        out << convergences.size() << " convergences; truncated targets: " << targets_text(found.truncated_targets)
            << "\n";
        if (o.timing) {
            out << "elapsed " << elapsed_ms(start) << " ms\n";
        }
    }
    if (!found.truncated_targets.empty()) {
        err << "warning: size cap " << o.max_size << " reached for " << found.truncated_targets.size()
            << " target(s)\n";
        if (o.strict_cap) {
            return kTruncated;
        }
    }
    return kSuccess;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
    auto start = Clock::now();
    std::string bytes;
    auto lts = load_lts(o.input, &bytes, err);
    ReduceOptions options;
    options.max_size = o.max_size;
    options.threads = o.threads;
    auto result = reduce(lts, options);
    write_file(o.output, write_reduced_aut(result.reduced));
    if (!o.dot.empty()) {
        write_file(o.dot, write_dot(result.reduced));
    }
    if (o.json) {
        Json summary;
        summary["type"] = "summary";
        summary["command"] = "reduce";
        summary["input_digest"] = digest(bytes);
        summary["states_before"] = lts.state_count();
        summary["transitions_before"] = lts.transition_count();
        summary["states_after"] = result.reduced.state_count();
        summary["transitions_after"] = result.reduced.edges().size();
        summary["macro_edges"] = result.reduced.macro_count();
        summary["skipped"] = result.skipped.size();
        summary["truncated_targets"] = result.truncated_targets;
        if (o.timing) {
            summary["elapsed_ms"] = elapsed_ms(start);
        }
        out << summary.dump() << "\n";
    } else {
        out << "states " << lts.state_count() << " -> " << result.reduced.state_count() << ", transitions "
            << lts.transition_count() << " -> " << result.reduced.edges().size() << ", macro edges "
            << result.reduced.macro_count() << ", skipped " << result.skipped.size() << "\n";
        for (const auto& c : result.rewritten) {
            out << "macro " << result.new_index[c.source] << " -> " << result.new_index[c.target] << " "
                << format_label(c.diamond, lts.alphabet()) << "\n";
        }
        if (o.timing) {
            out << "elapsed " << elapsed_ms(start) << " ms\n";
        }
    }
    if (!result.truncated_targets.empty()) {
        err << "warning: size cap " << o.max_size << " reached for " << result.truncated_targets.size()
            << " target(s)\n";
        if (o.strict_cap) {
            return kTruncated;
        }
    }
    return kSuccess;
}

int cmd_expand(const Options& o, std::ostream& out, std::ostream&) {
    auto reduced = parse_reduced_aut(read_file(o.input));
    auto lts = expand(reduced);
    write_file(o.output, write_aut(lts));
    out << "states " << reduced.state_count() << " -> " << lts.state_count() << ", transitions "
        << reduced.edges().size() << " -> " << lts.transition_count() << "\n";
    return kSuccess;
}

int cmd_minimize(const Options& o, std::ostream& out, std::ostream& err) {
    auto lts = load_lts(o.input, nullptr, err);
    auto minimal = minimize(lts);
    write_file(o.output, write_aut(minimal));
    out << "states " << lts.state_count() << " -> " << minimal.state_count() << ", transitions "
        << lts.transition_count() << " -> " << minimal.transition_count() << "\n";
    return kSuccess;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
    Alphabet alphabet;
    std::vector<LabelWarning> warnings;
    GenSpec spec;
    spec.diamond = parse_label(o.diamond, alphabet, &warnings);
    for (const auto& w : warnings) {
        err << "warning: " << w.message << "\n";
    }
    if (spec.diamond.empty()) {
        throw UsageError("--diamond must not be empty");
    }
    spec.prefix_chain = alphabet.sequence(o.prefix);
    spec.suffix_chain = alphabet.sequence(o.suffix);
    spec.unfold = o.unfold;
    auto generated = lts_of_diamond(spec, alphabet);
    write_file(o.output, write_aut(generated.lts));
    std::ostringstream expected;
    expected << "label: " << format_label(generated.expected.diamond, alphabet) << "\n"
             << "entry: " << generated.expected.source << "\n"
             << "exit: " << generated.expected.target << "\n";
    write_file(o.output + ".expected", expected.str());
    out << generated.lts.state_count() << " states, " << generated.lts.transition_count() << " transitions\n";
    return kSuccess;
}

int cmd_oracle_check(const Options& o, std::ostream& out, std::ostream& err) {
    auto lts = load_lts(o.input, nullptr, err);
    DetectorOptions detector;
    detector.max_size = o.oracle_max_size;
    detector.threads = o.threads;
    auto found = find_all_diamonds(lts, detector);
    OracleOptions oracle;
    oracle.max_size = o.oracle_max_size;
    std::vector<Convergence> expected;
    try {
        expected = enumerate_all_convergences_oracle(lts, oracle);
    } catch (const OracleCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kTruncated;
    }
    std::set<Convergence> detected(found.convergences.begin(), found.convergences.end());
    std::set<Convergence> reference(expected.begin(), expected.end());
    std::size_t differences = 0;
    auto report = [&](const Convergence& c, const char* where) {
        ++differences;
        out << where << " " << c.source << " -> " << c.target << " " << (c.strict ? "strict" : "non-strict") << " "
            << format_label(c.diamond, lts.alphabet()) << "\n";
    };
    for (const auto& c : detected) {
        if (!reference.contains(c)) {
            report(c, "only-detector");
        }
    }
    for (const auto& c : reference) {
        if (!detected.contains(c)) {
            report(c, "only-oracle");
        }
    }
    if (differences == 0) {
        out << "identical: " << detected.size() << " convergences up to size " << o.oracle_max_size << "\n";
        return kSuccess;
    }
    out << differences << " differences\n";
    return kMismatch;
}

int cmd_dot(const Options& o, std::ostream& out, std::ostream&) {
    auto reduced = parse_reduced_aut(read_file(o.input));
    write_file(o.output, write_dot(reduced));
    out << reduced.state_count() << " nodes, " << reduced.edges().size() << " edges\n";
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    try {
        o.max_size = default_max_size();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    CLI::App app{"Find, reduce and expand diamond patterns in labelled transition systems.", "ltsdiamond"};
    app.require_subcommand(1);
    auto add_max_size = [&](CLI::App* cmd) {
        cmd->add_option("--max-size", o.max_size, "largest diamond size searched (DIAMOND_MAX_SIZE)")
            ->check(CLI::PositiveNumber);
    };
    auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", o.threads, "worker threads, 0 for all cores")->capture_default_str();
    };

    auto* find = app.add_subcommand("find", "list diamond convergences");
    find->add_option("input", o.input, "input .aut file")->required();
    find->add_option("--target", o.target, "only convergences into this state");
    add_max_size(find);
    add_threads(find);
    find->add_flag("--json", o.json, "JSON lines output");
    find->add_flag("--strict-cap", o.strict_cap, "exit 4 when the size cap truncates the search");
    find->add_flag("--maximal", o.maximal, "only maximal strict convergences");
    find->add_flag("--timing", o.timing, "report elapsed time");

    auto* reduce_cmd = app.add_subcommand("reduce", "replace maximal strict diamonds by macro edges");
    reduce_cmd->add_option("input", o.input, "input .aut file")->required();
    reduce_cmd->add_option("-o,--output", o.output, "reduced .aut file")->required();
    reduce_cmd->add_option("--dot", o.dot, "also write a DOT rendering");
    add_max_size(reduce_cmd);
    add_threads(reduce_cmd);
    reduce_cmd->add_flag("--json", o.json, "JSON summary");
    reduce_cmd->add_flag("--strict-cap", o.strict_cap, "exit 4 when the size cap truncates the search");
    reduce_cmd->add_flag("--timing", o.timing, "report elapsed time");

    auto* expand_cmd = app.add_subcommand("expand", "expand macro edges into interleavings");
    expand_cmd->add_option("input", o.input, "reduced .aut file")->required();
    expand_cmd->add_option("-o,--output", o.output, "expanded .aut file")->required();

    auto* minimize_cmd = app.add_subcommand("minimize", "quotient by strong bisimulation");
    minimize_cmd->add_option("input", o.input, "input .aut file")->required();
    minimize_cmd->add_option("-o,--output", o.output, "minimal .aut file")->required();

    auto* generate = app.add_subcommand("generate", "write the interleaving system of a diamond");
    generate->add_option("--diamond", o.diamond, "diamond label, e.g. \"(a b)^1 || c^1\"")->required();
    generate->add_option("--prefix", o.prefix, "space separated actions before the diamond");
    generate->add_option("--suffix", o.suffix, "space separated actions after the diamond");
    generate->add_flag("--unfold", o.unfold, "one state per atom progress combination");
    generate->add_option("-o,--output", o.output, "output .aut file")->required();

    auto* oracle = app.add_subcommand("oracle-check", "compare the detector with the brute-force oracle");
    oracle->add_option("input", o.input, "input .aut file")->required();
    oracle->add_option("--max-size", o.oracle_max_size, "largest diamond size compared")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_threads(oracle);

    auto* dot = app.add_subcommand("dot", "render an .aut file (macro labels allowed) as DOT");
    dot->add_option("input", o.input, "input .aut file")->required();
    dot->add_option("-o,--output", o.output, "output .dot file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (find->parsed()) {
            return cmd_find(o, out, err);
        }
        if (reduce_cmd->parsed()) {
            return cmd_reduce(o, out, err);
        }
        if (expand_cmd->parsed()) {
            return cmd_expand(o, out, err);
        }
        if (minimize_cmd->parsed()) {
            return cmd_minimize(o, out, err);
        }
        if (generate->parsed()) {
            return cmd_generate(o, out, err);
        }
        if (oracle->parsed()) {
            return cmd_oracle_check(o, out, err);
        }
        if (dot->parsed()) {
            return cmd_dot(o, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const AutParseError& e) {
        err << "error: " << o.input << ": " << e.what() << "\n";
        return kParseError;
    } catch (const LabelSyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const OverlapViolation& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    } catch (const InvariantViolated& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace ltsdiamond::cli
