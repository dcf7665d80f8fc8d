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

#include "ltsdiamond/aut.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <tuple>

namespace ltsdiamond {

AutParseError::AutParseError(AutErrorKind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

namespace {

class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    bool consume(char c) {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, AutErrorKind kind, const char* context) {
        if (!consume(c)) {
            throw AutParseError(kind, line_, std::string("expected '") + c + "' " + context);
        }
    }

    std::size_t number(AutErrorKind kind, const char* context) {
        skip_spaces();
        std::size_t value = 0;
        auto first = text_.data() + pos_;
        auto last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            throw AutParseError(kind, line_, std::string("expected a number ") + context);
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::string label() {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == '"') {
            auto close = text_.find('"', pos_ + 1);
            if (close == std::string_view::npos) {
                throw AutParseError(AutErrorKind::UnterminatedQuote, line_, "unterminated label quote");
            }
            std::string result(text_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            return result;
        }
        // Unquoted: the label runs up to the last comma on the line.
        auto last_comma = text_.rfind(',');
        if (last_comma == std::string_view::npos || last_comma < pos_) {
            throw AutParseError(AutErrorKind::MalformedTransition, line_, "missing target state");
        }
        auto raw = text_.substr(pos_, last_comma - pos_);
        while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t')) {
            raw.remove_suffix(1);
        }
        pos_ = last_comma;
        return std::string(raw);
    }

    bool at_end() {
        skip_spaces();
        return pos_ == text_.size();
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

}  // namespace

AutDocument parse_aut_document(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t index = 0;
    while (index < lines.size() && is_blank(lines[index])) {
        ++index;
    }
    if (index == lines.size()) {
        throw AutParseError(AutErrorKind::MalformedHeader, 1, "missing 'des' header");
    }

    AutDocument doc;
    {
        auto header = lines[index];
        auto first = header.find_first_not_of(" \t");
        if (header.substr(first, 3) != "des") {
            throw AutParseError(AutErrorKind::MalformedHeader, index + 1, "missing 'des' header");
        }
        LineCursor cursor(header.substr(first + 3), index + 1);
        constexpr auto kind = AutErrorKind::MalformedHeader;
        cursor.expect('(', kind, "after 'des'");
        doc.initial = static_cast<StateId>(cursor.number(kind, "for the initial state"));
        cursor.expect(',', kind, "after the initial state");
        doc.declared_transitions = cursor.number(kind, "for the transition count");
        cursor.expect(',', kind, "after the transition count");
        doc.state_count = cursor.number(kind, "for the state count");
        cursor.expect(')', kind, "closing the header");
        if (!cursor.at_end()) {
            throw AutParseError(kind, index + 1, "trailing text after header");
        }
        if (doc.state_count == 0 || doc.initial >= doc.state_count) {
            throw AutParseError(AutErrorKind::StateOutOfRange, index + 1, "initial state out of range");
        }
    }

    for (++index; index < lines.size(); ++index) {
        if (is_blank(lines[index])) {
            continue;
        }
        const std::size_t line_number = index + 1;
        LineCursor cursor(lines[index], line_number);
        constexpr auto kind = AutErrorKind::MalformedTransition;
        cursor.expect('(', kind, "opening a transition");
        auto source = cursor.number(kind, "for the source state");
        cursor.expect(',', kind, "after the source state");
        auto label = cursor.label();
        cursor.expect(',', kind, "after the label");
        auto target = cursor.number(kind, "for the target state");
        cursor.expect(')', kind, "closing a transition");
        if (!cursor.at_end()) {
            throw AutParseError(kind, line_number, "trailing text after transition");
        }
        if (label.empty()) {
            throw AutParseError(kind, line_number, "empty label");
        }
        if (source >= doc.state_count || target >= doc.state_count) {
            throw AutParseError(AutErrorKind::StateOutOfRange, line_number,
                                "state index out of range (" + std::to_string(doc.state_count) +
                                    " states declared)");
        }
        doc.lines.push_back({static_cast<StateId>(source), std::move(label),
                             static_cast<StateId>(target), line_number});
    }
    return doc;
}

Lts parse_aut(std::string_view text, std::vector<AutWarning>* warnings) {
    auto doc = parse_aut_document(text);
    Alphabet alphabet;
    std::vector<Transition> transitions;
    std::set<Transition> seen;
    for (const auto& line : doc.lines) {
        Transition t{line.source, alphabet.intern(line.label), line.target};
        if (!seen.insert(t).second) {
            if (warnings != nullptr) {
                warnings->push_back({AutWarning::Kind::DuplicateTransition, line.line_number,
                                     "duplicate transition dropped"});
            }
            continue;
        }
        transitions.push_back(t);
    }
    if (warnings != nullptr && doc.lines.size() != doc.declared_transitions) {
        warnings->push_back({AutWarning::Kind::TransitionCountMismatch, 1,
                             "header declares " + std::to_string(doc.declared_transitions) +
                                 " transitions, found " + std::to_string(doc.lines.size())});
    }
    return Lts(doc.state_count, doc.initial, std::move(alphabet), std::move(transitions));
}

std::string write_aut_lines(StateId initial, std::size_t state_count,
                            const std::vector<std::tuple<StateId, std::string, StateId>>& lines) {
    std::ostringstream out;
    out << "des (" << initial << ',' << lines.size() << ',' << state_count << ")\n";
    for (const auto& [src, label, dst] : lines) {
        out << '(' << src << ",\"" << label << "\"," << dst << ")\n";
    }
    return out.str();
}

std::string write_aut(const Lts& lts) {
    std::vector<std::tuple<StateId, std::string, StateId>> lines;
    lines.reserve(lts.transition_count());
    for (const auto& t : lts.transitions()) {
        lines.emplace_back(t.source, lts.alphabet().text(t.action), t.target);
    }
    std::sort(lines.begin(), lines.end());
    return write_aut_lines(lts.initial(), lts.state_count(), lines);
}

}  // namespace ltsdiamond
