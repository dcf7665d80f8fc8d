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

// Aldebaran (.aut) reading and writing.
//
//   des (<initial>,<transition count>,<state count>)
//   (<source>,"<label>",<target>)
//   (<source>,<label>,<target>)      unquoted form, label without , " or space

#ifndef LTSDIAMOND_AUT_HPP
#define LTSDIAMOND_AUT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ltsdiamond/lts.hpp"

namespace ltsdiamond {

enum class AutErrorKind {
    MalformedHeader,
    MalformedTransition,
    StateOutOfRange,
    UnterminatedQuote,
};

class AutParseError : public std::runtime_error {
public:
    AutParseError(AutErrorKind kind, std::size_t line, const std::string& what);

    AutErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    AutErrorKind kind_;
    std::size_t line_;
};

struct AutWarning {
    enum class Kind { DuplicateTransition, TransitionCountMismatch };
    Kind kind;
    std::size_t line;
    std::string message;
};

/// Raw document: labels are kept as text so callers can decide how to read
/// them (plain actions or macro labels).
struct AutDocument {
    StateId initial = 0;
    std::size_t declared_transitions = 0;
    std::size_t state_count = 0;

    struct Line {
        StateId source;
        std::string label;
        StateId target;
        std::size_t line_number;
    };
    std::vector<Line> lines;
};

AutDocument parse_aut_document(std::string_view text);

/// Parses a document into an Lts. Labels are interned in first-occurrence
/// order. Duplicate transition lines are dropped and reported through
/// `warnings` when given.
Lts parse_aut(std::string_view text, std::vector<AutWarning>* warnings = nullptr);

/// Deterministic output: transitions sorted by (source, label text, target),
/// every label quoted, one line per transition, trailing newline.
std::string write_aut(const Lts& lts);

/// Writes a header and pre-rendered body lines (already in final order).
std::string write_aut_lines(StateId initial, std::size_t state_count,
                            const std::vector<std::tuple<StateId, std::string, StateId>>& lines);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_AUT_HPP
