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

// Text form of diamonds, used for macro-transition labels:
//
//   diamond := "<empty>" | term (" || " term)*
//   term    := atom "^" count
//   atom    := label | "(" label (" " label)+ ")"
//   count   := positive integer
//
// A label is written bare unless it contains whitespace or one of ( ) ^ | ',
// in which case it is wrapped in single quotes.

#ifndef LTSDIAMOND_DIAMOND_LABEL_HPP
#define LTSDIAMOND_DIAMOND_LABEL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ltsdiamond/diamond.hpp"
#include "ltsdiamond/lts.hpp"

namespace ltsdiamond {

inline constexpr std::string_view kEmptyDiamondLabel = "<empty>";

class LabelSyntaxError : public std::runtime_error {
public:
    LabelSyntaxError(std::size_t column, const std::string& what);
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

struct LabelWarning {
    enum class Kind { MonotoneSequenceKey };
    Kind kind;
    std::string message;
};

/// Terms are ordered by the lexicographic order of their label texts, so
/// a^3 || c^1 || (ab)^2 || (bcc)^1 prints as `a^3 || (a b)^2 || (b c c)^1 || c^1`.
std::string format_label(const Diamond& d, const Alphabet& alphabet);

/// Parses the grammar above, interning unknown labels into `alphabet`.
/// Parenthesised monotone sequences are folded into action counts and
/// reported as warnings.
Diamond parse_label(std::string_view text, Alphabet& alphabet,
                    std::vector<LabelWarning>* warnings = nullptr);

/// Cheap check used to tell macro labels from plain action labels.
bool looks_like_diamond_label(std::string_view text);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_DIAMOND_LABEL_HPP
