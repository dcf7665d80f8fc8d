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

#include "ltsdiamond/diamond_label.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace ltsdiamond {

LabelSyntaxError::LabelSyntaxError(std::size_t column, const std::string& what)
    : std::runtime_error("diamond label, column " + std::to_string(column) + ": " + what),
      column_(column) {}

namespace {

bool is_special(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '^' ||
           c == '|' || c == '\'';
}

std::string quote_if_needed(const std::string& label) {
    if (label != kEmptyDiamondLabel && std::none_of(label.begin(), label.end(), is_special)) {
        return label;
    }
    if (label.find('\'') != std::string::npos) {
        throw std::invalid_argument("label '" + label + "' cannot be written in a diamond label");
    }
    return "'" + label + "'";
}

class LabelParser {
public:
    LabelParser(std::string_view text, Alphabet& alphabet, std::vector<LabelWarning>* warnings)
        : text_(text), alphabet_(alphabet), warnings_(warnings) {}

    Diamond parse() {
        skip_spaces();
        if (text_.substr(pos_) == kEmptyDiamondLabel ||
            (text_.substr(pos_, kEmptyDiamondLabel.size()) == kEmptyDiamondLabel &&
             rest_is_blank(pos_ + kEmptyDiamondLabel.size()))) {
            return Diamond{};
        }
        Diamond d;
        term(d);
        skip_spaces();
        while (pos_ < text_.size()) {
            if (text_.substr(pos_, 2) != "||") {
                fail("expected '||' between terms");
            }
            pos_ += 2;
            term(d);
            skip_spaces();
        }
        return d;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw LabelSyntaxError(pos_ + 1, what); }

    bool rest_is_blank(std::size_t from) const {
        return std::all_of(text_.begin() + static_cast<std::ptrdiff_t>(from), text_.end(),
                           [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    }

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    ActionId label() {
        skip_spaces();
        if (pos_ >= text_.size()) {
            fail("expected a label");
        }
        if (text_[pos_] == '\'') {
            auto close = text_.find('\'', pos_ + 1);
            if (close == std::string_view::npos) {
                fail("unterminated quoted label");
            }
            auto raw = text_.substr(pos_ + 1, close - pos_ - 1);
            if (raw.empty()) {
                fail("empty quoted label");
            }
            pos_ = close + 1;
            return alphabet_.intern(raw);
        }
        auto start = pos_;
        while (pos_ < text_.size() && !is_special(text_[pos_])) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected a label");
        }
        return alphabet_.intern(text_.substr(start, pos_ - start));
    }

    void term(Diamond& d) {
        skip_spaces();
        Sequence atom;
        bool parenthesised = false;
        if (pos_ < text_.size() && text_[pos_] == '(') {
            parenthesised = true;
            ++pos_;
            skip_spaces();
            while (pos_ < text_.size() && text_[pos_] != ')') {
                atom.push_back(label());
                skip_spaces();
            }
            if (pos_ >= text_.size()) {
                fail("missing ')'");
            }
            ++pos_;
            if (atom.size() < 2) {
                fail("a parenthesised sequence needs at least two labels");
            }
        } else {
            atom.push_back(label());
        }
        skip_spaces();
        if (pos_ >= text_.size() || text_[pos_] != '^') {
            fail("expected '^' and a count");
        }
        ++pos_;
        std::uint32_t count = 0;
        auto first = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), count);
        if (ec != std::errc{} || ptr == first || count == 0) {
            fail("expected a positive count");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        if (parenthesised && is_monotone(atom) && warnings_ != nullptr) {
            warnings_->push_back({LabelWarning::Kind::MonotoneSequenceKey,
                                  "monotone sequence (" + sequence_text(alphabet_, atom) +
                                      ") folded into single actions"});
        }
        d.add(atom, count);
    }

    std::string_view text_;
    Alphabet& alphabet_;
    std::vector<LabelWarning>* warnings_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string format_label(const Diamond& d, const Alphabet& alphabet) {
    if (d.empty()) {
        return std::string(kEmptyDiamondLabel);
    }
    struct Term {
        std::vector<std::string> key;
        std::string text;
    };
    std::vector<Term> terms;
    for (const auto& [action, count] : d.actions()) {
        const auto& label = alphabet.text(action);
        terms.push_back({{label}, quote_if_needed(label) + "^" + std::to_string(count)});
    }
    for (const auto& [sequence, count] : d.sequences()) {
        Term term;
        term.text = "(";
        for (std::size_t i = 0; i < sequence.size(); ++i) {
            const auto& label = alphabet.text(sequence[i]);
            term.key.push_back(label);
            term.text += (i > 0 ? " " : "") + quote_if_needed(label);
        }
        term.text += ")^" + std::to_string(count);
        terms.push_back(std::move(term));
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) {
            out += " || ";
        }
        out += terms[i].text;
    }
    return out;
}

Diamond parse_label(std::string_view text, Alphabet& alphabet, std::vector<LabelWarning>* warnings) {
    return LabelParser(text, alphabet, warnings).parse();
}

bool looks_like_diamond_label(std::string_view text) {
    if (text.find('^') == std::string_view::npos && text != kEmptyDiamondLabel) {
        return false;
    }
    Alphabet scratch;
    try {
        parse_label(text, scratch);
        return true;
    } catch (const LabelSyntaxError&) {
        return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace ltsdiamond
