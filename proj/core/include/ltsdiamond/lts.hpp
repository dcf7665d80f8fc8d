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

#ifndef LTSDIAMOND_LTS_HPP
#define LTSDIAMOND_LTS_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace ltsdiamond {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

/// A non-empty sequence of actions. The empty sequence is never stored as a
/// Sequence; APIs that accept "a sequence or nothing" take an empty span.
using Sequence = std::vector<ActionId>;

/// Interning table for action labels. Ids are dense and assigned in
/// first-occurrence order; equal texts always map to equal ids.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::initializer_list<std::string_view> labels);

    /// Returns the id of `label`, adding it if needed. Throws
    /// std::invalid_argument for empty labels or labels containing a double
    /// quote or a newline.
    ActionId intern(std::string_view label);

    std::optional<ActionId> find(std::string_view label) const;
    ActionId at(std::string_view label) const;

    const std::string& text(ActionId id) const { return labels_.at(id); }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Interns each label of a whitespace separated list ("a b c").
    Sequence sequence(std::string_view spaced_labels);

    friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
        return lhs.labels_ == rhs.labels_;
    }

    static bool is_valid_label(std::string_view label);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ActionId> ids_;
};

struct Transition {
    StateId source = 0;
    ActionId action = 0;
    StateId target = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct OutEdge {
    ActionId action;
    StateId target;
    friend auto operator<=>(const OutEdge&, const OutEdge&) = default;
};

struct InEdge {
    StateId source;
    ActionId action;
    friend auto operator<=>(const InEdge&, const InEdge&) = default;
};

/// Immutable finite labelled transition system. The transition relation is
/// a set; adjacency indices are sorted and exactly mirror it.
class Lts {
public:
    Lts();

    /// Builds the system. Duplicate triples are collapsed; the number of
    /// collapsed duplicates is available from duplicates_removed(). Throws
    /// std::out_of_range when an endpoint, action or the initial state is out
    /// of range.
    Lts(std::size_t state_count, StateId initial, Alphabet alphabet,
        std::vector<Transition> transitions);

    /// Convenience for fixtures: labels are interned in order of appearance.
    static Lts from_labels(std::size_t state_count, StateId initial,
                           std::initializer_list<std::tuple<StateId, std::string_view, StateId>> edges);

    std::size_t state_count() const { return state_count_; }
    std::size_t transition_count() const { return transitions_.size(); }
    StateId initial() const { return initial_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    std::span<const OutEdge> outgoing(StateId state) const;
    /// Outgoing transitions of `state` labelled `action`.
    std::span<const OutEdge> outgoing(StateId state, ActionId action) const;
    std::span<const InEdge> incoming(StateId state) const;

    bool has_transition(StateId source, ActionId action, StateId target) const;
    std::size_t duplicates_removed() const { return duplicates_removed_; }

private:
    std::size_t state_count_ = 0;
    StateId initial_ = 0;
    Alphabet alphabet_;
    std::vector<Transition> transitions_;
    std::vector<std::size_t> out_offsets_;
    std::vector<OutEdge> out_edges_;
    std::vector<std::size_t> in_offsets_;
    std::vector<InEdge> in_edges_;
    std::size_t duplicates_removed_ = 0;
};

/// The set of distinct actions of a sequence, in ascending id order.
std::vector<ActionId> minimal_alphabet(std::span<const ActionId> sequence);

/// True when the sequence repeats a single action (including length one).
bool is_monotone(std::span<const ActionId> sequence);

std::string sequence_text(const Alphabet& alphabet, std::span<const ActionId> sequence);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_LTS_HPP
