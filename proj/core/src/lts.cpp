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

#include "ltsdiamond/lts.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ltsdiamond {

Alphabet::Alphabet(std::initializer_list<std::string_view> labels) {
    for (auto label : labels) {
        intern(label);
    }
}

bool Alphabet::is_valid_label(std::string_view label) {
    return !label.empty() && label.find('"') == std::string_view::npos &&
           label.find('\n') == std::string_view::npos;
}

ActionId Alphabet::intern(std::string_view label) {
    if (auto it = ids_.find(std::string(label)); it != ids_.end()) {
        return it->second;
    }
    if (!is_valid_label(label)) {
        throw std::invalid_argument("invalid action label '" + std::string(label) + "'");
    }
    auto id = static_cast<ActionId>(labels_.size());
    labels_.emplace_back(label);
    ids_.emplace(labels_.back(), id);
    return id;
}

std::optional<ActionId> Alphabet::find(std::string_view label) const {
    if (auto it = ids_.find(std::string(label)); it != ids_.end()) {
        return it->second;
    }
    return std::nullopt;
}

ActionId Alphabet::at(std::string_view label) const {
    if (auto id = find(label)) {
        return *id;
    }
    throw std::out_of_range("unknown action label '" + std::string(label) + "'");
}

Sequence Alphabet::sequence(std::string_view spaced_labels) {
    Sequence seq;
    std::istringstream in{std::string(spaced_labels)};
    std::string word;
    while (in >> word) {
        seq.push_back(intern(word));
    }
    return seq;
}

Lts::Lts() : Lts(1, 0, Alphabet{}, {}) {}

Lts::Lts(std::size_t state_count, StateId initial, Alphabet alphabet,
         std::vector<Transition> transitions)
    : state_count_(state_count), initial_(initial), alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)) {
    if (state_count_ > 0 && initial_ >= state_count_) {
        throw std::out_of_range("initial state out of range");
    }
    for (const auto& t : transitions_) {
        if (t.source >= state_count_ || t.target >= state_count_) {
            throw std::out_of_range("transition endpoint out of range");
        }
        if (t.action >= alphabet_.size()) {
            throw std::out_of_range("transition action out of range");
        }
    }
    std::sort(transitions_.begin(), transitions_.end());
    auto last = std::unique(transitions_.begin(), transitions_.end());
    duplicates_removed_ = static_cast<std::size_t>(transitions_.end() - last);
    transitions_.erase(last, transitions_.end());

    out_offsets_.assign(state_count_ + 1, 0);
    in_offsets_.assign(state_count_ + 1, 0);
    for (const auto& t : transitions_) {
        ++out_offsets_[t.source + 1];
        ++in_offsets_[t.target + 1];
    }
    for (std::size_t i = 0; i < state_count_; ++i) {
        out_offsets_[i + 1] += out_offsets_[i];
        in_offsets_[i + 1] += in_offsets_[i];
    }
    out_edges_.resize(transitions_.size());
    in_edges_.resize(transitions_.size());
    auto out_fill = out_offsets_;
    auto in_fill = in_offsets_;
    // transitions_ is sorted by (source, action, target), so the outgoing
    // lists come out sorted; incoming lists are sorted afterwards.
    for (const auto& t : transitions_) {
        out_edges_[out_fill[t.source]++] = OutEdge{t.action, t.target};
        in_edges_[in_fill[t.target]++] = InEdge{t.source, t.action};
    }
    for (std::size_t i = 0; i < state_count_; ++i) {
        std::sort(in_edges_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[i]),
                  in_edges_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[i + 1]));
    }
}

Lts Lts::from_labels(std::size_t state_count, StateId initial,
                     std::initializer_list<std::tuple<StateId, std::string_view, StateId>> edges) {
    Alphabet alphabet;
    std::vector<Transition> transitions;
    transitions.reserve(edges.size());
    for (const auto& [src, label, dst] : edges) {
        transitions.push_back({src, alphabet.intern(label), dst});
    }
    return Lts(state_count, initial, std::move(alphabet), std::move(transitions));
}

std::span<const OutEdge> Lts::outgoing(StateId state) const {
    return {out_edges_.data() + out_offsets_.at(state), out_edges_.data() + out_offsets_.at(state + 1)};
}

std::span<const OutEdge> Lts::outgoing(StateId state, ActionId action) const {
    auto out = outgoing(state);
    auto first = std::lower_bound(out.begin(), out.end(), OutEdge{action, 0});
    auto last = std::upper_bound(first, out.end(), OutEdge{action, ~StateId{0}});
    return {first, last};
}

std::span<const InEdge> Lts::incoming(StateId state) const {
    return {in_edges_.data() + in_offsets_.at(state), in_edges_.data() + in_offsets_.at(state + 1)};
}

bool Lts::has_transition(StateId source, ActionId action, StateId target) const {
    if (source >= state_count_) {
        return false;
    }
    auto out = outgoing(source);
    return std::binary_search(out.begin(), out.end(), OutEdge{action, target});
}

std::vector<ActionId> minimal_alphabet(std::span<const ActionId> sequence) {
    std::vector<ActionId> result(sequence.begin(), sequence.end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

bool is_monotone(std::span<const ActionId> sequence) {
    return std::adjacent_find(sequence.begin(), sequence.end(), std::not_equal_to<>{}) ==
           sequence.end();
}

std::string sequence_text(const Alphabet& alphabet, std::span<const ActionId> sequence) {
    std::string out;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += alphabet.text(sequence[i]);
    }
    return out;
}

}  // namespace ltsdiamond
