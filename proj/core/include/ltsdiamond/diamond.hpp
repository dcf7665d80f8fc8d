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

#ifndef LTSDIAMOND_DIAMOND_HPP
#define LTSDIAMOND_DIAMOND_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ltsdiamond/lts.hpp"

namespace ltsdiamond {

/// A diamond pattern: a multiset of single actions together with a multiset
/// of non-monotone action sequences, all of which interleave freely.
///
/// The representation is canonical. Monotone sequences (b, bb, bbb, ...) are
/// folded into the action counts, zero counts are never stored, and both
/// tables are kept sorted, so two diamonds are equal exactly when they
/// describe the same pattern.
class Diamond {
public:
    using ActionCounts = std::vector<std::pair<ActionId, std::uint32_t>>;
    using SequenceCounts = std::vector<std::pair<Sequence, std::uint32_t>>;

    Diamond() = default;

    bool empty() const { return size_ == 0; }

    /// Number of actions executed by any full interleaving.
    std::size_t size() const { return size_; }

    std::uint32_t count(ActionId action) const;
    std::uint32_t count(std::span<const ActionId> sequence) const;

    const ActionCounts& actions() const { return actions_; }
    const SequenceCounts& sequences() const { return sequences_; }

    /// Adds `times` copies of an atom. Monotone atoms become action counts.
    void add(std::span<const ActionId> atom, std::uint32_t times = 1);
    void add_action(ActionId action, std::uint32_t times = 1);

    /// Removes `times` copies of a single action; false if not present.
    bool remove_action(ActionId action, std::uint32_t times = 1);
    /// Removes one stored non-monotone sequence; false if not present.
    bool remove_sequence(std::span<const ActionId> sequence);

    friend bool operator==(const Diamond&, const Diamond&) = default;
    friend auto operator<=>(const Diamond&, const Diamond&) = default;

private:
    // size_ first so the default ordering sorts by size.
    std::size_t size_ = 0;
    ActionCounts actions_;
    SequenceCounts sequences_;
};

struct DiamondHash {
    std::size_t operator()(const Diamond& d) const noexcept;
};

/// Sorted, duplicate-free list of diamonds.
using DiamondSet = std::vector<Diamond>;

struct DiamondEntry {
    Sequence atom;
    std::uint32_t count;
};

/// Builds a canonical diamond from atoms with multiplicities. Length-one and
/// monotone atoms are folded into action counts; zero counts are dropped.
Diamond make_diamond(std::span<const DiamondEntry> entries);
Diamond make_diamond(std::initializer_list<DiamondEntry> entries);

/// Head actions, ascending by id. Empty exactly for the empty diamond.
std::vector<ActionId> head(const Diamond& d);

inline std::size_t size(const Diamond& d) { return d.size(); }

/// All diamonds left after performing `action` first. Empty when `action`
/// is not a head action.
DiamondSet tail_action(const Diamond& d, ActionId action);

/// Tail by a whole sequence; the empty span yields {d}.
DiamondSet tail_sequence(const Diamond& d, std::span<const ActionId> sequence);

/// Memo table for tail_diamond, keyed on (diamond, prefix).
class TailMemo {
public:
    const DiamondSet* find(const Diamond& d, const Diamond& prefix) const;
    const DiamondSet& store(const Diamond& d, const Diamond& prefix, DiamondSet result);
    std::size_t size() const { return table_.size(); }
    void clear() { table_.clear(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<Diamond, Diamond>& key) const noexcept;
    };
    std::unordered_map<std::pair<Diamond, Diamond>, DiamondSet, KeyHash> table_;
};

/// Tail of `d` by a prefix diamond. Pass a memo to share work across calls.
DiamondSet tail_diamond(const Diamond& d, const Diamond& prefix, TailMemo* memo = nullptr);

/// Every hypothesis h with d in tail_action(h, action).
DiamondSet inverse_tail(const Diamond& d, ActionId action);

/// Prefix order used for maximal convergences: true iff
/// tail_diamond(d, prefix) is non-empty.
bool is_prefix(const Diamond& prefix, const Diamond& d, TailMemo* memo = nullptr);

/// The swapped reading: true iff tail_diamond(lhs, rhs) is non-empty.
/// Kept for comparison tests.
bool is_prefix_literal(const Diamond& lhs, const Diamond& rhs, TailMemo* memo = nullptr);

/// Whether `sequence` is a (possibly partial) interleaving of `d`.
bool is_sequence_of(std::span<const ActionId> sequence, const Diamond& d);

/// The reachable residues of a diamond and the single-action steps between
/// them. residues[0] is the diamond itself; the empty diamond is always
/// present (at index `empty_index`).
struct InterleavingGraph {
    struct Step {
        std::size_t from;
        ActionId action;
        std::size_t to;
    };
    std::vector<Diamond> residues;
    std::vector<Step> steps;
    std::size_t empty_index = 0;
};

/// Breadth-first closure of tail_action. Throws std::length_error if more
/// than `max_residues` residues would be produced.
InterleavingGraph interleaving_graph(const Diamond& d, std::size_t max_residues = 1'000'000);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_DIAMOND_HPP
