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

// Backward search for every diamond converging in a target state.
//
// The search runs in layers by diamond size. Layer 0 holds the target (or
// every member of its class) with the empty diamond. For each strict entry
// (q, d) of layer s and each incoming transition q^ -a-> q, every hypothesis
// h with d in tl(h, a) is evaluated at q^ against the complete layer-s
// table; convergent hypotheses are recorded and strict ones form layer s+1.

#ifndef LTSDIAMOND_DETECTOR_HPP
#define LTSDIAMOND_DETECTOR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ltsdiamond/diamond.hpp"
#include "ltsdiamond/lts.hpp"
#include "ltsdiamond/oracle.hpp"

namespace ltsdiamond {

inline constexpr std::size_t kDefaultMaxSize = 64;

class PreconditionViolated : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class InvariantViolated : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class OverlapViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct DetectorOptions {
    std::size_t max_size = kDefaultMaxSize;
    /// Worker count for find_all_diamonds; 0 picks the hardware concurrency.
    unsigned threads = 1;
    /// Re-check every recorded entry with ConvergenceChecker.
    bool verify_invariants = false;
};

/// Everything known about convergences into one target (or target class).
class ConvergenceTable {
public:
    ConvergenceTable(const Lts& lts, StateId target, const StateEquivalence* equivalence = nullptr);

    StateId target() const { return target_; }
    const StateEquivalence* equivalence() const { return equivalence_; }

    /// True when (state, d) converges into the target; the empty diamond
    /// holds exactly at the target (or its class).
    bool contains(StateId state, const Diamond& d) const;
    bool is_strict(StateId state, const Diamond& d) const;
    /// Whether any recorded convergence of `state` is strict.
    bool strict_flag(StateId state) const;

    /// Non-empty convergences recorded so far, in discovery order.
    const std::vector<Convergence>& entries() const { return entries_; }
    /// Same, sorted by (source, diamond).
    std::vector<Convergence> sorted_entries() const;

    /// Largest size s such that all convergences of size <= s are recorded.
    std::size_t complete_size() const { return complete_size_; }
    /// True when a convergence larger than the cap exists.
    bool truncated() const { return truncated_; }

    /// Records a convergence; returns false if it was already present.
    bool record(StateId state, const Diamond& d, bool strict);

private:
    friend class DiamondSearch;

    struct Key {
        StateId state;
        Diamond diamond;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const noexcept;
    };

    const Lts* lts_;
    StateId target_;
    const StateEquivalence* equivalence_;
    std::unordered_map<Key, bool, KeyHash> known_;
    std::unordered_set<StateId> strict_states_;
    std::vector<Convergence> entries_;
    std::size_t complete_size_ = 0;
    bool truncated_ = false;
};

struct StepOutcome {
    enum class Kind { None, NonStrict, Strict };
    Kind kind = Kind::None;
    DiamondSet strict;      ///< hypotheses that converge strictly
    DiamondSet non_strict;  ///< hypotheses that converge, but not strictly
};

/// One step of the search: evaluates every h with d in tl(h, a) at `src`
/// and records the convergent ones. Throws PreconditionViolated when
/// src -a-> mid is not a transition or the table is not complete up to
/// size(d). When (mid, d) is not a recorded strict convergence the result
/// is Kind::None.
StepOutcome step(const Lts& lts, StateId src, ActionId a, StateId mid, const Diamond& d,
                 ConvergenceTable& table, bool verify_invariants = false);

/// All convergences into `target` with 1 <= size <= max_size.
ConvergenceTable find_diamonds_to(const Lts& lts, StateId target, const DetectorOptions& options = {});

/// Same, with the target read up to `equivalence`: the search is seeded with
/// every state equivalent to `target`.
ConvergenceTable find_diamonds_to_class(const Lts& lts, StateId target, const StateEquivalence& equivalence,
                                        const DetectorOptions& options = {});

struct FindResult {
    /// Sorted by (source, target, formatted label).
    std::vector<Convergence> convergences;
    /// Targets whose search stopped at the size cap, ascending.
    std::vector<StateId> truncated_targets;
};

FindResult find_all_diamonds(const Lts& lts, const DetectorOptions& options = {});

/// Strict convergences not a proper prefix of another strict convergence
/// from the same source, in input order. Throws OverlapViolation when two
/// strict convergences from one source are prefix-incomparable.
std::vector<Convergence> maximal_strict(const std::vector<Convergence>& convergences);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_DETECTOR_HPP
