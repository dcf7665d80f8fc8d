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

// Reference semantics for diamond convergence, evaluated by direct
// recursion, and an exhaustive enumerator built on top of it. Slow by
// design of the recursion; meant for small systems and for cross-checking
// the detector.

#ifndef LTSDIAMOND_ORACLE_HPP
#define LTSDIAMOND_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ltsdiamond/diamond.hpp"
#include "ltsdiamond/lts.hpp"

namespace ltsdiamond {

/// One discovered fact: `source` diamond-converges with `diamond` in
/// `target`. `strict` additionally demands exclusivity at every step.
struct Convergence {
    StateId source = 0;
    Diamond diamond;
    StateId target = 0;
    bool strict = false;

    friend bool operator==(const Convergence&, const Convergence&) = default;
    friend auto operator<=>(const Convergence&, const Convergence&) = default;
};

/// Equivalence on states given as a class id per state.
class StateEquivalence {
public:
    static StateEquivalence identity(std::size_t state_count);
    /// Identity, except that each listed group is merged into one class.
    static StateEquivalence merging(std::size_t state_count,
                                    const std::vector<std::vector<StateId>>& groups);
    explicit StateEquivalence(std::vector<std::uint32_t> class_of);

    bool equivalent(StateId a, StateId b) const { return class_of_.at(a) == class_of_.at(b); }
    std::uint32_t class_of(StateId s) const { return class_of_.at(s); }
    std::size_t state_count() const { return class_of_.size(); }
    std::vector<StateId> members_of_class_of(StateId s) const;

private:
    std::vector<std::uint32_t> class_of_;
};

/// Evaluates convergence into a fixed target (or its class) directly:
/// empty diamond at the target, every head realised, and (when strict)
/// every outgoing edge explained. Results are memoized per (state, diamond,
/// strictness); one checker should be used per target.
class ConvergenceChecker {
public:
    ConvergenceChecker(const Lts& lts, StateId target, const StateEquivalence* equivalence = nullptr);

    bool converges(StateId source, const Diamond& d, bool strict);

    StateId target() const { return target_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    struct Key {
        StateId state;
        Diamond diamond;
        bool strict;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const noexcept;
    };

    bool at_target(StateId state) const;

    const Lts& lts_;
    StateId target_;
    const StateEquivalence* equivalence_;
    std::unordered_map<Key, bool, KeyHash> memo_;
};

bool check_convergence(const Lts& lts, StateId source, const Diamond& d, StateId target, bool strict,
                       const StateEquivalence* equivalence = nullptr);

class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    std::size_t max_size = 6;
    /// Upper bound on distinct (source, candidate) pairs examined.
    std::size_t candidate_budget = 2'000'000;
};

/// Every convergence into `target` with 1 <= size <= max_size, one record
/// per (source, diamond) with `strict` telling whether the strict form also
/// holds. Candidates are all diamonds having some full interleaving that
/// labels a path from the source to the target; each is then decided by
/// ConvergenceChecker. Sorted.
std::vector<Convergence> enumerate_convergences_oracle(const Lts& lts, StateId target,
                                                       const OracleOptions& options = {});

/// Same, for every target state. Sorted by (source, diamond, target).
std::vector<Convergence> enumerate_all_convergences_oracle(const Lts& lts,
                                                           const OracleOptions& options = {});

/// All canonical diamonds for which `word` is a full interleaving: one per
/// partition of the word's positions into atoms. Exposed for tests.
DiamondSet shuffle_decompositions(std::span<const ActionId> word);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_ORACLE_HPP
