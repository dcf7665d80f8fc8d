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

// Strong bisimulation, minimisation, bounded traces and the diamond
// equivalence check built on the detector.

#ifndef LTSDIAMOND_EQUIVALENCE_HPP
#define LTSDIAMOND_EQUIVALENCE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "ltsdiamond/detector.hpp"
#include "ltsdiamond/lts.hpp"
#include "ltsdiamond/oracle.hpp"

namespace ltsdiamond {

/// Blocks are numbered by their smallest member, so equal partitions
/// compare equal.
struct Partition {
    std::vector<std::vector<StateId>> blocks;
    std::vector<std::uint32_t> class_of;

    std::size_t block_count() const { return blocks.size(); }
    bool same_block(StateId a, StateId b) const { return class_of.at(a) == class_of.at(b); }
    StateEquivalence equivalence() const { return StateEquivalence(class_of); }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Coarsest strong bisimulation, by signature refinement.
Partition bisim_partition(const Lts& lts);

/// Quotient by bisimulation. State i of the result is block i.
Lts minimize(const Lts& lts);

/// Both systems side by side over one alphabet. States of `right` are
/// shifted by left.state_count(); the initial state is left's.
Lts disjoint_union(const Lts& left, const Lts& right);

/// Whether the initial states of two systems are bisimilar.
bool bisimilar(const Lts& left, const Lts& right);

/// Whether two systems are equal up to a renaming of states that maps
/// initial to initial (label text compared, not ids).
bool isomorphic(const Lts& left, const Lts& right);

/// Label sequences of length <= k enabled from `state`, as label ids.
std::set<Sequence> bounded_traces(const Lts& lts, StateId state, std::size_t k);

/// Diamond equivalence restricted to diamonds of size <= max_size, with
/// targets compared up to bisimilarity. Detector runs are cached, so one
/// checker answers many pairs cheaply.
class DiamondEquivalenceChecker {
public:
    DiamondEquivalenceChecker(const Lts& lts, std::size_t max_size);

    /// Every convergence of q1 into t is matched by a convergence of q2 with
    /// the same diamond into the class of t, and vice versa.
    bool equivalent(StateId q1, StateId q2);

    const Partition& partition() const { return partition_; }
    /// True when some detector run behind an answer hit the size cap.
    bool truncated() const { return truncated_; }

private:
    struct Facts {
        /// (class of target, diamond) for every convergence of the state.
        std::set<std::pair<std::uint32_t, Diamond>> exact;
        /// Same, but read up to the class of the target.
        std::set<std::pair<std::uint32_t, Diamond>> up_to_class;
    };
    void ensure_computed();
    bool matches(StateId from, StateId to);

    const Lts& lts_;
    std::size_t max_size_;
    Partition partition_;
    StateEquivalence classes_;
    bool computed_ = false;
    bool truncated_ = false;
    std::vector<Facts> facts_;
};

bool diamond_equivalent(const Lts& lts, StateId q1, StateId q2, std::size_t max_size);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_EQUIVALENCE_HPP
