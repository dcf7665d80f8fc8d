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

// Macro-transitions: replacing a strict diamond region by one edge, and
// expanding such edges back into their interleavings.

#ifndef LTSDIAMOND_REDUCER_HPP
#define LTSDIAMOND_REDUCER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ltsdiamond/detector.hpp"
#include "ltsdiamond/diamond.hpp"
#include "ltsdiamond/lts.hpp"
#include "ltsdiamond/oracle.hpp"

namespace ltsdiamond {

using EdgeLabel = std::variant<ActionId, Diamond>;

struct ReducedEdge {
    StateId source = 0;
    EdgeLabel label;
    StateId target = 0;

    bool is_macro() const { return std::holds_alternative<Diamond>(label); }
    friend bool operator==(const ReducedEdge&, const ReducedEdge&) = default;
};

/// An LTS whose edges carry either an action or a diamond macro-label.
/// Edges are kept sorted by (source, label text, target) and unique.
class ReducedLts {
public:
    ReducedLts() = default;
    ReducedLts(std::size_t state_count, StateId initial, Alphabet alphabet, std::vector<ReducedEdge> edges);

    /// Every transition as a plain edge.
    static ReducedLts from_lts(const Lts& lts);

    std::size_t state_count() const { return state_count_; }
    StateId initial() const { return initial_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<ReducedEdge>& edges() const { return edges_; }
    std::size_t macro_count() const;

    std::string label_text(const ReducedEdge& edge) const;

private:
    std::size_t state_count_ = 1;
    StateId initial_ = 0;
    Alphabet alphabet_;
    std::vector<ReducedEdge> edges_;
};

/// Every (state, remaining diamond) pair met while following interleavings
/// of a strict convergence, and the transitions taken.
struct DiamondRegion {
    struct Visit {
        StateId state;
        Diamond residue;
    };
    std::vector<Visit> visits;
    std::vector<Transition> steps;  ///< sorted, unique
};

/// Forward closure from (c.source, c.diamond): from (q, r), every a-step to
/// q' with some t in tl(r, a) such that q' strictly converges with t into
/// c.target.
DiamondRegion diamond_region(const Lts& lts, const Convergence& c);

/// States on interleaving paths of `c`, excluding source and target.
/// Sorted. Requires c.strict.
std::vector<StateId> interior_states(const Lts& lts, const Convergence& c);

struct ReduceOptions {
    std::size_t max_size = kDefaultMaxSize;
    unsigned threads = 1;
};

struct ReduceResult {
    ReducedLts reduced;
    /// The convergences replaced by macro edges, in selection order.
    std::vector<Convergence> rewritten;
    /// Maximal strict convergences of size >= 2 that were left alone.
    std::vector<Convergence> skipped;
    /// Targets whose detector run hit the size cap.
    std::vector<StateId> truncated_targets;
    /// New index of every original state, or kRemovedState.
    std::vector<StateId> new_index;
};

inline constexpr StateId kRemovedState = ~StateId{0};

/// Replaces maximal strict convergences of size >= 2 by macro edges.
///
/// A convergence is rewritten only if its region visits each state with a
/// single residue (source with the whole diamond, target with the empty
/// one), no interior state is the initial state or has a transition
/// outside the region, and its states do not collide with the interior of
/// an earlier choice (or vice versa). Candidates are tried by descending
/// size, then source, then label text. Remaining states are renumbered in
/// their original order.
ReduceResult reduce(const Lts& lts, const ReduceOptions& options = {});

/// Materialises every macro edge as the interleaving graph of its diamond,
/// with fresh states after the existing ones.
Lts expand(const ReducedLts& reduced);

/// Reduced systems as .aut: a label that parses as a diamond label (see
/// diamond_label.hpp) is a macro edge, anything else a plain action.
std::string write_reduced_aut(const ReducedLts& reduced);
ReducedLts parse_reduced_aut(std::string_view text);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_REDUCER_HPP
