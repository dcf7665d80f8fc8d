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

// Property checks shared by several test binaries.

#ifndef LTSDIAMOND_TESTS_PROPERTIES_HPP
#define LTSDIAMOND_TESTS_PROPERTIES_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ltsdiamond/diamond.hpp"
#include "ltsdiamond/lts.hpp"
#include "ltsdiamond/oracle.hpp"

namespace properties {

using namespace ltsdiamond;

/// Every non-empty sequence of `c.diamond` labels a path from the source
/// to a state that strictly converges into the target with some tail of
/// that sequence. Returns the number of sequences that fail.
inline std::size_t interleaving_failures(const Lts& lts, const Convergence& c) {
    ConvergenceChecker checker(lts, c.target);
    std::size_t failures = 0;
    // Frontier: pairs (state, residue) reached along one sequence, grouped
    // by that sequence.
    using Frontier = std::set<std::pair<StateId, Diamond>>;
    std::vector<std::pair<Frontier, DiamondSet>> layer{{Frontier{{c.source, c.diamond}}, DiamondSet{c.diamond}}};
    while (!layer.empty()) {
        std::vector<std::pair<Frontier, DiamondSet>> next;
        for (const auto& [frontier, residues] : layer) {
            std::set<ActionId> actions;
            for (const auto& r : residues) {
                for (auto a : head(r)) {
                    actions.insert(a);
                }
            }
            for (auto a : actions) {
                std::set<Diamond> tails;
                for (const auto& r : residues) {
                    for (const auto& t : tail_action(r, a)) {
                        tails.insert(t);
                    }
                }
                std::set<StateId> states;
                for (const auto& [s, r] : frontier) {
                    for (const auto& e : lts.outgoing(s, a)) {
                        states.insert(e.target);
                    }
                }
                Frontier reached;
                bool ok = false;
                for (auto s : states) {
                    for (const auto& t : tails) {
                        reached.emplace(s, t);
                        ok = ok || checker.converges(s, t, true);
                    }
                }
                failures += ok ? 0 : 1;
                if (!reached.empty()) {
                    next.emplace_back(std::move(reached), DiamondSet(tails.begin(), tails.end()));
                }
            }
        }
        layer = std::move(next);
    }
    return failures;
}

/// Pairs of strict convergences from one source whose diamonds are
/// prefix-incomparable.
inline std::size_t prefix_violations(const std::vector<Convergence>& convergences) {
    std::size_t violations = 0;
    TailMemo memo;
    for (std::size_t i = 0; i < convergences.size(); ++i) {
        for (std::size_t j = i + 1; j < convergences.size(); ++j) {
            const auto& x = convergences[i];
            const auto& y = convergences[j];
            if (!x.strict || !y.strict || x.source != y.source) {
                continue;
            }
            if (!is_prefix(x.diamond, y.diamond, &memo) && !is_prefix(y.diamond, x.diamond, &memo)) {
                ++violations;
            }
        }
    }
    return violations;
}

}  // namespace properties

#endif  // LTSDIAMOND_TESTS_PROPERTIES_HPP
