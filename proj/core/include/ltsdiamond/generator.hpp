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

// Ground-truth inputs: the interleaving system of a given diamond, random
// systems, and a scalable chain of small diamonds.

#ifndef LTSDIAMOND_GENERATOR_HPP
#define LTSDIAMOND_GENERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ltsdiamond/diamond.hpp"
#include "ltsdiamond/lts.hpp"
#include "ltsdiamond/oracle.hpp"

namespace ltsdiamond {

class GeneratorCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenSpec {
    Diamond diamond;
    /// Actions leading from state 0 to the diamond's entry.
    Sequence prefix_chain;
    /// Actions leading on from the diamond's exit.
    Sequence suffix_chain;
    /// Emit one state per combination of atom progress instead of one
    /// state per distinct remainder (so a^2 becomes a square, not a chain).
    bool unfold = false;
    std::size_t max_states = 1'000'000;
};

struct GeneratedLts {
    Lts lts;
    /// (entry, diamond, exit, strict): the maximal strict convergence of the
    /// diamond region.
    Convergence expected;
};

/// State 0 starts the prefix chain (or is the entry when there is none);
/// region states follow in breadth-first order, then the suffix chain.
/// The result uses `alphabet` as is.
GeneratedLts lts_of_diamond(const GenSpec& spec, const Alphabet& alphabet);

/// n states, up to m distinct transitions over labels a, b, c, ... (k of
/// them), state 0 initial. Self-loops are allowed. Reproducible per seed.
Lts random_lts(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed);

/// Small random systems: 1-8 states, 0-14 transitions, 1-3 labels each.
std::vector<Lts> random_corpus(std::size_t count, std::uint64_t seed);

/// `regions` copies of the (a b)^1 || c^1 region glued exit to entry:
/// 5 * regions + 1 states and 7 * regions transitions.
Lts chain_of_diamonds(std::size_t regions);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_GENERATOR_HPP
