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

// Small systems from the worked examples, with their named states.

#ifndef LTSDIAMOND_TESTS_FIXTURES_HPP
#define LTSDIAMOND_TESTS_FIXTURES_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "ltsdiamond/diamond.hpp"
#include "ltsdiamond/diamond_label.hpp"
#include "ltsdiamond/lts.hpp"

namespace fixtures {

using ltsdiamond::Lts;
using ltsdiamond::StateId;

/// All interleavings of a1 a2 and b.
struct L1 {
    static constexpr StateId entry = 0;
    static constexpr StateId after_a1 = 1;
    static constexpr StateId after_a1a2 = 2;
    static constexpr StateId after_b = 3;
    static constexpr StateId after_a1b = 4;
    static constexpr StateId exit = 5;
    static Lts lts() {
        return Lts::from_labels(6, entry,
                                {{0, "a1", 1}, {1, "a2", 2}, {0, "b", 3}, {1, "b", 4},
                                 {2, "b", 5}, {3, "a1", 4}, {4, "a2", 5}});
    }
};

/// The ba || ca grid; `last` is the label of the final transition
/// ("a" for the left system, "d" for the right one).
struct L3 {
    static constexpr StateId entry = 0;
    static constexpr StateId exit = 7;
    static Lts lts(std::string_view last) {
        return Lts::from_labels(8, entry,
                                {{0, "b", 1}, {0, "c", 2}, {1, "a", 3}, {1, "c", 4}, {2, "b", 4},
                                 {2, "a", 5}, {3, "c", 6}, {4, "a", 6}, {5, "b", 6}, {6, last, 7}});
    }
};

/// Left: a||b into one state, b||c into another. Right: the p system with
/// the extra p -a-> p' transition.
struct L7 {
    static constexpr StateId entry = 0;
    static constexpr StateId exit = 5;
    static constexpr StateId exit_prime = 6;
    static Lts lts() {
        return Lts::from_labels(7, entry,
                                {{0, "a", 1}, {0, "b", 2}, {0, "b", 3}, {0, "c", 4},
                                 {1, "b", 5}, {2, "a", 5}, {3, "c", 6}, {4, "b", 6}});
    }
};

struct L7p {
    static constexpr StateId entry = 0;
    static constexpr StateId after_a = 1;
    static constexpr StateId p = 2;
    static constexpr StateId exit = 3;
    static constexpr StateId exit_prime = 4;
    static Lts lts() {
        return Lts::from_labels(5, entry, {{0, "a", 1}, {0, "b", 2}, {1, "b", 3}, {2, "a", 3}, {2, "a", 4}});
    }
};

/// The aa || a cube and the aaa chain.
struct L4a {
    static constexpr StateId entry = 0;
    static constexpr StateId exit = 7;
    static Lts lts() {
        return Lts::from_labels(8, entry,
                                {{0, "a", 1}, {0, "a", 2}, {1, "a", 3}, {2, "a", 3}, {4, "a", 5}, {4, "a", 6},
                                 {5, "a", 7}, {6, "a", 7}, {0, "a", 4}, {1, "a", 5}, {2, "a", 6}, {3, "a", 7}});
    }
};

struct L4b {
    static constexpr StateId entry = 0;
    static constexpr StateId exit = 3;
    static Lts lts() { return Lts::from_labels(4, entry, {{0, "a", 1}, {1, "a", 2}, {2, "a", 3}}); }
};

/// Trace-equivalent pair: p is the full b || (a1 a2) region, q resolves the
/// first a1 nondeterministically.
struct L8 {
    static constexpr StateId entry = 0;
    static constexpr StateId exit = 7;
    static Lts lts() {
        return Lts::from_labels(8, entry,
                                {{0, "b", 1}, {1, "a1", 2}, {2, "a2", 7}, {0, "a1", 3}, {3, "b", 4},
                                 {4, "a2", 7}, {0, "a1", 5}, {5, "a2", 6}, {6, "b", 7}});
    }
};

/// The three trace-equivalent cyclic systems p, q and r.
struct Cyclic {
    static Lts p() {
        return Lts::from_labels(5, 0,
                                {{0, "a", 1}, {1, "b", 2}, {2, "c", 0}, {0, "a", 3}, {3, "c", 0},
                                 {3, "b", 4}, {4, "c", 0}});
    }
    static Lts q() {
        return Lts::from_labels(4, 0, {{0, "a", 1}, {0, "a", 2}, {2, "c", 0}, {1, "b", 3}, {2, "b", 3}, {3, "c", 0}});
    }
    static Lts r() { return Lts::from_labels(3, 0, {{0, "a", 1}, {1, "c", 0}, {1, "b", 2}, {2, "c", 0}}); }
};

/// A single state with an a-loop.
inline Lts self_loop() { return Lts::from_labels(1, 0, {{0, "a", 0}}); }

inline Lts chain_ab() { return Lts::from_labels(3, 0, {{0, "a", 1}, {1, "b", 2}}); }

/// Parses a diamond label against the system's alphabet; unknown labels
/// are an error.
inline ltsdiamond::Diamond diamond(const Lts& lts, std::string_view label) {
    ltsdiamond::Alphabet alphabet = lts.alphabet();
    auto d = ltsdiamond::parse_label(label, alphabet);
    if (alphabet.size() != lts.alphabet().size()) {
        throw std::invalid_argument("label uses actions outside the system");
    }
    return d;
}

inline std::string label(const Lts& lts, const ltsdiamond::Diamond& d) {
    return ltsdiamond::format_label(d, lts.alphabet());
}

}  // namespace fixtures

#endif  // LTSDIAMOND_TESTS_FIXTURES_HPP
