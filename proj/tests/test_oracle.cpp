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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "ltsdiamond/generator.hpp"
#include "ltsdiamond/oracle.hpp"
#include "properties.hpp"

using namespace ltsdiamond;
using fixtures::diamond;

namespace {

bool has(const std::vector<Convergence>& all, StateId source, const Diamond& d, StateId target,
         bool strict) {
    return std::find(all.begin(), all.end(), Convergence{source, d, target, strict}) != all.end();
}

}  // namespace

TEST_SUITE("check_convergence") {
    TEST_CASE("all interleavings of a1 a2 and b") {
        using fixtures::L1;
        Lts lts = L1::lts();
        auto d = diamond(lts, "(a1 a2)^1 || b^1");
        CHECK(check_convergence(lts, L1::entry, d, L1::exit, true));
        CHECK(check_convergence(lts, L1::entry, d, L1::exit, false));
        CHECK(check_convergence(lts, L1::after_a1, diamond(lts, "a2^1 || b^1"), L1::exit, true));
        CHECK_FALSE(check_convergence(lts, L1::entry, diamond(lts, "a1^1 || a2^1 || b^1"), L1::exit, false));
        CHECK_FALSE(check_convergence(lts, L1::entry, d, L1::after_a1b, false));
    }

    TEST_CASE("strictness") {
        using fixtures::L7;
        Lts lts = L7::lts();
        CHECK(check_convergence(lts, L7::entry, diamond(lts, "a^1 || b^1"), L7::exit, false));
        CHECK(check_convergence(lts, L7::entry, diamond(lts, "b^1 || c^1"), L7::exit_prime, false));
        CHECK_FALSE(check_convergence(lts, L7::entry, diamond(lts, "a^1 || b^1"), L7::exit, true));
        CHECK_FALSE(check_convergence(lts, L7::entry, diamond(lts, "b^1 || c^1"), L7::exit_prime, true));
    }

    TEST_CASE("up to an equivalence") {
        using fixtures::L7p;
        Lts lts = L7p::lts();
        auto d = diamond(lts, "a^1 || b^1");
        CHECK_FALSE(check_convergence(lts, L7p::entry, d, L7p::exit, false));
        CHECK_FALSE(check_convergence(lts, L7p::entry, d, L7p::exit, true));
        auto merged = StateEquivalence::merging(lts.state_count(), {{L7p::exit, L7p::exit_prime}});
        CHECK(check_convergence(lts, L7p::entry, d, L7p::exit, false, &merged));
        CHECK(check_convergence(lts, L7p::entry, d, L7p::exit, true, &merged));
        CHECK(check_convergence(lts, L7p::entry, d, L7p::exit_prime, false, &merged));
    }

    TEST_CASE("empty diamond") {
        Lts lts = fixtures::L1::lts();
        for (StateId q = 0; q < lts.state_count(); ++q) {
            CHECK(check_convergence(lts, q, Diamond{}, q, true));
            CHECK(check_convergence(lts, q, Diamond{}, q, false));
        }
        CHECK_FALSE(check_convergence(lts, 0, Diamond{}, 1, false));
        auto merged = StateEquivalence::merging(lts.state_count(), {{0, 1}});
        CHECK(check_convergence(lts, 0, Diamond{}, 1, false, &merged));
    }

    TEST_CASE("equivalence classes") {
        auto eq = StateEquivalence::merging(5, {{1, 3}, {0, 4}});
        CHECK(eq.equivalent(1, 3));
        CHECK(eq.equivalent(4, 0));
        CHECK_FALSE(eq.equivalent(1, 2));
        CHECK(eq.members_of_class_of(3) == std::vector<StateId>{1, 3});
        auto id = StateEquivalence::identity(3);
        CHECK(id.members_of_class_of(2) == std::vector<StateId>{2});
    }
}

TEST_SUITE("oracle enumeration") {
    TEST_CASE("L1 up to size 3") {
        using fixtures::L1;
        Lts lts = L1::lts();
        auto all = enumerate_convergences_oracle(lts, L1::exit, {3});
        CHECK(has(all, L1::entry, diamond(lts, "(a1 a2)^1 || b^1"), L1::exit, true));
        CHECK(has(all, L1::after_a1, diamond(lts, "a2^1 || b^1"), L1::exit, true));
        CHECK(has(all, L1::after_b, diamond(lts, "(a1 a2)^1"), L1::exit, true));
        CHECK(has(all, L1::after_a1a2, diamond(lts, "b^1"), L1::exit, true));
        CHECK(has(all, L1::after_a1b, diamond(lts, "a2^1"), L1::exit, true));
        // Single sequences that label one path converge, but not strictly.
        CHECK(has(all, L1::entry, diamond(lts, "(b a1 a2)^1"), L1::exit, false));
        CHECK(has(all, L1::after_a1, diamond(lts, "(a2 b)^1"), L1::exit, false));
        CHECK(has(all, L1::after_a1, diamond(lts, "(b a2)^1"), L1::exit, false));
        for (const auto& c : all) {
            CHECK(c.target == L1::exit);
            CHECK(c.diamond.size() >= 1);
            CHECK(c.diamond.size() <= 3);
        }
        CHECK(all.size() == 8);
        CHECK(std::is_sorted(all.begin(), all.end()));
    }

    TEST_CASE("grid without the second a") {
        using fixtures::L3;
        Lts left = L3::lts("a");
        Lts right = L3::lts("d");
        auto found = enumerate_convergences_oracle(left, L3::exit, {4});
        CHECK(has(found, L3::entry, diamond(left, "(b a)^1 || (c a)^1"), L3::exit, true));
        for (StateId t = 0; t < right.state_count(); ++t) {
            for (const auto& c : enumerate_convergences_oracle(right, t, {4})) {
                CHECK_FALSE((c.source == L3::entry && c.diamond.size() == 4));
            }
        }
    }

    TEST_CASE("empty system") {
        Lts lts;
        CHECK(enumerate_all_convergences_oracle(lts).empty());
    }

    TEST_CASE("monotone chains and cubes agree") {
        using fixtures::L4a;
        using fixtures::L4b;
        Lts cube = L4a::lts();
        Lts chain = L4b::lts();
        auto diamonds_of = [](const Lts& lts, StateId from, StateId to) {
            std::set<std::string> labels;
            for (const auto& c : enumerate_convergences_oracle(lts, to, {6})) {
                if (c.source == from) {
                    labels.insert(fixtures::label(lts, c.diamond));
                }
            }
            return labels;
        };
        std::set<std::string> expected{"a^1", "a^2", "a^3"};
        CHECK(diamonds_of(chain, L4b::entry, L4b::exit) == std::set<std::string>{"a^3"});
        // Any state of the cube reaches the exit; the full diamond is a^3.
        CHECK(diamonds_of(cube, L4a::entry, L4a::exit) == std::set<std::string>{"a^3"});
        std::set<std::string> chain_all;
        std::set<std::string> cube_all;
        for (const auto& c : enumerate_convergences_oracle(chain, L4b::exit, {6})) {
            chain_all.insert(fixtures::label(chain, c.diamond));
        }
        for (const auto& c : enumerate_convergences_oracle(cube, L4a::exit, {6})) {
            cube_all.insert(fixtures::label(cube, c.diamond));
        }
        CHECK(chain_all == expected);
        CHECK(cube_all == expected);
    }

    TEST_CASE("budget") {
        Lts lts = fixtures::self_loop();
        OracleOptions options;
        options.max_size = 6;
        options.candidate_budget = 2;
        CHECK_THROWS_AS(enumerate_all_convergences_oracle(lts, options), OracleCapExceeded);
    }

    TEST_CASE("self-loop converges with every power") {
        Lts lts = fixtures::self_loop();
        auto all = enumerate_all_convergences_oracle(lts, {5});
        REQUIRE(all.size() == 5);
        for (std::size_t k = 1; k <= 5; ++k) {
            CHECK(fixtures::label(lts, all[k - 1].diamond) == "a^" + std::to_string(k));
            CHECK(all[k - 1].strict);
        }
    }
}

TEST_SUITE("oracle properties") {
    TEST_CASE("shuffle decompositions") {
        Alphabet alphabet{"a", "b"};
        auto word = alphabet.sequence("a b a");
        DiamondSet got = shuffle_decompositions(word);
        std::set<std::string> labels;
        for (const auto& d : got) {
            labels.insert(format_label(d, alphabet));
        }
        CHECK(labels == std::set<std::string>{"a^2 || b^1", "a^1 || (a b)^1", "a^1 || (b a)^1", "(a b a)^1"});
        for (const auto& d : got) {
            CHECK(is_sequence_of(word, d));
            CHECK(d.size() == 3);
        }
    }

    TEST_CASE("path candidates lose nothing against abstract enumeration") {
        // All diamonds up to size 4 over the system's labels, decided one by
        // one, must agree with the oracle's path-derived candidate set.
        auto corpus = random_corpus(60, 7);
        std::size_t compared = 0;
        for (const auto& lts : corpus) {
            const std::size_t k = lts.alphabet().size();
            std::set<Diamond> abstract;
            std::vector<Sequence> words{Sequence{}};
            for (std::size_t length = 1; length <= 4; ++length) {
                std::vector<Sequence> longer;
                for (const auto& w : words) {
                    for (ActionId a = 0; a < k; ++a) {
                        auto next = w;
                        next.push_back(a);
                        longer.push_back(next);
                    }
                }
                for (const auto& w : longer) {
                    for (const auto& d : shuffle_decompositions(w)) {
                        abstract.insert(d);
                    }
                }
                words = std::move(longer);
            }
            for (StateId t = 0; t < lts.state_count(); ++t) {
                std::vector<Convergence> brute;
                ConvergenceChecker checker(lts, t);
                for (StateId s = 0; s < lts.state_count(); ++s) {
                    for (const auto& d : abstract) {
                        if (checker.converges(s, d, false)) {
                            brute.push_back({s, d, t, checker.converges(s, d, true)});
                        }
                    }
                }
                std::sort(brute.begin(), brute.end());
                CHECK(enumerate_convergences_oracle(lts, t, {4}) == brute);
                ++compared;
            }
        }
        CHECK(compared > 100);
    }

    TEST_CASE("strict implies non-strict") {
        for (const auto& lts : random_corpus(80, 11)) {
            for (const auto& c : enumerate_all_convergences_oracle(lts, {5})) {
                CHECK(check_convergence(lts, c.source, c.diamond, c.target, false));
                CHECK(check_convergence(lts, c.source, c.diamond, c.target, true) == c.strict);
            }
        }
    }

    TEST_CASE("every sequence of a convergence is present") {
        std::vector<Lts> systems{fixtures::L1::lts(),  fixtures::L3::lts("a"), fixtures::L3::lts("d"),
                                 fixtures::L4a::lts(), fixtures::L4b::lts(),    fixtures::L7::lts(),
                                 fixtures::L7p::lts(), fixtures::L8::lts(),     fixtures::Cyclic::p()};
        for (auto& lts : random_corpus(150, 3)) {
            systems.push_back(std::move(lts));
        }
        std::size_t failures = 0;
        std::size_t checked = 0;
        for (const auto& lts : systems) {
            for (const auto& c : enumerate_all_convergences_oracle(lts, {5})) {
                failures += properties::interleaving_failures(lts, c);
                ++checked;
            }
        }
        CHECK(failures == 0);
        CHECK(checked > 100);
    }

    TEST_CASE("strict convergences from one state are prefix ordered") {
        std::size_t violations = 0;
        for (const auto& lts : random_corpus(150, 5)) {
            violations += properties::prefix_violations(enumerate_all_convergences_oracle(lts, {5}));
        }
        CHECK(violations == 0);
    }
}
