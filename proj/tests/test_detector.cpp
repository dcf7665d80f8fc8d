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
#include <set>
#include <string>

#include "fixtures.hpp"
#include "ltsdiamond/detector.hpp"
#include "ltsdiamond/generator.hpp"
#include "ltsdiamond/oracle.hpp"
#include "properties.hpp"

using namespace ltsdiamond;
using fixtures::diamond;

namespace {

bool has(const std::vector<Convergence>& all, const Convergence& c) {
    return std::find(all.begin(), all.end(), c) != all.end();
}

std::set<std::string> labels_from(const Lts& lts, const ConvergenceTable& table, StateId source) {
    std::set<std::string> labels;
    for (const auto& c : table.entries()) {
        if (c.source == source) {
            labels.insert(fixtures::label(lts, c.diamond));
        }
    }
    return labels;
}

}  // namespace

TEST_SUITE("find_diamonds_to") {
    TEST_CASE("a1 a2 in parallel with b") {
        using fixtures::L1;
        Lts lts = L1::lts();
        auto table = find_diamonds_to(lts, L1::exit);
        auto d = diamond(lts, "(a1 a2)^1 || b^1");
        CHECK(table.contains(L1::entry, d));
        CHECK(table.is_strict(L1::entry, d));
        CHECK(table.strict_flag(L1::entry));
        CHECK_FALSE(table.truncated());
        CHECK(table.target() == L1::exit);
        CHECK(table.contains(L1::exit, Diamond{}));
        CHECK_FALSE(table.contains(L1::entry, Diamond{}));
    }

    TEST_CASE("grids") {
        using fixtures::L3;
        Lts left = L3::lts("a");
        auto table = find_diamonds_to(left, L3::exit);
        CHECK(table.is_strict(L3::entry, diamond(left, "(b a)^1 || (c a)^1")));
        Lts right = L3::lts("d");
        auto other = find_diamonds_to(right, L3::exit);
        for (const auto& c : other.entries()) {
            CHECK_FALSE((c.source == L3::entry && c.diamond.size() == 4));
        }
        CHECK(labels_from(right, other, L3::entry).empty());
    }

    TEST_CASE("self-loop is cut at the cap") {
        Lts lts = fixtures::self_loop();
        DetectorOptions options;
        options.max_size = 5;
        auto table = find_diamonds_to(lts, 0, options);
        CHECK(labels_from(lts, table, 0) == std::set<std::string>{"a^1", "a^2", "a^3", "a^4", "a^5"});
        CHECK(table.truncated());
        CHECK(table.complete_size() == 5);
        for (const auto& c : table.entries()) {
            CHECK(c.strict);
        }
    }

    TEST_CASE("untruncated searches are complete at every size") {
        auto table = find_diamonds_to(fixtures::L1::lts(), fixtures::L1::exit);
        CHECK(table.complete_size() == static_cast<std::size_t>(-1));
        CHECK_FALSE(table.truncated());
    }

    TEST_CASE("entries in size order and sorted view") {
        auto table = find_diamonds_to(fixtures::L8::lts(), fixtures::L8::exit);
        const auto& entries = table.entries();
        for (std::size_t i = 1; i < entries.size(); ++i) {
            CHECK(entries[i - 1].diamond.size() <= entries[i].diamond.size());
        }
        auto sorted = table.sorted_entries();
        CHECK(std::is_sorted(sorted.begin(), sorted.end()));
        CHECK(sorted.size() == entries.size());
    }

    TEST_CASE("up to an equivalence") {
        using fixtures::L7p;
        Lts lts = L7p::lts();
        auto d = diamond(lts, "a^1 || b^1");
        CHECK_FALSE(find_diamonds_to(lts, L7p::exit).contains(L7p::entry, d));
        auto merged = StateEquivalence::merging(lts.state_count(), {{L7p::exit, L7p::exit_prime}});
        auto table = find_diamonds_to_class(lts, L7p::exit, merged);
        CHECK(table.contains(L7p::entry, d));
        CHECK(table.is_strict(L7p::entry, d));
        CHECK(table.contains(L7p::exit_prime, Diamond{}));
    }

    TEST_CASE("target out of range") {
        CHECK_THROWS(find_diamonds_to(fixtures::L1::lts(), 17));
    }
}

TEST_SUITE("step") {
    TEST_CASE("closing the L1 region") {
        using fixtures::L1;
        Lts lts = L1::lts();
        auto table = find_diamonds_to(lts, L1::exit);
        auto outcome = step(lts, L1::entry, lts.alphabet().at("b"), L1::after_b, diamond(lts, "(a1 a2)^1"), table);
        CHECK(outcome.kind == StepOutcome::Kind::Strict);
        CHECK(outcome.strict == DiamondSet{diamond(lts, "(a1 a2)^1 || b^1")});
        CHECK(outcome.non_strict == DiamondSet{diamond(lts, "(b a1 a2)^1")});
    }

    TEST_CASE("an extra transition blocks the intermediate state") {
        using fixtures::L7p;
        Lts lts = L7p::lts();
        auto table = find_diamonds_to(lts, L7p::exit);
        auto outcome = step(lts, L7p::entry, lts.alphabet().at("b"), L7p::p, diamond(lts, "a^1"), table);
        CHECK(outcome.kind == StepOutcome::Kind::None);
        CHECK(outcome.strict.empty());
        CHECK(outcome.non_strict.empty());
    }

    TEST_CASE("chain a a") {
        Lts lts = Lts::from_labels(3, 0, {{0, "a", 1}, {1, "a", 2}});
        auto table = find_diamonds_to(lts, 2);
        auto outcome = step(lts, 0, lts.alphabet().at("a"), 1, diamond(lts, "a^1"), table);
        CHECK(outcome.kind == StepOutcome::Kind::Strict);
        CHECK(outcome.strict == DiamondSet{diamond(lts, "a^2")});
    }

    TEST_CASE("preconditions") {
        using fixtures::L1;
        Lts lts = L1::lts();
        ConvergenceTable empty(lts, L1::exit);
        auto a2 = diamond(lts, "a2^1");
        CHECK_THROWS_AS(step(lts, L1::after_a1, lts.alphabet().at("b"), L1::after_a1b, a2, empty),
                        PreconditionViolated);
        auto table = find_diamonds_to(lts, L1::exit);
        CHECK_THROWS_AS(step(lts, L1::entry, lts.alphabet().at("b"), L1::after_a1b, a2, table),
                        PreconditionViolated);
        CHECK_NOTHROW(step(lts, L1::after_a1, lts.alphabet().at("b"), L1::after_a1b, a2, table, true));
    }
}

TEST_SUITE("find_all_diamonds") {
    TEST_CASE("L1") {
        using fixtures::L1;
        Lts lts = L1::lts();
        auto result = find_all_diamonds(lts);
        CHECK(has(result.convergences, {L1::entry, diamond(lts, "(a1 a2)^1 || b^1"), L1::exit, true}));
        CHECK(has(result.convergences, {L1::after_a1, diamond(lts, "a2^1 || b^1"), L1::exit, true}));
        CHECK(has(result.convergences, {L1::after_b, diamond(lts, "(a1 a2)^1"), L1::exit, true}));
        CHECK(result.truncated_targets.empty());
        auto maximal = maximal_strict(result.convergences);
        std::size_t from_entry = 0;
        for (const auto& c : maximal) {
            from_entry += c.source == L1::entry ? 1 : 0;
        }
        CHECK(from_entry == 1);
        CHECK(has(maximal, {L1::entry, diamond(lts, "(a1 a2)^1 || b^1"), L1::exit, true}));
    }

    TEST_CASE("single state") {
        CHECK(find_all_diamonds(Lts{}).convergences.empty());
    }

    TEST_CASE("trace-equivalent system loses the diamond") {
        using fixtures::L8;
        Lts lts = L8::lts();
        auto d = diamond(lts, "b^1 || (a1 a2)^1");
        for (const auto& c : find_all_diamonds(lts).convergences) {
            CHECK_FALSE((c.source == L8::entry && c.diamond == d));
        }
    }

    TEST_CASE("ordering") {
        auto result = find_all_diamonds(fixtures::L3::lts("a"));
        const auto& all = result.convergences;
        Lts lts = fixtures::L3::lts("a");
        for (std::size_t i = 1; i < all.size(); ++i) {
            auto key = [&](const Convergence& c) {
                return std::tuple(c.source, c.target, fixtures::label(lts, c.diamond));
            };
            CHECK(key(all[i - 1]) < key(all[i]));
        }
    }

    TEST_CASE("deterministic across runs and thread counts") {
        for (const auto& lts : random_corpus(40, 99)) {
            DetectorOptions one;
            one.max_size = 6;
            DetectorOptions many = one;
            many.threads = 4;
            auto first = find_all_diamonds(lts, one);
            CHECK(first.convergences == find_all_diamonds(lts, one).convergences);
            auto parallel = find_all_diamonds(lts, many);
            CHECK(first.convergences == parallel.convergences);
            CHECK(first.truncated_targets == parallel.truncated_targets);
        }
        auto chain = chain_of_diamonds(50);
        DetectorOptions hw;
        hw.threads = 0;
        CHECK(find_all_diamonds(chain).convergences == find_all_diamonds(chain, hw).convergences);
    }
}

TEST_SUITE("maximal_strict") {
    TEST_CASE("prefix chain") {
        Lts lts = fixtures::L4b::lts();
        Convergence small{0, diamond(lts, "a^1"), 3, true};
        Convergence big{0, diamond(lts, "a^2"), 3, true};
        CHECK(maximal_strict({small, big}) == std::vector<Convergence>{big});
        CHECK(maximal_strict({}).empty());
    }

    TEST_CASE("non-strict entries are dropped") {
        Lts lts = fixtures::L1::lts();
        Convergence loose{0, diamond(lts, "(b a1 a2)^1"), 5, false};
        CHECK(maximal_strict({loose}).empty());
    }

    TEST_CASE("incomparable diamonds are an error") {
        Lts lts = fixtures::L7::lts();
        Convergence left{0, diamond(lts, "(a b)^1"), 5, true};
        Convergence right{0, diamond(lts, "(c b)^1"), 6, true};
        CHECK_THROWS_AS(maximal_strict({left, right}), OverlapViolation);
    }

    TEST_CASE("equal size mutual prefixes are both kept") {
        Lts lts = fixtures::L1::lts();
        Convergence x{0, diamond(lts, "(a1 a2)^1 || b^1"), 5, true};
        Convergence y{0, diamond(lts, "(a1 a2 b)^1"), 5, true};
        CHECK(maximal_strict({x, y}).size() == 2);
    }
}

TEST_SUITE("agreement with the oracle") {
    TEST_CASE("fixtures") {
        std::vector<Lts> systems{fixtures::L1::lts(),  fixtures::L3::lts("a"), fixtures::L3::lts("d"),
                                 fixtures::L4a::lts(), fixtures::L4b::lts(),    fixtures::L7::lts(),
                                 fixtures::L7p::lts(), fixtures::L8::lts(),     fixtures::Cyclic::p(),
                                 fixtures::Cyclic::q(), fixtures::Cyclic::r(),  fixtures::self_loop()};
        DetectorOptions options;
        options.max_size = 6;
        options.verify_invariants = true;
        for (const auto& lts : systems) {
            for (StateId t = 0; t < lts.state_count(); ++t) {
                auto table = find_diamonds_to(lts, t, options);
                CHECK(table.sorted_entries() == enumerate_convergences_oracle(lts, t, {6}));
            }
        }
    }

    TEST_CASE("random systems") {
        DetectorOptions options;
        options.max_size = 6;
        options.verify_invariants = true;
        std::size_t mismatches = 0;
        std::size_t violations = 0;
        for (const auto& lts : random_corpus(200, 2024)) {
            std::vector<Convergence> all;
            for (StateId t = 0; t < lts.state_count(); ++t) {
                auto entries = find_diamonds_to(lts, t, options).sorted_entries();
                all.insert(all.end(), entries.begin(), entries.end());
            }
            std::sort(all.begin(), all.end());
            mismatches += all == enumerate_all_convergences_oracle(lts, {6}) ? 0 : 1;
            violations += properties::prefix_violations(all);
        }
        CHECK(mismatches == 0);
        CHECK(violations == 0);
    }
}
