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

#include "ltsdiamond/generator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>

namespace ltsdiamond {

namespace {

struct Region {
    std::size_t state_count = 0;
    std::size_t exit = 0;
    /// Local state indices; the entry is 0.
    std::vector<Transition> steps;
};

Region quotient_region(const Diamond& d, std::size_t max_states) {
    InterleavingGraph graph;
    try {
        graph = interleaving_graph(d, max_states);
    } catch (const std::length_error&) {
        throw GeneratorCapExceeded("diamond region exceeds the state budget");
    }
    Region region;
    region.state_count = graph.residues.size();
    region.exit = graph.empty_index;
    for (const auto& step : graph.steps) {
        region.steps.push_back(
            {static_cast<StateId>(step.from), step.action, static_cast<StateId>(step.to)});
    }
    return region;
}

Region unfolded_region(const Diamond& d, std::size_t max_states) {
    std::vector<Sequence> atoms;
    for (const auto& [action, count] : d.actions()) {
        atoms.insert(atoms.end(), count, Sequence{action});
    }
    for (const auto& [sequence, count] : d.sequences()) {
        atoms.insert(atoms.end(), count, sequence);
    }
    using Progress = std::vector<std::uint32_t>;
    std::map<Progress, StateId> index;
    std::deque<Progress> todo;
    Region region;
    auto visit = [&](const Progress& p) {
        auto [it, inserted] = index.emplace(p, static_cast<StateId>(index.size()));
        if (inserted) {
            if (index.size() > max_states) {
                throw GeneratorCapExceeded("diamond region exceeds the state budget");
            }
            todo.push_back(p);
        }
        return it->second;
    };
    visit(Progress(atoms.size(), 0));
    while (!todo.empty()) {
        auto p = todo.front();
        todo.pop_front();
        auto from = index.at(p);
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (p[i] == atoms[i].size()) {
                continue;
            }
            auto next = p;
            ++next[i];
            auto action = atoms[i][p[i]];
            region.steps.push_back({from, action, visit(next)});
        }
    }
    Progress full(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        full[i] = static_cast<std::uint32_t>(atoms[i].size());
    }
    region.state_count = index.size();
    region.exit = index.at(full);
    return region;
}

std::string label_name(std::size_t i) {
    if (i < 26) {
        return std::string(1, static_cast<char>('a' + i));
    }
    return "l" + std::to_string(i);
}

}  // namespace

GeneratedLts lts_of_diamond(const GenSpec& spec, const Alphabet& alphabet) {
    if (spec.diamond.empty()) {
        throw std::invalid_argument("lts_of_diamond needs a non-empty diamond");
    }
    auto region = spec.unfold ? unfolded_region(spec.diamond, spec.max_states)
                              : quotient_region(spec.diamond, spec.max_states);

    const auto prefix = static_cast<StateId>(spec.prefix_chain.size());
    std::vector<Transition> transitions;
    for (StateId i = 0; i < prefix; ++i) {
        transitions.push_back({i, spec.prefix_chain[i], i + 1});
    }
    for (const auto& step : region.steps) {
        transitions.push_back({step.source + prefix, step.action, step.target + prefix});
    }
    const auto entry = prefix;
    const auto exit = static_cast<StateId>(prefix + region.exit);
    auto next = static_cast<StateId>(prefix + region.state_count);
    StateId last = exit;
    for (auto action : spec.suffix_chain) {
        transitions.push_back({last, action, next});
        last = next++;
    }
    GeneratedLts generated{Lts(next, 0, alphabet, std::move(transitions)),
                           Convergence{entry, spec.diamond, exit, true}};
    return generated;
}

Lts random_lts(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument("random_lts needs at least one state and one label");
    }
    Alphabet alphabet;
    for (std::size_t i = 0; i < k; ++i) {
        alphabet.intern(label_name(i));
    }
    std::mt19937_64 rng(seed);
    const std::size_t possible = n * n * k;
    const std::size_t wanted = std::min(m, possible);
    std::set<Transition> chosen;
    // Bounded retries keep dense requests from spinning.
    for (std::size_t attempt = 0; chosen.size() < wanted && attempt < 64 * (wanted + 1); ++attempt) {
        auto source = static_cast<StateId>(rng() % n);
        auto action = static_cast<ActionId>(rng() % k);
        auto target = static_cast<StateId>(rng() % n);
        chosen.insert({source, action, target});
    }
    return Lts(n, 0, std::move(alphabet), std::vector<Transition>(chosen.begin(), chosen.end()));
}

std::vector<Lts> random_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Lts> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = 1 + rng() % 8;
        std::size_t m = rng() % 15;
        std::size_t k = 1 + rng() % 3;
        corpus.push_back(random_lts(n, m, k, rng()));
    }
    return corpus;
}

Lts chain_of_diamonds(std::size_t regions) {
    Alphabet alphabet{"a", "b", "c"};
    const ActionId a = 0;
    const ActionId b = 1;
    const ActionId c = 2;
    std::vector<Transition> transitions;
    transitions.reserve(7 * regions);
    for (std::size_t r = 0; r < regions; ++r) {
        auto entry = static_cast<StateId>(5 * r);
        StateId after_a = entry + 1;
        StateId after_c = entry + 2;
        StateId after_ab = entry + 3;
        StateId after_ac = entry + 4;
        StateId exit = entry + 5;
        transitions.push_back({entry, a, after_a});
        transitions.push_back({entry, c, after_c});
        transitions.push_back({after_a, b, after_ab});
        transitions.push_back({after_a, c, after_ac});
        transitions.push_back({after_c, a, after_ac});
        transitions.push_back({after_ab, c, exit});
        transitions.push_back({after_ac, b, exit});
    }
    return Lts(5 * regions + 1, 0, std::move(alphabet), std::move(transitions));
}

}  // namespace ltsdiamond
