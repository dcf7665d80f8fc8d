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

#include "ltsdiamond/reducer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "ltsdiamond/aut.hpp"
#include "ltsdiamond/diamond_label.hpp"

namespace ltsdiamond {

ReducedLts::ReducedLts(std::size_t state_count, StateId initial, Alphabet alphabet, std::vector<ReducedEdge> edges)
    : state_count_(state_count), initial_(initial), alphabet_(std::move(alphabet)) {
    if (state_count_ > 0 && initial_ >= state_count_) {
        throw std::out_of_range("initial state out of range");
    }
    struct Keyed {
        StateId source;
        std::string text;
        StateId target;
        ReducedEdge edge;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(edges.size());
    for (auto& edge : edges) {
        if (edge.source >= state_count_ || edge.target >= state_count_) {
            throw std::out_of_range("edge endpoint out of range");
        }
        if (const auto* action = std::get_if<ActionId>(&edge.label); action != nullptr && *action >= alphabet_.size()) {
            throw std::out_of_range("edge action out of range");
        }
        keyed.push_back({edge.source, label_text(edge), edge.target, std::move(edge)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
        return std::tie(x.source, x.text, x.target) < std::tie(y.source, y.text, y.target);
    });
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].source == keyed[i - 1].source && keyed[i].text == keyed[i - 1].text &&
            keyed[i].target == keyed[i - 1].target) {
            continue;
        }
        edges_.push_back(std::move(keyed[i].edge));
    }
}

ReducedLts ReducedLts::from_lts(const Lts& lts) {
    std::vector<ReducedEdge> edges;
    edges.reserve(lts.transition_count());
    for (const auto& t : lts.transitions()) {
        edges.push_back({t.source, t.action, t.target});
    }
    return ReducedLts(lts.state_count(), lts.initial(), lts.alphabet(), std::move(edges));
}

std::size_t ReducedLts::macro_count() const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [](const ReducedEdge& e) { return e.is_macro(); }));
}

std::string ReducedLts::label_text(const ReducedEdge& edge) const {
    if (const auto* d = std::get_if<Diamond>(&edge.label)) {
        return format_label(*d, alphabet_);
    }
    return alphabet_.text(std::get<ActionId>(edge.label));
}

namespace {

using StrictFn = std::function<bool(StateId, const Diamond&)>;

struct VisitKey {
    StateId state;
    Diamond residue;
    friend bool operator==(const VisitKey&, const VisitKey&) = default;
};

struct VisitKeyHash {
    std::size_t operator()(const VisitKey& key) const noexcept {
        return DiamondHash{}(key.residue) * 0x100000001b3ULL ^ key.state;
    }
};

DiamondRegion region_of(const Lts& lts, StateId source, const Diamond& d, const StrictFn& strict) {
    DiamondRegion region;
    std::unordered_set<VisitKey, VisitKeyHash> seen;
    std::vector<VisitKey> todo{{source, d}};
    seen.insert(todo.front());
    while (!todo.empty()) {
        auto [q, residue] = std::move(todo.back());
        todo.pop_back();
        for (auto a : head(residue)) {
            auto tails = tail_action(residue, a);
            for (const auto& edge : lts.outgoing(q, a)) {
                for (const auto& tail : tails) {
                    if (!strict(edge.target, tail)) {
                        continue;
                    }
                    region.steps.push_back({q, a, edge.target});
                    VisitKey next{edge.target, tail};
                    if (seen.insert(next).second) {
                        todo.push_back(std::move(next));
                    }
                }
            }
        }
        region.visits.push_back({q, std::move(residue)});
    }
    std::sort(region.visits.begin(), region.visits.end(), [](const auto& x, const auto& y) {
        return std::tie(x.state, x.residue) < std::tie(y.state, y.residue);
    });
    std::sort(region.steps.begin(), region.steps.end());
    region.steps.erase(std::unique(region.steps.begin(), region.steps.end()), region.steps.end());
    return region;
}

std::vector<StateId> interior_of(const DiamondRegion& region, StateId source, StateId target) {
    std::vector<StateId> interior;
    for (const auto& visit : region.visits) {
        if (visit.state != source && visit.state != target &&
            (interior.empty() || interior.back() != visit.state)) {
            interior.push_back(visit.state);
        }
    }
    return interior;
}

bool has_step(const DiamondRegion& region, const Transition& t) {
    return std::binary_search(region.steps.begin(), region.steps.end(), t);
}

/// The rewrite conditions of reduce(), apart from collisions with other
/// macro edges.
bool rewritable(const Lts& lts, const Convergence& c, const DiamondRegion& region,
                const std::vector<StateId>& interior) {
    for (std::size_t i = 1; i < region.visits.size(); ++i) {
        if (region.visits[i].state == region.visits[i - 1].state) {
            return false;
        }
    }
    for (const auto& visit : region.visits) {
        if (visit.state == c.source && visit.residue != c.diamond) {
            return false;
        }
        if (visit.state == c.target && !visit.residue.empty()) {
            return false;
        }
    }
    for (const auto& e : lts.outgoing(c.source)) {
        if (!has_step(region, {c.source, e.action, e.target})) {
            return false;
        }
    }
    for (auto s : interior) {
        if (s == lts.initial()) {
            return false;
        }
        for (const auto& e : lts.outgoing(s)) {
            if (!has_step(region, {s, e.action, e.target})) {
                return false;
            }
        }
        for (const auto& e : lts.incoming(s)) {
            if (!has_step(region, {e.source, e.action, s})) {
                return false;
            }
        }
    }
    return true;
}

struct StrictKey {
    StateId state;
    StateId target;
    Diamond diamond;
    friend bool operator==(const StrictKey&, const StrictKey&) = default;
};

struct StrictKeyHash {
    std::size_t operator()(const StrictKey& key) const noexcept {
        return (DiamondHash{}(key.diamond) * 0x100000001b3ULL ^ key.state) * 31 + key.target;
    }
};

}  // namespace

DiamondRegion diamond_region(const Lts& lts, const Convergence& c) {
    ConvergenceChecker checker(lts, c.target);
    return region_of(lts, c.source, c.diamond,
                     [&](StateId q, const Diamond& t) { return checker.converges(q, t, true); });
}

std::vector<StateId> interior_states(const Lts& lts, const Convergence& c) {
    if (!c.strict) {
        throw std::invalid_argument("interior_states requires a strict convergence");
    }
    return interior_of(diamond_region(lts, c), c.source, c.target);
}

ReduceResult reduce(const Lts& lts, const ReduceOptions& options) {
    DetectorOptions detector;
    detector.max_size = options.max_size;
    detector.threads = options.threads;
    auto found = find_all_diamonds(lts, detector);

    std::unordered_set<StrictKey, StrictKeyHash> strict;
    for (const auto& c : found.convergences) {
        if (c.strict) {
            strict.insert({c.source, c.target, c.diamond});
        }
    }

    struct Candidate {
        Convergence convergence;
        std::string label;
    };
    std::vector<Candidate> candidates;
    for (auto& c : maximal_strict(found.convergences)) {
        if (c.diamond.size() >= 2) {
            auto label = format_label(c.diamond, lts.alphabet());
            candidates.push_back({std::move(c), std::move(label)});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        auto xs = x.convergence.diamond.size();
        auto ys = y.convergence.diamond.size();
        return std::tie(ys, x.convergence.source, x.label, x.convergence.target) <
               std::tie(xs, y.convergence.source, y.label, y.convergence.target);
    });

    ReduceResult result;
    result.truncated_targets = found.truncated_targets;
    const std::size_t n = lts.state_count();
    // 0 = untouched, 1 = endpoint of a kept macro, 2 = interior of one.
    std::vector<char> role(n, 0);
    std::vector<Transition> removed_steps;

    for (auto& [c, label] : candidates) {
        auto is_strict = [&](StateId q, const Diamond& t) {
            return t.empty() ? q == c.target : strict.contains({q, c.target, t});
        };
        auto region = region_of(lts, c.source, c.diamond, is_strict);
        auto interior = interior_of(region, c.source, c.target);
        bool collides = role[c.source] == 2 || role[c.target] == 2 ||
                        std::any_of(interior.begin(), interior.end(), [&](StateId s) { return role[s] != 0; });
        if (collides || !rewritable(lts, c, region, interior)) {
            result.skipped.push_back(std::move(c));
            continue;
        }
        role[c.source] = 1;
        role[c.target] = 1;
        for (auto s : interior) {
            role[s] = 2;
        }
        removed_steps.insert(removed_steps.end(), region.steps.begin(), region.steps.end());
        result.rewritten.push_back(std::move(c));
    }
    std::sort(removed_steps.begin(), removed_steps.end());

    result.new_index.assign(n, kRemovedState);
    StateId next = 0;
    for (StateId s = 0; s < n; ++s) {
        if (role[s] != 2) {
            result.new_index[s] = next++;
        }
    }
    std::vector<ReducedEdge> edges;
    for (const auto& t : lts.transitions()) {
        if (std::binary_search(removed_steps.begin(), removed_steps.end(), t)) {
            continue;
        }
        edges.push_back({result.new_index[t.source], t.action, result.new_index[t.target]});
    }
    for (const auto& c : result.rewritten) {
        edges.push_back({result.new_index[c.source], c.diamond, result.new_index[c.target]});
    }
    std::size_t kept = next;
    result.reduced = ReducedLts(kept, result.new_index[lts.initial()], lts.alphabet(), std::move(edges));
    return result;
}

Lts expand(const ReducedLts& reduced) {
    std::vector<Transition> transitions;
    std::size_t states = reduced.state_count();
    for (const auto& edge : reduced.edges()) {
        if (const auto* action = std::get_if<ActionId>(&edge.label)) {
            transitions.push_back({edge.source, *action, edge.target});
            continue;
        }
        auto graph = interleaving_graph(std::get<Diamond>(edge.label));
        std::vector<StateId> state_of(graph.residues.size());
        for (std::size_t i = 0; i < graph.residues.size(); ++i) {
            if (i == 0) {
                state_of[i] = edge.source;
            } else if (i == graph.empty_index) {
                state_of[i] = edge.target;
            } else {
                state_of[i] = static_cast<StateId>(states++);
            }
        }
        for (const auto& step : graph.steps) {
            transitions.push_back({state_of[step.from], step.action, state_of[step.to]});
        }
    }
    return Lts(states, reduced.initial(), reduced.alphabet(), std::move(transitions));
}

std::string write_reduced_aut(const ReducedLts& reduced) {
    std::vector<std::tuple<StateId, std::string, StateId>> lines;
    lines.reserve(reduced.edges().size());
    for (const auto& edge : reduced.edges()) {
        lines.emplace_back(edge.source, reduced.label_text(edge), edge.target);
    }
    return write_aut_lines(reduced.initial(), reduced.state_count(), lines);
}

ReducedLts parse_reduced_aut(std::string_view text) {
    auto document = parse_aut_document(text);
    Alphabet alphabet;
    std::vector<ReducedEdge> edges;
    edges.reserve(document.lines.size());
    for (const auto& line : document.lines) {
        if (looks_like_diamond_label(line.label)) {
            edges.push_back({line.source, parse_label(line.label, alphabet), line.target});
        } else {
            edges.push_back({line.source, alphabet.intern(line.label), line.target});
        }
    }
    return ReducedLts(document.state_count, document.initial, std::move(alphabet), std::move(edges));
}

}  // namespace ltsdiamond
