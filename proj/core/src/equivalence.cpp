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

#include "ltsdiamond/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace ltsdiamond {

namespace {

struct SignatureHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        std::size_t seed = v.size();
        for (auto x : v) {
            seed ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
        }
        return seed;
    }
};

/// Renumbers class ids by first occurrence in state order.
std::size_t renumber(std::vector<std::uint32_t>& class_of) {
    std::unordered_map<std::uint32_t, std::uint32_t> fresh;
    for (auto& c : class_of) {
        auto [it, inserted] = fresh.emplace(c, static_cast<std::uint32_t>(fresh.size()));
        c = it->second;
    }
    return fresh.size();
}

}  // namespace

Partition bisim_partition(const Lts& lts) {
    const std::size_t n = lts.state_count();
    std::vector<std::uint32_t> class_of(n, 0);
    std::size_t count = n == 0 ? 0 : 1;
    // A state's signature is its own block plus the set of (action, block)
    // pairs it can reach in one step. Refine until the block count is stable.
    while (true) {
        std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, SignatureHash> ids;
        std::vector<std::uint32_t> next(n);
        for (StateId s = 0; s < n; ++s) {
            std::vector<std::uint64_t> signature;
            signature.reserve(lts.outgoing(s).size() + 1);
            for (const auto& e : lts.outgoing(s)) {
                signature.push_back((static_cast<std::uint64_t>(e.action) << 32) | class_of[e.target]);
            }
            std::sort(signature.begin(), signature.end());
            signature.erase(std::unique(signature.begin(), signature.end()), signature.end());
            signature.push_back(~static_cast<std::uint64_t>(class_of[s]));
            auto [it, inserted] = ids.emplace(std::move(signature), static_cast<std::uint32_t>(ids.size()));
            next[s] = it->second;
        }
        std::size_t refined = renumber(next);
        class_of = std::move(next);
        if (refined == count) {
            break;
        }
        count = refined;
    }
    Partition partition;
    partition.class_of = std::move(class_of);
    partition.blocks.resize(count);
    for (StateId s = 0; s < n; ++s) {
        partition.blocks[partition.class_of[s]].push_back(s);
    }
    return partition;
}

Lts minimize(const Lts& lts) {
    auto partition = bisim_partition(lts);
    std::vector<Transition> lifted;
    lifted.reserve(lts.transition_count());
    for (const auto& t : lts.transitions()) {
        lifted.push_back({partition.class_of[t.source], t.action, partition.class_of[t.target]});
    }
    return Lts(partition.block_count(), partition.class_of.at(lts.initial()), lts.alphabet(), std::move(lifted));
}

Lts disjoint_union(const Lts& left, const Lts& right) {
    Alphabet alphabet = left.alphabet();
    std::vector<ActionId> mapped(right.alphabet().size());
    for (ActionId a = 0; a < right.alphabet().size(); ++a) {
        mapped[a] = alphabet.intern(right.alphabet().text(a));
    }
    auto shift = static_cast<StateId>(left.state_count());
    std::vector<Transition> transitions = left.transitions();
    for (const auto& t : right.transitions()) {
        transitions.push_back({t.source + shift, mapped[t.action], t.target + shift});
    }
    return Lts(left.state_count() + right.state_count(), left.initial(), std::move(alphabet),
               std::move(transitions));
}

bool bisimilar(const Lts& left, const Lts& right) {
    auto joined = disjoint_union(left, right);
    return bisim_partition(joined).same_block(left.initial(),
                                              static_cast<StateId>(left.state_count()) + right.initial());
}

namespace {

class IsomorphismSearch {
public:
    IsomorphismSearch(const Lts& left, const Lts& right) : left_(left), right_(right) {
        // Translate right's action ids into left's, by label text.
        right_to_left_.assign(right.alphabet().size(), kNoAction);
        for (ActionId a = 0; a < right.alphabet().size(); ++a) {
            if (auto id = left.alphabet().find(right.alphabet().text(a))) {
                right_to_left_[a] = *id;
            }
        }
    }

    bool run() {
        const std::size_t n = left_.state_count();
        if (n != right_.state_count() || left_.transition_count() != right_.transition_count()) {
            return false;
        }
        for (const auto& t : right_.transitions()) {
            if (right_to_left_[t.action] == kNoAction) {
                return false;
            }
        }
        forward_.assign(n, kUnmapped);
        backward_.assign(n, kUnmapped);
        if (n == 0) {
            return true;
        }
        if (!assign(left_.initial(), right_.initial())) {
            return false;
        }
        order_.clear();
        for (StateId s = 0; s < n; ++s) {
            order_.push_back(s);
        }
        return extend(0);
    }

private:
    static constexpr StateId kUnmapped = ~StateId{0};
    static constexpr ActionId kNoAction = ~ActionId{0};

    std::vector<std::pair<ActionId, StateId>> out_of_right(StateId s) const {
        std::vector<std::pair<ActionId, StateId>> edges;
        for (const auto& e : right_.outgoing(s)) {
            edges.emplace_back(right_to_left_[e.action], e.target);
        }
        return edges;
    }

    bool consistent(StateId l, StateId r) const {
        if (left_.outgoing(l).size() != right_.outgoing(r).size() ||
            left_.incoming(l).size() != right_.incoming(r).size()) {
            return false;
        }
        // Every edge between already mapped states must be mirrored.
        for (const auto& e : left_.outgoing(l)) {
            StateId mapped = e.target == l ? r : forward_[e.target];
            if (mapped == kUnmapped) {
                continue;
            }
            bool found = false;
            for (const auto& [action, target] : out_of_right(r)) {
                found = found || (action == e.action && target == mapped);
            }
            if (!found) {
                return false;
            }
        }
        for (const auto& e : left_.incoming(l)) {
            StateId mapped = e.source == l ? r : forward_[e.source];
            if (mapped == kUnmapped) {
                continue;
            }
            bool found = false;
            for (const auto& [action, target] : out_of_right(mapped)) {
                found = found || (action == e.action && target == r);
            }
            if (!found) {
                return false;
            }
        }
        return true;
    }

    bool assign(StateId l, StateId r) {
        if (!consistent(l, r)) {
            return false;
        }
        forward_[l] = r;
        backward_[r] = l;
        return true;
    }

    bool extend(std::size_t index) {
        while (index < order_.size() && forward_[order_[index]] != kUnmapped) {
            ++index;
        }
        if (index == order_.size()) {
            return true;
        }
        StateId l = order_[index];
        for (StateId r = 0; r < right_.state_count(); ++r) {
            if (backward_[r] != kUnmapped || !assign(l, r)) {
                continue;
            }
            if (extend(index + 1)) {
                return true;
            }
            forward_[l] = kUnmapped;
            backward_[r] = kUnmapped;
        }
        return false;
    }

    const Lts& left_;
    const Lts& right_;
    std::vector<ActionId> right_to_left_;
    std::vector<StateId> forward_;
    std::vector<StateId> backward_;
    std::vector<StateId> order_;
};

}  // namespace

bool isomorphic(const Lts& left, const Lts& right) { return IsomorphismSearch(left, right).run(); }

std::set<Sequence> bounded_traces(const Lts& lts, StateId state, std::size_t k) {
    std::set<Sequence> traces{Sequence{}};
    std::map<Sequence, std::vector<StateId>> frontier{{Sequence{}, {state}}};
    for (std::size_t length = 0; length < k && !frontier.empty(); ++length) {
        std::map<Sequence, std::vector<StateId>> next;
        for (const auto& [word, states] : frontier) {
            for (auto s : states) {
                for (const auto& e : lts.outgoing(s)) {
                    auto longer = word;
                    longer.push_back(e.action);
                    next[std::move(longer)].push_back(e.target);
                }
            }
        }
        for (auto& [word, states] : next) {
            std::sort(states.begin(), states.end());
            states.erase(std::unique(states.begin(), states.end()), states.end());
            traces.insert(word);
        }
        frontier = std::move(next);
    }
    return traces;
}

DiamondEquivalenceChecker::DiamondEquivalenceChecker(const Lts& lts, std::size_t max_size)
    : lts_(lts),
      max_size_(max_size),
      partition_(bisim_partition(lts)),
      classes_(partition_.class_of) {}

void DiamondEquivalenceChecker::ensure_computed() {
    if (computed_) {
        return;
    }
    facts_.assign(lts_.state_count(), {});
    DetectorOptions options;
    options.max_size = max_size_;
    for (StateId t = 0; t < lts_.state_count(); ++t) {
        auto exact = find_diamonds_to(lts_, t, options);
        truncated_ = truncated_ || exact.truncated();
        for (const auto& c : exact.entries()) {
            facts_[c.source].exact.emplace(partition_.class_of[t], c.diamond);
        }
    }
    for (const auto& block : partition_.blocks) {
        auto up_to = find_diamonds_to_class(lts_, block.front(), classes_, options);
        truncated_ = truncated_ || up_to.truncated();
        for (const auto& c : up_to.entries()) {
            facts_[c.source].up_to_class.emplace(partition_.class_of[block.front()], c.diamond);
        }
    }
    computed_ = true;
}

bool DiamondEquivalenceChecker::matches(StateId from, StateId to) {
    const auto& needed = facts_[from].exact;
    const auto& offered = facts_[to].up_to_class;
    return std::includes(offered.begin(), offered.end(), needed.begin(), needed.end());
}

bool DiamondEquivalenceChecker::equivalent(StateId q1, StateId q2) {
    if (q1 >= lts_.state_count() || q2 >= lts_.state_count()) {
        throw std::out_of_range("state out of range");
    }
    if (q1 == q2) {
        return true;
    }
    ensure_computed();
    return matches(q1, q2) && matches(q2, q1);
}

bool diamond_equivalent(const Lts& lts, StateId q1, StateId q2, std::size_t max_size) {
    return DiamondEquivalenceChecker(lts, max_size).equivalent(q1, q2);
}

}  // namespace ltsdiamond
