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

#include "ltsdiamond/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ltsdiamond {

StateEquivalence::StateEquivalence(std::vector<std::uint32_t> class_of) : class_of_(std::move(class_of)) {}

StateEquivalence StateEquivalence::identity(std::size_t state_count) {
    std::vector<std::uint32_t> class_of(state_count);
    std::iota(class_of.begin(), class_of.end(), 0U);
    return StateEquivalence(std::move(class_of));
}

StateEquivalence StateEquivalence::merging(std::size_t state_count,
                                           const std::vector<std::vector<StateId>>& groups) {
    std::vector<std::uint32_t> class_of(state_count);
    std::iota(class_of.begin(), class_of.end(), 0U);
    for (const auto& group : groups) {
        if (group.empty()) {
            continue;
        }
        std::uint32_t id = class_of.at(group.front());
        for (auto s : group) {
            id = std::min(id, class_of.at(s));
        }
        std::vector<std::uint32_t> old;
        for (auto s : group) {
            old.push_back(class_of.at(s));
        }
        for (auto& c : class_of) {
            if (std::find(old.begin(), old.end(), c) != old.end()) {
                c = id;
            }
        }
    }
    return StateEquivalence(std::move(class_of));
}

std::vector<StateId> StateEquivalence::members_of_class_of(StateId s) const {
    std::vector<StateId> members;
    for (StateId q = 0; q < class_of_.size(); ++q) {
        if (class_of_[q] == class_of_.at(s)) {
            members.push_back(q);
        }
    }
    return members;
}

std::size_t ConvergenceChecker::KeyHash::operator()(const Key& key) const noexcept {
    return DiamondHash{}(key.diamond) * 31 + key.state * 2 + (key.strict ? 1 : 0);
}

ConvergenceChecker::ConvergenceChecker(const Lts& lts, StateId target, const StateEquivalence* equivalence)
    : lts_(lts), target_(target), equivalence_(equivalence) {}

bool ConvergenceChecker::at_target(StateId state) const {
    return equivalence_ != nullptr ? equivalence_->equivalent(state, target_) : state == target_;
}

bool ConvergenceChecker::converges(StateId source, const Diamond& d, bool strict) {
    if (d.empty()) {
        return at_target(source);
    }
    Key key{source, d, strict};
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }

    auto out = lts_.outgoing(source);
    bool result = true;
    // Every head action and every tail it leaves must be realised by some
    // successor that strictly converges with that tail.
    for (auto action : head(d)) {
        auto next = lts_.outgoing(source, action);
        for (const auto& tail : tail_action(d, action)) {
            bool realised = std::any_of(next.begin(), next.end(),
                                        [&](const OutEdge& e) { return converges(e.target, tail, true); });
            if (!realised) {
                result = false;
                break;
            }
        }
        if (!result) {
            break;
        }
    }
    // Strict: every outgoing transition is explained by some tail.
    if (result && strict) {
        for (const auto& edge : out) {
            auto tails = tail_action(d, edge.action);
            bool explained = std::any_of(tails.begin(), tails.end(),
                                         [&](const Diamond& tail) { return converges(edge.target, tail, true); });
            if (!explained) {
                result = false;
                break;
            }
        }
    }
    memo_.emplace(std::move(key), result);
    return result;
}

bool check_convergence(const Lts& lts, StateId source, const Diamond& d, StateId target, bool strict,
                       const StateEquivalence* equivalence) {
    ConvergenceChecker checker(lts, target, equivalence);
    return checker.converges(source, d, strict);
}

DiamondSet shuffle_decompositions(std::span<const ActionId> word) {
    DiamondSet result;
    if (word.empty()) {
        result.emplace_back();
        return result;
    }
    // Restricted growth strings enumerate each set partition once.
    std::vector<std::size_t> block(word.size(), 0);
    std::vector<std::size_t> max_before(word.size(), 0);
    while (true) {
        std::size_t blocks = *std::max_element(block.begin(), block.end()) + 1;
        std::vector<Sequence> atoms(blocks);
        for (std::size_t i = 0; i < word.size(); ++i) {
            atoms[block[i]].push_back(word[i]);
        }
        Diamond d;
        for (const auto& atom : atoms) {
            d.add(atom);
        }
        result.push_back(std::move(d));

        // Next restricted growth string.
        std::size_t i = word.size() - 1;
        while (i > 0 && block[i] == max_before[i] + 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++block[i];
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            max_before[j] = std::max(max_before[j - 1], block[j - 1]);
            block[j] = 0;
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

namespace {

struct SequenceHash {
    std::size_t operator()(const Sequence& s) const noexcept {
        std::size_t seed = s.size();
        for (auto a : s) {
            seed = seed * 1000003u + a + 1;
        }
        return seed;
    }
};

class CandidateSource {
public:
    CandidateSource(const Lts& lts, const OracleOptions& options) : lts_(lts), options_(options) {}

    /// Candidate diamonds from `source`, grouped by the target the word ends in.
    std::map<StateId, DiamondSet> candidates_from(StateId source) {
        std::map<StateId, DiamondSet> by_target;
        std::map<Sequence, std::vector<StateId>> level{{Sequence{}, {source}}};
        for (std::size_t length = 1; length <= options_.max_size && !level.empty(); ++length) {
            std::map<Sequence, std::vector<StateId>> next_level;
            for (const auto& [word, states] : level) {
                for (auto state : states) {
                    for (const auto& edge : lts_.outgoing(state)) {
                        Sequence next = word;
                        next.push_back(edge.action);
                        next_level[std::move(next)].push_back(edge.target);
                    }
                }
            }
            for (auto& [word, states] : next_level) {
                std::sort(states.begin(), states.end());
                states.erase(std::unique(states.begin(), states.end()), states.end());
                const auto& decompositions = decompose(word);
                for (auto target : states) {
                    auto& bucket = by_target[target];
                    bucket.insert(bucket.end(), decompositions.begin(), decompositions.end());
                }
            }
            level = std::move(next_level);
        }
        for (auto& [target, set] : by_target) {
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
            examined_ += set.size();
            if (examined_ > options_.candidate_budget) {
                throw OracleCapExceeded("oracle candidate budget exceeded");
            }
        }
        return by_target;
    }

private:
    const DiamondSet& decompose(const Sequence& word) {
        auto it = cache_.find(word);
        if (it == cache_.end()) {
            it = cache_.emplace(word, shuffle_decompositions(word)).first;
        }
        return it->second;
    }

    const Lts& lts_;
    const OracleOptions& options_;
    std::unordered_map<Sequence, DiamondSet, SequenceHash> cache_;
    std::size_t examined_ = 0;
};

void decide(ConvergenceChecker& checker, StateId source, const DiamondSet& candidates,
            std::vector<Convergence>& out) {
    for (const auto& d : candidates) {
        if (checker.converges(source, d, false)) {
            out.push_back({source, d, checker.target(), checker.converges(source, d, true)});
        }
    }
}

}  // namespace

std::vector<Convergence> enumerate_convergences_oracle(const Lts& lts, StateId target,
                                                       const OracleOptions& options) {
    CandidateSource candidates(lts, options);
    ConvergenceChecker checker(lts, target);
    std::vector<Convergence> result;
    for (StateId source = 0; source < lts.state_count(); ++source) {
        auto by_target = candidates.candidates_from(source);
        if (auto it = by_target.find(target); it != by_target.end()) {
            decide(checker, source, it->second, result);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Convergence> enumerate_all_convergences_oracle(const Lts& lts, const OracleOptions& options) {
    CandidateSource candidates(lts, options);
    std::vector<ConvergenceChecker> checkers;
    checkers.reserve(lts.state_count());
    for (StateId target = 0; target < lts.state_count(); ++target) {
        checkers.emplace_back(lts, target);
    }
    std::vector<Convergence> result;
    for (StateId source = 0; source < lts.state_count(); ++source) {
        for (const auto& [target, set] : candidates.candidates_from(source)) {
            decide(checkers[target], source, set, result);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace ltsdiamond
