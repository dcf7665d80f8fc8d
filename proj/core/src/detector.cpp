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

#include "ltsdiamond/detector.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>

#include "ltsdiamond/diamond_label.hpp"

namespace ltsdiamond {

std::size_t ConvergenceTable::KeyHash::operator()(const Key& key) const noexcept {
    return DiamondHash{}(key.diamond) * 0x100000001b3ULL ^ key.state;
}

ConvergenceTable::ConvergenceTable(const Lts& lts, StateId target, const StateEquivalence* equivalence)
    : lts_(&lts), target_(target), equivalence_(equivalence) {
    if (target >= lts.state_count()) {
        throw std::out_of_range("target state out of range");
    }
}

bool ConvergenceTable::contains(StateId state, const Diamond& d) const {
    if (d.empty()) {
        return equivalence_ != nullptr ? equivalence_->equivalent(state, target_) : state == target_;
    }
    return known_.contains(Key{state, d});
}

bool ConvergenceTable::is_strict(StateId state, const Diamond& d) const {
    if (d.empty()) {
        return contains(state, d);
    }
    auto it = known_.find(Key{state, d});
    return it != known_.end() && it->second;
}

bool ConvergenceTable::strict_flag(StateId state) const {
    if (state >= lts_->state_count()) {
        throw std::out_of_range("state out of range");
    }
    return strict_states_.contains(state);
}

std::vector<Convergence> ConvergenceTable::sorted_entries() const {
    auto sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

bool ConvergenceTable::record(StateId state, const Diamond& d, bool strict) {
    if (d.empty()) {
        return false;
    }
    auto [it, inserted] = known_.emplace(Key{state, d}, strict);
    if (!inserted) {
        return false;
    }
    entries_.push_back({state, d, target_, strict});
    if (strict) {
        strict_states_.insert(state);
    }
    return true;
}

namespace {

enum class Verdict { None, NonStrict, Strict };

/// Checks that every head is realised by a successor in the table. With
/// `strict_too`, also that every outgoing edge is explained.
Verdict evaluate(const Lts& lts, const ConvergenceTable& table, StateId src, const Diamond& h,
                 bool strict_too) {
    auto heads = head(h);
    std::vector<DiamondSet> tails(heads.size());
    for (std::size_t i = 0; i < heads.size(); ++i) {
        auto next = lts.outgoing(src, heads[i]);
        tails[i] = tail_action(h, heads[i]);
        for (const auto& tail : tails[i]) {
            bool realised = std::any_of(next.begin(), next.end(),
                                        [&](const OutEdge& e) { return table.is_strict(e.target, tail); });
            if (!realised) {
                return Verdict::None;
            }
        }
    }
    if (!strict_too) {
        return Verdict::NonStrict;
    }
    for (const auto& edge : lts.outgoing(src)) {
        auto it = std::lower_bound(heads.begin(), heads.end(), edge.action);
        if (it == heads.end() || *it != edge.action) {
            return Verdict::NonStrict;
        }
        const auto& options = tails[static_cast<std::size_t>(it - heads.begin())];
        bool explained = std::any_of(options.begin(), options.end(),
                                     [&](const Diamond& tail) { return table.is_strict(edge.target, tail); });
        if (!explained) {
            return Verdict::NonStrict;
        }
    }
    return Verdict::Strict;
}

std::string describe(const Lts& lts, StateId src, const Diamond& h, StateId target) {
    return "state " + std::to_string(src) + " with " + format_label(h, lts.alphabet()) + " into " +
           std::to_string(target);
}

}  // namespace

/// Runs the layered search and owns the optional reference checker used to
/// assert the table invariant after every evaluation.
class DiamondSearch {
public:
    DiamondSearch(const Lts& lts, ConvergenceTable& table, bool verify)
        : lts_(lts), table_(table) {
        if (verify) {
            checker_.emplace(lts, table.target(), table.equivalence());
        }
    }

    /// Evaluates and records one hypothesis; returns the verdict.
    Verdict consider(StateId src, const Diamond& h) {
        if (auto it = table_.known_.find(ConvergenceTable::Key{src, h}); it != table_.known_.end()) {
            return it->second ? Verdict::Strict : Verdict::NonStrict;
        }
        auto verdict = evaluate(lts_, table_, src, h, true);
        if (checker_) {
            bool converges = checker_->converges(src, h, false);
            bool strict = checker_->converges(src, h, true);
            if (converges != (verdict != Verdict::None) || strict != (verdict == Verdict::Strict)) {
                throw InvariantViolated("table disagrees with the reference semantics at " +
                                        describe(lts_, src, h, table_.target()));
            }
        }
        if (verdict != Verdict::None) {
            table_.record(src, h, verdict == Verdict::Strict);
        }
        return verdict;
    }

    void run(std::size_t max_size) {
        using Key = ConvergenceTable::Key;
        std::vector<Key> layer;
        if (table_.equivalence() != nullptr) {
            for (auto member : table_.equivalence()->members_of_class_of(table_.target())) {
                layer.push_back({member, Diamond{}});
            }
        } else {
            layer.push_back({table_.target(), Diamond{}});
        }

        for (std::size_t s = 0; !layer.empty(); ++s) {
            bool probe = s == max_size;
            std::unordered_set<Key, ConvergenceTable::KeyHash> seen;
            std::vector<Key> next;
            for (const auto& [q, d] : layer) {
                for (const auto& in : lts_.incoming(q)) {
                    for (auto& h : inverse_tail(d, in.action)) {
                        if (!seen.insert(Key{in.source, h}).second) {
                            continue;
                        }
                        if (probe) {
                            if (evaluate(lts_, table_, in.source, h, false) != Verdict::None) {
                                table_.truncated_ = true;
                                table_.complete_size_ = max_size;
                                return;
                            }
                            continue;
                        }
                        if (consider(in.source, h) == Verdict::Strict) {
                            next.push_back({in.source, std::move(h)});
                        }
                    }
                }
            }
            if (!probe) {
                table_.complete_size_ = s + 1;
            }
            std::sort(next.begin(), next.end(), [](const Key& x, const Key& y) {
                return std::tie(x.state, x.diamond) < std::tie(y.state, y.diamond);
            });
            layer = std::move(next);
        }
        // No strict entry is left to extend, so nothing larger exists.
        table_.complete_size_ = std::numeric_limits<std::size_t>::max();
    }

private:
    const Lts& lts_;
    ConvergenceTable& table_;
    std::optional<ConvergenceChecker> checker_;
};

StepOutcome step(const Lts& lts, StateId src, ActionId a, StateId mid, const Diamond& d,
                 ConvergenceTable& table, bool verify_invariants) {
    if (!lts.has_transition(src, a, mid)) {
        throw PreconditionViolated("step requires an existing transition");
    }
    if (d.size() > table.complete_size()) {
        throw PreconditionViolated("step requires the table to be complete up to the diamond size");
    }
    StepOutcome outcome;
    if (!table.is_strict(mid, d)) {
        return outcome;
    }
    DiamondSearch search(lts, table, verify_invariants);
    for (const auto& h : inverse_tail(d, a)) {
        switch (search.consider(src, h)) {
            case Verdict::Strict:
                outcome.strict.push_back(h);
                break;
            case Verdict::NonStrict:
                outcome.non_strict.push_back(h);
                break;
            case Verdict::None:
                break;
        }
    }
    if (!outcome.strict.empty()) {
        outcome.kind = StepOutcome::Kind::Strict;
    } else if (!outcome.non_strict.empty()) {
        outcome.kind = StepOutcome::Kind::NonStrict;
    }
    return outcome;
}

namespace {

ConvergenceTable search_into(const Lts& lts, StateId target, const StateEquivalence* equivalence,
                             const DetectorOptions& options) {
    if (options.max_size == 0) {
        throw std::invalid_argument("max_size must be at least 1");
    }
    ConvergenceTable table(lts, target, equivalence);
    DiamondSearch(lts, table, options.verify_invariants).run(options.max_size);
    return table;
}

}  // namespace

ConvergenceTable find_diamonds_to(const Lts& lts, StateId target, const DetectorOptions& options) {
    return search_into(lts, target, nullptr, options);
}

ConvergenceTable find_diamonds_to_class(const Lts& lts, StateId target, const StateEquivalence& equivalence,
                                        const DetectorOptions& options) {
    return search_into(lts, target, &equivalence, options);
}

FindResult find_all_diamonds(const Lts& lts, const DetectorOptions& options) {
    const std::size_t n = lts.state_count();
    std::vector<std::vector<Convergence>> per_target(n);
    std::vector<char> truncated(n, 0);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < n; t = next++) {
            // Only states with incoming transitions can be targets.
            if (lts.incoming(static_cast<StateId>(t)).empty()) {
                continue;
            }
            auto table = find_diamonds_to(lts, static_cast<StateId>(t), options);
            per_target[t] = table.entries();
            truncated[t] = table.truncated() ? 1 : 0;
        }
    };
    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& thread : pool) {
            thread.join();
        }
    }

    struct Keyed {
        StateId source;
        StateId target;
        std::string label;
        Convergence convergence;
    };
    std::vector<Keyed> keyed;
    FindResult result;
    for (StateId t = 0; t < n; ++t) {
        for (auto& c : per_target[t]) {
            auto label = format_label(c.diamond, lts.alphabet());
            keyed.push_back({c.source, c.target, std::move(label), std::move(c)});
        }
        if (truncated[t] != 0) {
            result.truncated_targets.push_back(t);
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
        return std::tie(x.source, x.target, x.label) < std::tie(y.source, y.target, y.label);
    });
    result.convergences.reserve(keyed.size());
    for (auto& k : keyed) {
        result.convergences.push_back(std::move(k.convergence));
    }
    return result;
}

std::vector<Convergence> maximal_strict(const std::vector<Convergence>& convergences) {
    std::map<StateId, std::vector<std::size_t>> by_source;
    for (std::size_t i = 0; i < convergences.size(); ++i) {
        if (convergences[i].strict) {
            by_source[convergences[i].source].push_back(i);
        }
    }
    std::vector<char> keep(convergences.size(), 0);
    TailMemo memo;
    for (const auto& [source, indices] : by_source) {
        memo.clear();
        for (auto i : indices) {
            const auto& di = convergences[i].diamond;
            bool dominated = false;
            for (auto j : indices) {
                const auto& dj = convergences[j].diamond;
                if (i == j || di == dj) {
                    continue;
                }
                bool forward = is_prefix(di, dj, &memo);
                bool backward = is_prefix(dj, di, &memo);
                if (!forward && !backward) {
                    throw OverlapViolation("prefix-incomparable strict convergences from state " +
                                           std::to_string(source));
                }
                if (forward && di.size() < dj.size()) {
                    dominated = true;
                }
            }
            keep[i] = dominated ? 0 : 1;
        }
    }
    std::vector<Convergence> result;
    for (std::size_t i = 0; i < convergences.size(); ++i) {
        if (keep[i] != 0) {
            result.push_back(convergences[i]);
        }
    }
    return result;
}

}  // namespace ltsdiamond
