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

#include "ltsdiamond/diamond.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ltsdiamond {

namespace {

void hash_combine(std::size_t& seed, std::size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

bool sequence_less(const std::pair<Sequence, std::uint32_t>& entry, std::span<const ActionId> key) {
    return std::lexicographical_compare(entry.first.begin(), entry.first.end(), key.begin(), key.end());
}

void normalize(DiamondSet& set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

void merge_into(DiamondSet& into, const DiamondSet& from) {
    into.insert(into.end(), from.begin(), from.end());
}

}  // namespace

std::uint32_t Diamond::count(ActionId action) const {
    auto it = std::lower_bound(actions_.begin(), actions_.end(), action,
                               [](const auto& entry, ActionId a) { return entry.first < a; });
    return it != actions_.end() && it->first == action ? it->second : 0;
}

std::uint32_t Diamond::count(std::span<const ActionId> sequence) const {
    if (sequence.size() == 1) {
        return count(sequence.front());
    }
    auto it = std::lower_bound(sequences_.begin(), sequences_.end(), sequence, sequence_less);
    if (it != sequences_.end() && std::equal(it->first.begin(), it->first.end(), sequence.begin(), sequence.end())) {
        return it->second;
    }
    return 0;
}

void Diamond::add_action(ActionId action, std::uint32_t times) {
    if (times == 0) {
        return;
    }
    auto it = std::lower_bound(actions_.begin(), actions_.end(), action,
                               [](const auto& entry, ActionId a) { return entry.first < a; });
    if (it != actions_.end() && it->first == action) {
        it->second += times;
    } else {
        actions_.insert(it, {action, times});
    }
    size_ += times;
}

void Diamond::add(std::span<const ActionId> atom, std::uint32_t times) {
    if (times == 0 || atom.empty()) {
        return;
    }
    if (is_monotone(atom)) {
        add_action(atom.front(), times * static_cast<std::uint32_t>(atom.size()));
        return;
    }
    auto it = std::lower_bound(sequences_.begin(), sequences_.end(), atom, sequence_less);
    if (it != sequences_.end() && std::equal(it->first.begin(), it->first.end(), atom.begin(), atom.end())) {
        it->second += times;
    } else {
        sequences_.insert(it, {Sequence(atom.begin(), atom.end()), times});
    }
    size_ += atom.size() * times;
}

bool Diamond::remove_action(ActionId action, std::uint32_t times) {
    auto it = std::lower_bound(actions_.begin(), actions_.end(), action,
                               [](const auto& entry, ActionId a) { return entry.first < a; });
    if (it == actions_.end() || it->first != action || it->second < times) {
        return false;
    }
    it->second -= times;
    if (it->second == 0) {
        actions_.erase(it);
    }
    size_ -= times;
    return true;
}

bool Diamond::remove_sequence(std::span<const ActionId> sequence) {
    auto it = std::lower_bound(sequences_.begin(), sequences_.end(), sequence, sequence_less);
    if (it == sequences_.end() || !std::equal(it->first.begin(), it->first.end(), sequence.begin(), sequence.end())) {
        return false;
    }
    size_ -= it->first.size();
    if (--it->second == 0) {
        sequences_.erase(it);
    }
    return true;
}

std::size_t DiamondHash::operator()(const Diamond& d) const noexcept {
    std::size_t seed = d.size();
    for (const auto& [action, count] : d.actions()) {
        hash_combine(seed, action);
        hash_combine(seed, count);
    }
    for (const auto& [sequence, count] : d.sequences()) {
        hash_combine(seed, 0xabcdefULL);
        for (auto action : sequence) {
            hash_combine(seed, action);
        }
        hash_combine(seed, count);
    }
    return seed;
}

Diamond make_diamond(std::span<const DiamondEntry> entries) {
    Diamond d;
    for (const auto& entry : entries) {
        d.add(entry.atom, entry.count);
    }
    return d;
}

Diamond make_diamond(std::initializer_list<DiamondEntry> entries) {
    return make_diamond(std::span<const DiamondEntry>(entries.begin(), entries.size()));
}

std::vector<ActionId> head(const Diamond& d) {
    std::vector<ActionId> result;
    for (const auto& [action, count] : d.actions()) {
        result.push_back(action);
    }
    for (const auto& [sequence, count] : d.sequences()) {
        result.push_back(sequence.front());
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

DiamondSet tail_action(const Diamond& d, ActionId action) {
    DiamondSet result;
    if (d.count(action) > 0) {
        Diamond next = d;
        next.remove_action(action);
        result.push_back(std::move(next));
    }
    // Sequences starting with `action`. A remainder that is itself
    // non-monotone stays a sequence; a monotone remainder b^k becomes k
    // single actions. Diamond::add covers both cases.
    for (const auto& [sequence, count] : d.sequences()) {
        if (sequence.front() != action) {
            continue;
        }
        Diamond next = d;
        next.remove_sequence(sequence);
        next.add(std::span<const ActionId>(sequence).subspan(1));
        result.push_back(std::move(next));
    }
    normalize(result);
    return result;
}

DiamondSet tail_sequence(const Diamond& d, std::span<const ActionId> sequence) {
    DiamondSet current{d};
    for (auto action : sequence) {
        DiamondSet next;
        for (const auto& residue : current) {
            merge_into(next, tail_action(residue, action));
        }
        normalize(next);
        current = std::move(next);
        if (current.empty()) {
            break;
        }
    }
    return current;
}

std::size_t TailMemo::KeyHash::operator()(const std::pair<Diamond, Diamond>& key) const noexcept {
    std::size_t seed = DiamondHash{}(key.first);
    hash_combine(seed, DiamondHash{}(key.second));
    return seed;
}

const DiamondSet* TailMemo::find(const Diamond& d, const Diamond& prefix) const {
    auto it = table_.find({d, prefix});
    return it == table_.end() ? nullptr : &it->second;
}

const DiamondSet& TailMemo::store(const Diamond& d, const Diamond& prefix, DiamondSet result) {
    return table_.insert_or_assign({d, prefix}, std::move(result)).first->second;
}

namespace {

DiamondSet tail_diamond_memo(const Diamond& d, const Diamond& prefix, TailMemo& memo) {
    if (prefix.empty()) {
        return {d};
    }
    if (prefix.size() > d.size()) {
        return {};
    }
    if (const auto* cached = memo.find(d, prefix)) {
        return *cached;
    }
    DiamondSet result;
    for (auto action : head(prefix)) {
        auto d_tails = tail_action(d, action);
        if (d_tails.empty()) {
            continue;
        }
        for (const auto& prefix_tail : tail_action(prefix, action)) {
            for (const auto& d_tail : d_tails) {
                merge_into(result, tail_diamond_memo(d_tail, prefix_tail, memo));
            }
        }
    }
    normalize(result);
    return memo.store(d, prefix, std::move(result));
}

}  // namespace

DiamondSet tail_diamond(const Diamond& d, const Diamond& prefix, TailMemo* memo) {
    if (memo != nullptr) {
        return tail_diamond_memo(d, prefix, *memo);
    }
    TailMemo local;
    return tail_diamond_memo(d, prefix, local);
}

DiamondSet inverse_tail(const Diamond& d, ActionId action) {
    DiamondSet result;
    {
        Diamond h = d;
        h.add_action(action);
        result.push_back(std::move(h));
    }
    // A stored sequence s came from a.s.
    for (const auto& [sequence, count] : d.sequences()) {
        Diamond h = d;
        h.remove_sequence(sequence);
        Sequence extended;
        extended.reserve(sequence.size() + 1);
        extended.push_back(action);
        extended.insert(extended.end(), sequence.begin(), sequence.end());
        h.add(extended);
        result.push_back(std::move(h));
    }
    // k copies of b (b != a) came from the sequence a.b^k.
    for (const auto& [other, count] : d.actions()) {
        if (other == action) {
            continue;
        }
        for (std::uint32_t k = 1; k <= count; ++k) {
            Diamond h = d;
            h.remove_action(other, k);
            Sequence extended(k + 1, other);
            extended.front() = action;
            h.add(extended);
            result.push_back(std::move(h));
        }
    }
    normalize(result);
    return result;
}

bool is_prefix(const Diamond& prefix, const Diamond& d, TailMemo* memo) {
    return !tail_diamond(d, prefix, memo).empty();
}

bool is_prefix_literal(const Diamond& lhs, const Diamond& rhs, TailMemo* memo) {
    return !tail_diamond(lhs, rhs, memo).empty();
}

bool is_sequence_of(std::span<const ActionId> sequence, const Diamond& d) {
    if (sequence.empty()) {
        return true;
    }
    if (sequence.size() > d.size()) {
        return false;
    }
    for (const auto& next : tail_action(d, sequence.front())) {
        if (is_sequence_of(sequence.subspan(1), next)) {
            return true;
        }
    }
    return false;
}

InterleavingGraph interleaving_graph(const Diamond& d, std::size_t max_residues) {
    InterleavingGraph graph;
    std::unordered_map<Diamond, std::size_t, DiamondHash> index;
    graph.residues.push_back(d);
    index.emplace(d, 0);
    for (std::size_t i = 0; i < graph.residues.size(); ++i) {
        const Diamond current = graph.residues[i];
        for (auto action : head(current)) {
            for (auto& next : tail_action(current, action)) {
                auto [it, inserted] = index.emplace(next, graph.residues.size());
                if (inserted) {
                    if (graph.residues.size() >= max_residues) {
                        throw std::length_error("interleaving graph exceeds the residue budget");
                    }
                    graph.residues.push_back(std::move(next));
                }
                graph.steps.push_back({i, action, it->second});
            }
        }
    }
    graph.empty_index = index.at(Diamond{});
    return graph;
}

}  // namespace ltsdiamond
