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

#include "ltsdiamond/dot.hpp"

#include <sstream>

namespace ltsdiamond {

namespace {

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

void write_nodes(std::ostringstream& out, std::size_t state_count, StateId initial) {
    out << "digraph lts {\n";
    out << "  node [shape=circle];\n";
    for (StateId s = 0; s < state_count; ++s) {
        out << "  " << s;
        if (s == initial) {
            out << " [shape=doublecircle]";
        }
        out << ";\n";
    }
}

}  // namespace

std::string write_dot(const Lts& lts) {
    std::ostringstream out;
    write_nodes(out, lts.state_count(), lts.initial());
    for (const auto& t : lts.transitions()) {
        out << "  " << t.source << " -> " << t.target << " [label=\"" << escape(lts.alphabet().text(t.action))
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string write_dot(const ReducedLts& reduced) {
    std::ostringstream out;
    write_nodes(out, reduced.state_count(), reduced.initial());
    for (const auto& edge : reduced.edges()) {
        out << "  " << edge.source << " -> " << edge.target << " [label=\"" << escape(reduced.label_text(edge))
            << "\"";
        if (edge.is_macro()) {
            out << ", arrowhead=normalnormal, style=bold";
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ltsdiamond
