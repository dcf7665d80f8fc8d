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

// Graphviz output. The initial state is drawn as a double circle and macro
// edges get a doubled arrowhead.

#ifndef LTSDIAMOND_DOT_HPP
#define LTSDIAMOND_DOT_HPP

#include <string>

#include "ltsdiamond/lts.hpp"
#include "ltsdiamond/reducer.hpp"

namespace ltsdiamond {

std::string write_dot(const Lts& lts);
std::string write_dot(const ReducedLts& reduced);

}  // namespace ltsdiamond

#endif  // LTSDIAMOND_DOT_HPP
