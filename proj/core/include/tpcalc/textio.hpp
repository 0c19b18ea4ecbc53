// Copyright 2026 The tpcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "tpcalc/color.hpp"
#include "tpcalc/diagram.hpp"
#include "tpcalc/matrix.hpp"
#include "tpcalc/semiring.hpp"

namespace tpcalc {

// Surface syntax (whitespace-insensitive, '#' starts a line comment):
//
//   color   := "0" | "1" | "(" color "+" color ")" | "(" color "*" color ")"
//   obj     := "[" [ color { "," color } ] "]"
//   gen     := "id<" color ">" | "swap<" color "," color ">"
//            | "ten<" color "," color ">" | "plus<" color "," color ">"
//            | "cnt<" color ">" | "nil<" color ">" | "unit"
//            | "adp<" color "," color ">" | "scl<" scalar ";" color ">"
//   diagram := par { ";" par }        # d ; e runs d first, then e
//   par     := unary { "|" unary }
//   unary   := { "~" } ( gen | "(" diagram ")" )
//
// Both binary operators associate to the left. Errors carry byte spans.
Color parse_color(std::string_view text);
Obj parse_obj(std::string_view text);
Diagram parse_diagram(std::string_view text, SemiringTag tag);

std::string print_color(const Color& c);
std::string print_obj(const Obj& x);
// Parenthesizes exactly where needed for parse_diagram to rebuild the same
// term. With `multiline`, top-level sequential stages go on separate lines.
std::string print_diagram(const Diagram& d, bool multiline = false);

// Graphviz digraph, top to bottom: one node per non-identity generator,
// boundary nodes in<i>/out<i>, edges labeled with wire colors.
std::string export_dot(const Diagram& d);

// {"semiring": tag, "rows": n, "cols": m, "entries": [[literal, ...], ...]}
std::string matrix_to_json(const SemMatrix& m, int indent = -1);
SemMatrix matrix_from_json(std::string_view text);

}  // namespace tpcalc
