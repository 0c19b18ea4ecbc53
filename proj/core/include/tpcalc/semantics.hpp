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

#include <cstddef>
#include <utility>
#include <vector>

#include "tpcalc/color.hpp"
#include "tpcalc/diagram.hpp"
#include "tpcalc/matrix.hpp"
#include "tpcalc/semiring.hpp"

namespace tpcalc {

// Column of a semantics matrix: (output name, nonzero coefficient) pairs.
using SparseVec = std::vector<std::pair<BasisName, Scalar>>;

// Image of one basis name of dom(d) under the full semantics of d. The empty
// name is a valid input. Entries are sorted by output index.
SparseVec apply(const Diagram& d, const BasisName& input, SemiringTag tag);

// Full semantics: (dim(cod)+1) x (dim(dom)+1), the empty name last on both
// sides. Throws ShapeError beyond kMaxDenseEntries.
SemMatrix eval_full(const Diagram& d, SemiringTag tag);

// Functional semantics dim(cod) x dim(dom). Requires is_functional(d) and
// checks that the empty name is sent to itself with weight 1 and that no
// other name reaches it.
SemMatrix eval(const Diagram& d, SemiringTag tag);

// eval_full of a single (possibly mirrored) generator.
SemMatrix gen_matrix_full(const Diagram& g, SemiringTag tag);

inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 24;

// Column-wise comparison of full semantics without materializing either
// matrix. Returns the first differing (row name, column name) if any.
struct SemanticDiff {
  BasisName row;
  BasisName col;
  Scalar left;
  Scalar right;
};
std::optional<SemanticDiff> compare_full(const Diagram& d, const Diagram& e, SemiringTag tag);

}  // namespace tpcalc
