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
#include <optional>
#include <string>
#include <vector>

#include "tpcalc/color.hpp"
#include "tpcalc/semiring.hpp"

namespace tpcalc {

// Dense row-major matrix over one semiring. When produced by the evaluator,
// rows follow the enumeration of `cod` and columns that of `dom` (with the
// empty name last when `full`).
struct SemMatrix {
  SemiringTag tag = SemiringTag::Rational;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> entries;

  std::optional<Obj> dom;
  std::optional<Obj> cod;
  bool full = false;

  SemMatrix() = default;
  SemMatrix(SemiringTag tag, std::size_t rows, std::size_t cols);

  const Scalar& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }

  static SemMatrix identity(SemiringTag tag, std::size_t n);
  static SemMatrix from_rows(SemiringTag tag, const std::vector<std::vector<Scalar>>& rows,
                             std::size_t cols_if_empty = 0);
};

SemMatrix product(const SemMatrix& a, const SemMatrix& b);  // a * b
SemMatrix kron(const SemMatrix& a, const SemMatrix& b);     // left factor outer
SemMatrix direct_sum(const SemMatrix& a, const SemMatrix& b);
SemMatrix transpose(const SemMatrix& m);
// Shape and entry-wise equality; annotations are ignored.
bool equals(const SemMatrix& a, const SemMatrix& b);
// Rows/cols permuted: result(i, j) = m(row_perm[i], col_perm[j]).
SemMatrix permute(const SemMatrix& m, const std::vector<std::uint64_t>& row_perm,
                  const std::vector<std::uint64_t>& col_perm);

struct MatrixDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar left;
  Scalar right;
};
std::optional<MatrixDiff> first_difference(const SemMatrix& a, const SemMatrix& b);

std::string to_string(const SemMatrix& m);

}  // namespace tpcalc
