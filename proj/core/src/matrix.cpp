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

#include "tpcalc/matrix.hpp"

#include <sstream>

#include "tpcalc/error.hpp"

namespace tpcalc {

namespace {

void require_same_tag(const SemMatrix& a, const SemMatrix& b) {
  if (a.tag != b.tag) {
    throw TagMismatchError("matrices over different semirings: " + std::string(tag_name(a.tag)) +
                           " and " + std::string(tag_name(b.tag)));
  }
}

}  // namespace

SemMatrix::SemMatrix(SemiringTag t, std::size_t r, std::size_t c)
    : tag(t), rows(r), cols(c), entries(r * c, zero(t)) {}

SemMatrix SemMatrix::identity(SemiringTag tag, std::size_t n) {
  SemMatrix m(tag, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one(tag);
  return m;
}

SemMatrix SemMatrix::from_rows(SemiringTag tag, const std::vector<std::vector<Scalar>>& rows,
                               std::size_t cols_if_empty) {
  const std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
  SemMatrix m(tag, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      require_tag(rows[i][j], tag);
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

SemMatrix product(const SemMatrix& a, const SemMatrix& b) {
  require_same_tag(a, b);
  if (a.cols != b.rows) {
    throw ShapeError("product of " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                     " and " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
  }
  SemMatrix m(a.tag, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const Scalar& y = b.at(k, j);
        if (!y.is_zero()) m.at(i, j) = add(m.at(i, j), mul(x, y));
      }
    }
  }
  return m;
}

SemMatrix kron(const SemMatrix& a, const SemMatrix& b) {
  require_same_tag(a, b);
  SemMatrix m(a.tag, a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      for (std::size_t k = 0; k < b.rows; ++k) {
        for (std::size_t l = 0; l < b.cols; ++l) {
          m.at(i * b.rows + k, j * b.cols + l) = mul(a.at(i, j), b.at(k, l));
        }
      }
    }
  }
  return m;
}

SemMatrix direct_sum(const SemMatrix& a, const SemMatrix& b) {
  require_same_tag(a, b);
  SemMatrix m(a.tag, a.rows + b.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
  }
  for (std::size_t i = 0; i < b.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) m.at(a.rows + i, a.cols + j) = b.at(i, j);
  }
  return m;
}

SemMatrix transpose(const SemMatrix& m) {
  SemMatrix t(m.tag, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  }
  t.dom = m.cod;
  t.cod = m.dom;
  t.full = m.full;
  return t;
}

bool equals(const SemMatrix& a, const SemMatrix& b) { return !first_difference(a, b); }

std::optional<MatrixDiff> first_difference(const SemMatrix& a, const SemMatrix& b) {
  require_same_tag(a, b);
  if (a.rows != b.rows || a.cols != b.cols) {
    throw ShapeError("comparing matrices of different shapes");
  }
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (!(a.at(i, j) == b.at(i, j))) return MatrixDiff{i, j, a.at(i, j), b.at(i, j)};
    }
  }
  return std::nullopt;
}

SemMatrix permute(const SemMatrix& m, const std::vector<std::uint64_t>& row_perm,
                  const std::vector<std::uint64_t>& col_perm) {
  if (row_perm.size() != m.rows || col_perm.size() != m.cols) {
    throw ShapeError("permutation size does not match matrix shape");
  }
  SemMatrix p(m.tag, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) p.at(i, j) = m.at(row_perm[i], col_perm[j]);
  }
  return p;
}

std::string to_string(const SemMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols; ++j) os << (j ? " " : "") << to_string(m.at(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace tpcalc
