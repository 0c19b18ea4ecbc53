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

#include "support.hpp"

#include <map>

#include "tpcalc/axioms.hpp"

namespace tpcalc::testing {

namespace {

BasisName concat(const BasisName& a, const BasisName& b) {
  BasisName out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool selected(std::int32_t v) { return v != kUnselected; }

// Output name of a one-output generator for a given input, or nullopt when
// the input is killed.
std::optional<BasisName> image(const Diagram& g, const BasisName& in) {
  switch (g.kind()) {
    case DiagramKind::Id:
    case DiagramKind::Adapt:
    case DiagramKind::Scal: return in;
    case DiagramKind::Swap: return BasisName{in[1], in[0]};
    case DiagramKind::Ten: {
      if (selected(in[0]) && selected(in[1])) {
        return BasisName{in[0] * static_cast<std::int32_t>(g.b().dim()) + in[1]};
      }
      if (!selected(in[0]) && !selected(in[1])) return BasisName{kUnselected};
      return std::nullopt;
    }
    case DiagramKind::Plus: {
      if (selected(in[0]) && selected(in[1])) return std::nullopt;
      if (selected(in[0])) return BasisName{in[0]};
      if (selected(in[1])) return BasisName{static_cast<std::int32_t>(g.a().dim()) + in[1]};
      return BasisName{kUnselected};
    }
    case DiagramKind::Contr: {
      if (selected(in[0]) && selected(in[1])) return std::nullopt;
      return BasisName{selected(in[0]) ? in[0] : in[1]};
    }
    case DiagramKind::Null: return BasisName{kUnselected};
    default: return std::nullopt;
  }
}

std::map<BasisName, std::size_t> index_map(const Obj& x) {
  std::map<BasisName, std::size_t> m;
  const auto names = enumerate_full(x);
  for (std::size_t i = 0; i < names.size(); ++i) m.emplace(names[i], i);
  return m;
}

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Diagram rebracket(const std::vector<Diagram>& parts, std::size_t lo, std::size_t hi, bool sequential,
                  std::mt19937_64& rng) {
  if (hi - lo == 1) return parts[lo];
  const auto mid = static_cast<std::size_t>(pick(rng, static_cast<std::int64_t>(lo) + 1,
                                                 static_cast<std::int64_t>(hi) - 1));
  Diagram l = rebracket(parts, lo, mid, sequential, rng);
  Diagram r = rebracket(parts, mid, hi, sequential, rng);
  return sequential ? seq(l, r) : par(l, r);
}

void flatten(const Diagram& d, DiagramKind kind, std::vector<Diagram>& out) {
  if (d.kind() == kind) {
    flatten(d.first(), kind, out);
    flatten(d.second(), kind, out);
  } else {
    out.push_back(d);
  }
}

}  // namespace

SemMatrix oracle_generator(const Diagram& g, SemiringTag tag) {
  if (g.kind() == DiagramKind::Mirror) return transpose(oracle_generator(g.inner(), tag));
  const auto cols = enumerate_full(g.dom());
  const auto rows = index_map(g.cod());
  SemMatrix m(tag, rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (g.kind() == DiagramKind::Unit) {
      for (std::size_t i = 0; i < rows.size(); ++i) m.at(i, j) = one(tag);
      continue;
    }
    auto out = image(g, cols[j]);
    if (!out) continue;
    Scalar w = one(tag);
    if (g.kind() == DiagramKind::Scal && selected(cols[j][0])) w = g.scalar();
    m.at(rows.at(*out), j) = w;
  }
  return m;
}

SemMatrix oracle_eval_full(const Diagram& d, SemiringTag tag) {
  switch (d.kind()) {
    case DiagramKind::Seq:
      return product(oracle_eval_full(d.second(), tag), oracle_eval_full(d.first(), tag));
    case DiagramKind::Par: {
      const SemMatrix l = oracle_eval_full(d.first(), tag);
      const SemMatrix r = oracle_eval_full(d.second(), tag);
      const SemMatrix k = kron(l, r);
      const auto lr = enumerate_full(d.first().cod());
      const auto rr = enumerate_full(d.second().cod());
      const auto lc = enumerate_full(d.first().dom());
      const auto rc = enumerate_full(d.second().dom());
      const auto rows = index_map(d.cod());
      const auto cols = index_map(d.dom());
      SemMatrix out(tag, rows.size(), cols.size());
      for (std::size_t i1 = 0; i1 < lr.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < rr.size(); ++i2) {
          const std::size_t row = rows.at(concat(lr[i1], rr[i2]));
          for (std::size_t j1 = 0; j1 < lc.size(); ++j1) {
            for (std::size_t j2 = 0; j2 < rc.size(); ++j2) {
              out.at(row, cols.at(concat(lc[j1], rc[j2]))) =
                  k.at(i1 * rr.size() + i2, j1 * rc.size() + j2);
            }
          }
        }
      }
      return out;
    }
    default: return oracle_generator(d, tag);
  }
}

Obj random_obj(std::mt19937_64& rng, std::size_t max_wires, int max_depth, std::uint64_t max_dim) {
  while (true) {
    Obj x;
    const auto n = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(max_wires)));
    for (std::size_t i = 0; i < n; ++i) x.push_back(random_color(rng, max_depth));
    if (dim(x) <= max_dim) return x;
  }
}

Diagram random_diagram(std::mt19937_64& rng, const Obj& dom, SemiringTag tag,
                       const DiagramShape& shape) {
  Diagram d = identity(dom);
  for (int layer = 0; layer < shape.layers; ++layer) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      const Obj x = d.cod();
      const std::size_t n = x.size();
      const bool room = n < shape.max_wires;
      std::optional<Diagram> g;
      std::size_t at = n == 0 ? 0 : static_cast<std::size_t>(pick(rng, 0, static_cast<std::int64_t>(n) - 1));
      std::size_t width = 1;
      switch (pick(rng, 0, 12)) {
        case 0:
          if (at + 1 < n) g = Diagram::swap(x[at], x[at + 1]), width = 2;
          break;
        case 1:
          if (at + 1 < n) g = Diagram::ten(x[at], x[at + 1]), width = 2;
          break;
        case 2:
          if (at + 1 < n) g = Diagram::plus(x[at], x[at + 1]), width = 2;
          break;
        case 3:
          if (at + 1 < n && x[at] == x[at + 1]) g = Diagram::contr(x[at]), width = 2;
          break;
        case 4:
          if (n > 0 && x[at].kind() == ColorKind::Tensor) g = mirror(Diagram::ten(x[at].left(), x[at].right()));
          break;
        case 5:
          if (n > 0 && x[at].kind() == ColorKind::Plus) g = mirror(Diagram::plus(x[at].left(), x[at].right()));
          break;
        case 6:
          if (n > 0 && room) g = mirror(Diagram::contr(x[at]));
          break;
        case 7:
          if (room) {
            at = static_cast<std::size_t>(pick(rng, 0, static_cast<std::int64_t>(n)));
            g = Diagram::null(random_color(rng, 2)), width = 0;
          }
          break;
        case 8:
          if (n > 0) g = mirror(Diagram::null(x[at]));
          break;
        case 9:
          if (n > 0 && shape.allow_scalars) g = Diagram::scal(random_scalar(tag, rng), x[at]);
          break;
        case 10:
          if (n > 0) g = Diagram::adapt(x[at], random_equivalent(x[at], rng, 2));
          break;
        case 11:
          if (shape.allow_unit && room) {
            at = static_cast<std::size_t>(pick(rng, 0, static_cast<std::int64_t>(n)));
            g = Diagram::unit(), width = 0;
          }
          break;
        case 12:
          if (shape.allow_unit && n > 0 && x[at] == Color::one()) g = mirror(Diagram::unit());
          break;
      }
      if (!g) continue;
      std::vector<Diagram> parts;
      for (std::size_t i = 0; i < at; ++i) parts.push_back(Diagram::id(x[i]));
      parts.push_back(*g);
      for (std::size_t i = at + width; i < n; ++i) parts.push_back(Diagram::id(x[i]));
      Diagram step = par_all(parts);
      if (step.cod().size() > shape.max_wires || dim(step.cod()) > shape.max_dim) continue;
      d = seq(d, step);
      break;
    }
  }
  return d;
}

Diagram reassociate(const Diagram& d, std::mt19937_64& rng) {
  if (d.kind() != DiagramKind::Seq && d.kind() != DiagramKind::Par) return d;
  std::vector<Diagram> parts;
  flatten(d, d.kind(), parts);
  for (Diagram& p : parts) p = reassociate(p, rng);
  return rebracket(parts, 0, parts.size(), d.kind() == DiagramKind::Seq, rng);
}

SemMatrix random_matrix(std::mt19937_64& rng, SemiringTag tag, std::size_t rows, std::size_t cols,
                        int zero_percent) {
  SemMatrix m(tag, rows, cols);
  for (Scalar& s : m.entries) {
    if (pick(rng, 0, 99) >= zero_percent) s = random_scalar(tag, rng);
  }
  return m;
}

}  // namespace tpcalc::testing
