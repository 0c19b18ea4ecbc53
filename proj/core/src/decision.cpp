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

#include "tpcalc/decision.hpp"

#include "tpcalc/builders.hpp"
#include "tpcalc/circuit.hpp"
#include "tpcalc/error.hpp"

namespace tpcalc {

namespace {

using Wire = Circuit::Wire;

const Color& unit_color() {
  static const Color one = Color::one();
  return one;
}

std::vector<Wire> fan_out(Circuit& c, Wire w, std::size_t n) {
  if (n == 1) return {w};
  return c.apply(mirror(n_contraction(unit_color(), n)), {w});
}

Wire pair_up(Circuit& c, Wire x, Wire y) {
  const Color& u = unit_color();
  Wire t = c.apply1(Diagram::ten(u, u), {x, y});
  return c.apply1(Diagram::adapt(Color::tensor(u, u), u), {t});
}

Diagram with_disjunction(const Diagram& d) {
  if (d.cod().size() < 2) return d;
  return seq(d, disjunction(d.cod()));
}

// Wires carrying x_p and b_q are fanned out so that every pair (p, q) gets a
// product wire; `singles` adds one extra copy on each side that passes alone.
std::vector<Wire> product_wires(Circuit& c, const std::vector<Wire>& xs,
                                const std::vector<Wire>& bs, bool singles) {
  const std::size_t extra = singles ? 1 : 0;
  std::vector<std::vector<Wire>> xc;
  std::vector<std::vector<Wire>> bc;
  for (Wire w : xs) xc.push_back(fan_out(c, w, bs.size() + extra));
  for (Wire w : bs) bc.push_back(fan_out(c, w, xs.size() + extra));
  std::vector<Wire> outs;
  for (std::size_t p = 0; p < xs.size(); ++p) {
    for (std::size_t q = 0; q < bs.size(); ++q) outs.push_back(pair_up(c, xc[p][q], bc[q][p]));
  }
  if (singles) {
    for (std::size_t p = 0; p < xs.size(); ++p) outs.push_back(xc[p][bs.size()]);
    for (std::size_t q = 0; q < bs.size(); ++q) outs.push_back(bc[q][xs.size()]);
  }
  return outs;
}

void discard_all(Circuit& c, const std::vector<Wire>& ws) {
  for (Wire w : ws) c.apply(mirror(Diagram::null(c.color(w))), {w});
}

}  // namespace

Diagram iso_color(const Color& a) {
  switch (a.kind()) {
    case ColorKind::Zero: return mirror(Diagram::null(a));
    case ColorKind::One: return Diagram::id(a);
    case ColorKind::Plus: {
      Diagram parts = par(iso_color(a.left()), iso_color(a.right()));
      return with_disjunction(seq(mirror(Diagram::plus(a.left(), a.right())), parts));
    }
    case ColorKind::Tensor: {
      Circuit c({a});
      auto xy = c.apply(mirror(Diagram::ten(a.left(), a.right())), {c.inputs()[0]});
      auto xs = c.apply(iso_color(a.left()), {xy[0]});
      auto ys = c.apply(iso_color(a.right()), {xy[1]});
      if (xs.empty() || ys.empty()) {
        discard_all(c, xs);
        discard_all(c, ys);
        return c.finish({});
      }
      return with_disjunction(c.finish(product_wires(c, xs, ys, false)));
    }
  }
  throw InvariantError("unknown color kind");
}

Diagram iso_obj(const Obj& x) {
  if (x.empty()) return empty_diagram();
  if (x.size() == 1) return iso_color(x.front());
  Obj prefix(x.begin(), x.end() - 1);
  Circuit c(x);
  std::vector<Wire> prefix_in(c.inputs().begin(), c.inputs().end() - 1);
  auto xs = c.apply(iso_obj(prefix), prefix_in);
  auto bs = c.apply(iso_color(x.back()), {c.inputs().back()});
  return with_disjunction(c.finish(product_wires(c, xs, bs, true)));
}

Color packed_color(const Obj& x) {
  const std::uint64_t d = dim(x);
  return plus_fold(std::vector<Color>(d, unit_color()));
}

Diagram iso_then_plus(const Obj& x) {
  const std::uint64_t d = dim(x);
  if (d == 0) return seq(iso_obj(x), Diagram::null(Color::zero()));
  return seq(iso_obj(x), n_plus(std::vector<Color>(d, unit_color())));
}

Diagram matrix_diagram(const SemMatrix& m) {
  Circuit c(Obj(m.cols, unit_color()));
  std::vector<std::vector<Wire>> into(m.rows);
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (!m.at(i, j).is_zero()) rows.push_back(i);
    }
    const Wire in = c.inputs()[j];
    if (rows.empty()) {
      c.apply(mirror(Diagram::null(unit_color())), {in});
      continue;
    }
    auto outs = fan_out(c, in, rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Wire w = outs[k];
      const Scalar& s = m.at(rows[k], j);
      if (!s.is_one()) w = c.apply1(Diagram::scal(s, unit_color()), {w});
      into[rows[k]].push_back(w);
    }
  }
  std::vector<Wire> outputs;
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (into[i].empty()) {
      outputs.push_back(c.apply1(Diagram::null(unit_color()), {}));
    } else {
      outputs.push_back(c.apply1(n_contraction(unit_color(), into[i].size()), into[i]));
    }
  }
  return c.finish(outputs);
}

NormalForm synthesize(const SemMatrix& m, const Obj& dom, const Obj& cod) {
  if (m.rows != dim(cod) || m.cols != dim(dom)) {
    throw ShapeError("matrix is " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                     " but " + to_string(dom) + " -> " + to_string(cod) + " needs " +
                     std::to_string(dim(cod)) + "x" + std::to_string(dim(dom)));
  }
  Diagram d = seq_all({iso_obj(dom), matrix_diagram(m), mirror(iso_obj(cod))});
  SemMatrix mm = m;
  mm.dom = dom;
  mm.cod = cod;
  mm.full = false;
  return NormalForm{d, mm, dom, cod, false};
}

NormalForm synthesize_full(const SemMatrix& v, const Obj& dom, const Obj& cod) {
  const std::uint64_t dx = dim(dom);
  const std::uint64_t dy = dim(cod);
  if (v.rows != dy + 1 || v.cols != dx + 1) {
    throw ShapeError("full matrix is " + std::to_string(v.rows) + "x" + std::to_string(v.cols) +
                     " but " + to_string(dom) + " -> " + to_string(cod) + " needs " +
                     std::to_string(dy + 1) + "x" + std::to_string(dx + 1));
  }
  SemMatrix n = v;
  n.at(dy, dx) = canon_plus_one(sub_one(v.at(dy, dx)));
  n.dom.reset();
  n.cod.reset();
  n.full = false;

  const Color& u = unit_color();
  const Color px = packed_color(dom);
  const Color py = packed_color(cod);
  Diagram prepare = seq(par(iso_then_plus(dom), Diagram::unit()), Diagram::plus(px, u));
  Diagram middle = synthesize(n, {Color::plus(px, u)}, {Color::plus(py, u)}).diagram;
  Diagram finish = seq(mirror(Diagram::plus(py, u)),
                       par(mirror(iso_then_plus(cod)), mirror(Diagram::unit())));
  SemMatrix canon = v;
  canon.at(dy, dx) = add(n.at(dy, dx), one(v.tag));
  canon.dom = dom;
  canon.cod = cod;
  canon.full = true;
  return NormalForm{seq_all({prepare, middle, finish}), canon, dom, cod, true};
}

NormalForm normalize(const Diagram& d, SemiringTag tag) {
  if (d.is_functional()) return synthesize(eval(d, tag), d.dom(), d.cod());
  return synthesize_full(eval_full(d, tag), d.dom(), d.cod());
}

Verdict equiv(const Diagram& d, const Diagram& e, SemiringTag tag) {
  if (!semiring(tag).is_exact) {
    throw UserError("equivalence needs decidable equality; " + std::string(tag_name(tag)) +
                    " is approximate");
  }
  auto diff = compare_full(d, e, tag);
  if (!diff) return Verdict{true, std::nullopt};
  return Verdict{false, Witness{diff->row, diff->col, diff->left, diff->right}};
}

Color single_color(const Obj& x) {
  if (x.empty()) return Color::zero();
  Color acc = x.front();
  for (std::size_t i = 1; i < x.size(); ++i) {
    acc = Color::plus(Color::tensor(acc, x[i]), Color::plus(acc, x[i]));
  }
  return acc;
}

namespace {

// [(A*B)+(A+B)] -> [A, B].
Diagram split_pair(const Color& a, const Color& b) {
  return seq_all({mirror(Diagram::plus(Color::tensor(a, b), Color::plus(a, b))),
                  par(mirror(Diagram::ten(a, b)), mirror(Diagram::plus(a, b))),
                  par_all({Diagram::id(a), Diagram::swap(b, a), Diagram::id(b)}),
                  par(Diagram::contr(a), Diagram::contr(b))});
}

}  // namespace

Diagram single_to_parallel(const Obj& x) {
  if (x.empty()) return mirror(Diagram::null(Color::zero()));
  if (x.size() == 1) return Diagram::id(x.front());
  Obj prefix(x.begin(), x.end() - 1);
  Diagram head = split_pair(single_color(prefix), x.back());
  if (prefix.size() == 1) return head;
  return seq(head, par(single_to_parallel(prefix), Diagram::id(x.back())));
}

Diagram to_single_color(const Diagram& d) {
  return seq_all({single_to_parallel(d.dom()), d, mirror(single_to_parallel(d.cod()))});
}

Diagram from_single_color(const Diagram& s, const Obj& dom, const Obj& cod) {
  require_boundary(s, {single_color(dom)}, {single_color(cod)});
  return seq_all({mirror(single_to_parallel(dom)), s, single_to_parallel(cod)});
}

}  // namespace tpcalc
