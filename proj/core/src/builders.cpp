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

#include "tpcalc/builders.hpp"

#include <unordered_map>

#include "tpcalc/circuit.hpp"
#include "tpcalc/error.hpp"

namespace tpcalc {

namespace {

using Wire = Circuit::Wire;

Diagram ids_then(const Diagram& g, const std::vector<Color>& rest) {
  std::vector<Diagram> parts{g};
  for (const Color& c : rest) parts.push_back(Diagram::id(c));
  return par_all(parts);
}

template <typename Binary>
Diagram n_ary(const std::vector<Color>& colors, Binary binary, const char* what) {
  if (colors.empty()) throw UserError(std::string(what) + " needs at least one color");
  if (colors.size() == 1) return Diagram::id(colors.front());
  Color acc = colors[0];
  std::vector<Diagram> layers;
  for (std::size_t i = 1; i < colors.size(); ++i) {
    Diagram g = binary(acc, colors[i]);
    layers.push_back(ids_then(g, std::vector<Color>(colors.begin() + static_cast<long>(i) + 1,
                                                    colors.end())));
    acc = g.cod().front();
  }
  return seq_all(layers);
}

// [1] -> [1, 1], copying the unit leaf and the empty name.
Diagram copy_unit() {
  return seq(Diagram::adapt(Color::one(), Color::tensor(Color::one(), Color::one())),
             mirror(Diagram::ten(Color::one(), Color::one())));
}

// [1, A] -> [A]: passes the data only together with the tag.
Diagram gate(const Color& a) {
  return seq(Diagram::ten(Color::one(), a), Diagram::adapt(Color::tensor(Color::one(), a), a));
}

std::vector<Wire> copies(Circuit& c, Wire w, std::size_t n) {
  std::vector<Wire> out{w};
  while (out.size() < n) {
    Wire last = out.back();
    out.pop_back();
    auto two = c.apply(copy_unit(), {last});
    out.push_back(two[0]);
    out.push_back(two[1]);
  }
  return out;
}

// Sends a unit wire into exactly one of n branches (a sum over the choices).
std::vector<Wire> choices(Circuit& c, Wire w, std::size_t n) {
  if (n == 1) return {w};
  return c.apply(mirror(n_contraction(Color::one(), n)), {w});
}

// Pairs two unit wires into one unit wire that is selected only when both are.
Wire both(Circuit& c, Wire x, Wire y) {
  Wire t = c.apply1(Diagram::ten(Color::one(), Color::one()), {x, y});
  return c.apply1(Diagram::adapt(Color::tensor(Color::one(), Color::one()), Color::one()), {t});
}

Wire contract_all(Circuit& c, const std::vector<Wire>& ws) {
  return c.apply1(n_contraction(Color::one(), ws.size()), ws);
}

enum class OrKind { Strict, Lazy, Parallel };

Diagram build_or(OrKind kind) {
  const Color b = bool_color();
  const Color u = Color::one();
  Circuit c({b, b});
  auto x1 = c.apply(mirror(Diagram::plus(u, u)), {c.inputs()[0]});
  auto x2 = c.apply(mirror(Diagram::plus(u, u)), {c.inputs()[1]});
  const Wire f1 = x1[0], t1 = x1[1], f2 = x2[0], t2 = x2[1];

  auto f1s = choices(c, f1, 2);  // FF, FT
  auto f2s = choices(c, f2, 2);  // FF, TF
  std::vector<Wire> t1s;
  std::vector<Wire> t2s;
  if (kind == OrKind::Strict) {
    t1s = choices(c, t1, 2);  // TF, TT
    t2s = choices(c, t2, 2);  // FT, TT
  } else if (kind == OrKind::Lazy) {
    t1s = choices(c, t1, 3);  // alone, TF, TT
    t2s = choices(c, t2, 2);  // FT, TT
  } else {
    t1s = choices(c, t1, 3);  // alone, TF, TT
    t2s = choices(c, t2, 3);  // alone, FT, TT
  }
  const std::size_t o1 = kind == OrKind::Strict ? 0 : 1;
  const std::size_t o2 = kind == OrKind::Parallel ? 1 : 0;

  Wire ff = both(c, f1s[0], f2s[0]);
  Wire ft = both(c, f1s[1], t2s[o2 + 0]);
  Wire tf = both(c, t1s[o1 + 0], f2s[1]);
  Wire tt = both(c, t1s[o1 + 1], t2s[o2 + 1]);

  std::vector<Wire> trues;
  if (kind != OrKind::Strict) trues.push_back(t1s[0]);
  if (kind == OrKind::Parallel) trues.push_back(t2s[0]);
  trues.push_back(ft);
  trues.push_back(tf);
  trues.push_back(tt);
  Wire t = contract_all(c, trues);
  Wire out = c.apply1(Diagram::plus(u, u), {ff, t});
  return c.finish({out});
}

Color choi_free_check(const Diagram& u, const Diagram& v) {
  if (u.dom().size() != 1 || u.dom() != u.cod()) {
    throw TypeError("switch: u must have boundary [A] -> [A], got " + to_string(u.dom()) +
                    " -> " + to_string(u.cod()));
  }
  if (v.dom() != u.dom() || v.cod() != u.cod()) {
    throw TypeError("switch: u and v boundaries differ: " + to_string(u.dom()) + " vs " +
                    to_string(v.dom()));
  }
  return u.dom().front();
}

// Body of the single-occurrence switch. `apply_u`/`apply_v` insert the
// operation (or a hole) on one wire and return the output wire.
template <typename U, typename V>
Diagram switch_body(Circuit& c, const Color& a, Wire input, Wire feedback, U apply_u, V apply_v) {
  const Color u1 = Color::one();
  const Color b = bool_color();
  auto tx = c.apply(mirror(Diagram::ten(b, a)), {input});
  auto ft = c.apply(mirror(Diagram::plus(u1, u1)), {tx[0]});
  auto fs = copies(c, ft[0], 3);  // start gate, end gate, feedback gate
  auto ts = copies(c, ft[1], 2);  // start gate, end gate
  auto xs = c.apply(mirror(Diagram::contr(a)), {tx[1]});
  Wire a_f = c.apply1(gate(a), {fs[0], xs[0]});
  Wire a_t = c.apply1(gate(a), {ts[0], xs[1]});
  Wire fb = c.apply1(gate(a), {fs[2], feedback});

  Wire u_in = c.apply1(Diagram::contr(a), {a_t, fb});
  auto us = c.apply(mirror(Diagram::contr(a)), {apply_u(u_in)});  // to v, to output
  Wire v_in = c.apply1(Diagram::contr(a), {us[0], a_f});
  auto vs = c.apply(mirror(Diagram::contr(a)), {apply_v(v_in)});  // to output, to feedback

  auto end_f = c.apply(mirror(Diagram::ten(u1, a)), {c.apply1(Diagram::ten(u1, a), {fs[1], us[1]})});
  auto end_t = c.apply(mirror(Diagram::ten(u1, a)), {c.apply1(Diagram::ten(u1, a), {ts[1], vs[0]})});
  Wire tag = c.apply1(Diagram::plus(u1, u1), {end_f[0], end_t[0]});
  Wire data = c.apply1(Diagram::contr(a), {end_f[1], end_t[1]});
  Wire out = c.apply1(Diagram::ten(b, a), {tag, data});
  return c.finish({out, vs[1]});
}

}  // namespace

Diagram n_tensor(const std::vector<Color>& colors) {
  return n_ary(colors, [](const Color& x, const Color& y) { return Diagram::ten(x, y); }, "n_tensor");
}

Diagram n_plus(const std::vector<Color>& colors) {
  return n_ary(colors, [](const Color& x, const Color& y) { return Diagram::plus(x, y); }, "n_plus");
}

Diagram n_contraction(const Color& a, std::size_t n) {
  if (n == 0) throw UserError("n_contraction needs n >= 1");
  return n_ary(std::vector<Color>(n, a),
               [](const Color& x, const Color&) { return Diagram::contr(x); }, "n_contraction");
}

Diagram spider(const std::vector<Color>& inputs, const std::vector<Color>& outputs) {
  if (inputs.empty() || outputs.empty()) throw UserError("spider needs at least one leg per side");
  const Color in = tensor_fold(inputs);
  const Color out = tensor_fold(outputs);
  if (!color_equiv(in, out)) {
    throw TypeError("spider legs are not equivalent: " + to_string(in) + " vs " + to_string(out));
  }
  std::vector<Diagram> stages;
  if (inputs.size() > 1) stages.push_back(n_tensor(inputs));
  stages.push_back(Diagram::adapt(in, out));
  if (outputs.size() > 1) stages.push_back(mirror(n_tensor(outputs)));
  return seq_all(stages);
}

Diagram disjunction(const std::vector<Color>& colors) {
  if (colors.empty()) throw UserError("disjunction needs at least one color");
  if (colors.size() == 1) return Diagram::id(colors.front());
  Diagram p = n_plus(colors);
  return seq(p, mirror(p));
}

Diagram conjunction(const std::vector<std::vector<Color>>& groups) {
  if (groups.size() < 2) throw UserError("conjunction needs at least two groups");
  std::vector<Diagram> sums;
  std::vector<Color> summed;
  bool trivial = true;
  for (const auto& g : groups) {
    if (g.empty()) throw UserError("conjunction group is empty");
    sums.push_back(n_plus(g));
    summed.push_back(sums.back().cod().front());
    trivial = trivial && g.size() == 1;
  }
  Diagram t = n_tensor(summed);
  if (trivial) return seq(t, mirror(t));
  Diagram s = par_all(sums);
  return seq_all({s, t, mirror(t), mirror(s)});
}

namespace {

Diagram build_cup(const Color& a) {
  switch (a.kind()) {
    case ColorKind::One:
      return seq_all({Diagram::unit(), Diagram::adapt(a, Color::tensor(a, a)),
                      mirror(Diagram::ten(a, a))});
    case ColorKind::Zero: return par(Diagram::null(a), Diagram::null(a));
    case ColorKind::Tensor:
    case ColorKind::Plus: {
      const Color& x = a.left();
      const Color& y = a.right();
      Diagram join = a.kind() == ColorKind::Tensor ? Diagram::ten(x, y) : Diagram::plus(x, y);
      return seq_all({par(cup(x), cup(y)),
                      par_all({Diagram::id(x), Diagram::swap(x, y), Diagram::id(y)}),
                      par(join, join)});
    }
  }
  throw InvariantError("unknown color kind");
}

// Cups and caps of subcolors recur across related colors. A bounded per-thread
// memo lets repeated requests share nodes.
template <typename Build>
Diagram memoized(std::unordered_map<Color, Diagram, ColorHash>& memo, const Color& a, Build build) {
  constexpr std::size_t kMemoLimit = 4096;
  if (auto it = memo.find(a); it != memo.end()) return it->second;
  Diagram d = build(a);
  if (memo.size() >= kMemoLimit) memo.clear();
  memo.emplace(a, d);
  return d;
}

}  // namespace

Diagram cup(const Color& a) {
  thread_local std::unordered_map<Color, Diagram, ColorHash> memo;
  return memoized(memo, a, build_cup);
}

Diagram cap(const Color& a) {
  thread_local std::unordered_map<Color, Diagram, ColorHash> memo;
  return memoized(memo, a, [](const Color& c) { return mirror(cup(c)); });
}

Diagram trace_last(const Diagram& f) {
  if (f.dom().empty() || f.cod().empty() || f.dom().back() != f.cod().back()) {
    throw TypeError("trace needs a common last wire, got " + to_string(f.dom()) + " -> " +
                    to_string(f.cod()));
  }
  const Color a = f.dom().back();
  Obj x(f.dom().begin(), f.dom().end() - 1);
  Obj y(f.cod().begin(), f.cod().end() - 1);
  Diagram open = x.empty() ? cup(a) : par(identity(x), cup(a));
  Diagram close = y.empty() ? cap(a) : par(identity(y), cap(a));
  return seq_all({open, par(f, Diagram::id(a)), close});
}

Color bool_color() { return Color::plus(Color::one(), Color::one()); }

Diagram value_true() {
  const Color u = Color::one();
  return seq(par(Diagram::null(u), Diagram::unit()), Diagram::plus(u, u));
}

Diagram value_false() {
  const Color u = Color::one();
  return seq(par(Diagram::unit(), Diagram::null(u)), Diagram::plus(u, u));
}

Diagram value_bot() { return Diagram::null(bool_color()); }

Diagram value_top() {
  const Color u = Color::one();
  return seq_all({Diagram::unit(), mirror(Diagram::contr(u)), Diagram::plus(u, u)});
}

Diagram or_strict() { return build_or(OrKind::Strict); }
Diagram or_lazy() { return build_or(OrKind::Lazy); }
Diagram or_parallel() { return build_or(OrKind::Parallel); }

Diagram or_strict_with_bot_rhs() {
  const Color b = bool_color();
  return seq(mirror(Diagram::null(b)), Diagram::null(b));
}

Diagram or_lazy_with_true_rhs() {
  const Color u = Color::one();
  return seq_all({mirror(Diagram::plus(u, u)), Diagram::contr(u), par(Diagram::id(u), Diagram::unit()),
                  Diagram::contr(u), par(Diagram::null(u), Diagram::id(u)), Diagram::plus(u, u)});
}

Diagram pbit(const Scalar& p, const Scalar& q) {
  const Color u = Color::one();
  return seq_all({Diagram::unit(), mirror(Diagram::contr(u)),
                  par(Diagram::scal(p, u), Diagram::scal(q, u)), Diagram::plus(u, u)});
}

Diagram proba_coin_matrix(SemiringTag tag) {
  const Color u = Color::one();
  const Scalar half = from_ratio(tag, 1, 2);
  return seq_all({mirror(Diagram::plus(u, u)), par(Diagram::id(u), mirror(Diagram::contr(u))),
                  par_all({Diagram::id(u), Diagram::scal(half, u), Diagram::scal(half, u)}),
                  par(Diagram::contr(u), Diagram::id(u)), Diagram::plus(u, u)});
}

Diagram hadamard() {
  const Color u = Color::one();
  const Scalar h = parse_scalar(SemiringTag::QR2, "0+1/2 r2");
  const Scalar mh = parse_scalar(SemiringTag::QR2, "0-1/2 r2");
  Diagram split = mirror(Diagram::contr(u));
  return seq_all({mirror(Diagram::plus(u, u)), par(split, split),
                  par_all({Diagram::scal(h, u), Diagram::scal(h, u), Diagram::scal(h, u),
                           Diagram::scal(mh, u)}),
                  par_all({Diagram::id(u), Diagram::swap(u, u), Diagram::id(u)}),
                  par(Diagram::contr(u), Diagram::contr(u)), Diagram::plus(u, u)});
}

Diagram hadamard_state() {
  const Scalar h = parse_scalar(SemiringTag::QR2, "0+1/2 r2");
  return pbit(h, h);
}

Diagram switch_dup(const Diagram& u, const Diagram& v) {
  const Color a = choi_free_check(u, v);
  const Color u1 = Color::one();
  const Color b = bool_color();
  Circuit c({Color::tensor(b, a)});
  auto tx = c.apply(mirror(Diagram::ten(b, a)), {c.inputs()[0]});
  auto ft = c.apply(mirror(Diagram::plus(u1, u1)), {tx[0]});
  auto fs = copies(c, ft[0], 2);
  auto ts = copies(c, ft[1], 2);
  auto xs = c.apply(mirror(Diagram::contr(a)), {tx[1]});
  Wire yf = c.apply1(gate(a), {fs[0], xs[0]});
  yf = c.apply1(u, {c.apply1(v, {yf})});
  Wire yt = c.apply1(gate(a), {ts[0], xs[1]});
  yt = c.apply1(v, {c.apply1(u, {yt})});
  Diagram ungate = seq(Diagram::adapt(a, Color::tensor(u1, a)), mirror(Diagram::ten(u1, a)));
  auto rf = c.apply(ungate, {yf});
  auto rt = c.apply(ungate, {yt});
  // The tag copies not used for gating pair up with the ungated tags.
  Wire tf = both(c, fs[1], rf[0]);
  Wire tt = both(c, ts[1], rt[0]);
  Wire tag = c.apply1(Diagram::plus(u1, u1), {tf, tt});
  Wire data = c.apply1(Diagram::contr(a), {rf[1], rt[1]});
  return c.finish({c.apply1(Diagram::ten(b, a), {tag, data})});
}

Diagram switch_single(const Diagram& u, const Diagram& v) {
  const Color a = choi_free_check(u, v);
  Circuit c({Color::tensor(bool_color(), a), a});
  Diagram body = switch_body(
      c, a, c.inputs()[0], c.inputs()[1], [&](Wire w) { return c.apply1(u, {w}); },
      [&](Wire w) { return c.apply1(v, {w}); });
  return trace_last(body);
}

Diagram switch_higher_order(const Color& a) {
  // Wire order of the body: data, u-state (2), v-state (2), feedback.
  Circuit c({Color::tensor(bool_color(), a), a, a, a, a, a});
  const auto& in = c.inputs();
  auto hole = [&](Wire x, Wire state_in, Wire state_out) {
    c.apply(cap(a), {x, state_in});
    return state_out;
  };
  Diagram body = switch_body(
      c, a, in[0], in[5], [&](Wire w) { return hole(w, in[1], in[2]); },
      [&](Wire w) { return hole(w, in[3], in[4]); });
  return trace_last(body);
}

Diagram choi(const Diagram& u) {
  if (u.dom().size() != 1 || u.cod().size() != 1) throw TypeError("choi needs a one-wire diagram");
  return seq(cup(u.dom().front()), par(Diagram::id(u.dom().front()), u));
}

}  // namespace tpcalc
