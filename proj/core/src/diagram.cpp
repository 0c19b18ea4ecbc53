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

#include "tpcalc/diagram.hpp"

#include <functional>
#include <utility>

#include "tpcalc/error.hpp"

namespace tpcalc {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t scalar_hash(const Scalar& s) {
  // Float equality is tolerance based, so only the tag may enter the hash.
  if (s.tag() == SemiringTag::Float) return static_cast<std::size_t>(s.tag());
  return std::hash<std::string>{}(to_string(s));
}

std::optional<SemiringTag> join_tags(std::optional<SemiringTag> x, std::optional<SemiringTag> y) {
  if (!x) return y;
  if (!y) return x;
  if (*x != *y) {
    throw TagMismatchError("diagram mixes scalars from " + std::string(tag_name(*x)) + " and " +
                           std::string(tag_name(*y)));
  }
  return x;
}

}  // namespace

std::string_view kind_name(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::Id: return "id";
    case DiagramKind::Swap: return "swap";
    case DiagramKind::Ten: return "ten";
    case DiagramKind::Plus: return "plus";
    case DiagramKind::Contr: return "cnt";
    case DiagramKind::Null: return "nil";
    case DiagramKind::Unit: return "unit";
    case DiagramKind::Adapt: return "adp";
    case DiagramKind::Scal: return "scl";
    case DiagramKind::Mirror: return "mirror";
    case DiagramKind::Seq: return "seq";
    case DiagramKind::Par: return "par";
  }
  return "?";
}

std::shared_ptr<Diagram::Node> Diagram::leaf(DiagramKind kind, const Color& a, const Color& b,
                                             Obj dom, Obj cod) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->a = a;
  n->b = b;
  n->dom = std::move(dom);
  n->cod = std::move(cod);
  return n;
}

Diagram Diagram::make(std::shared_ptr<Node> node) {
  std::size_t h = mix(std::hash<int>{}(static_cast<int>(node->kind)), node->a.hash());
  h = mix(h, node->b.hash());
  if (node->scalar) h = mix(h, scalar_hash(*node->scalar));
  if (node->first) h = mix(h, node->first->hash());
  if (node->second) h = mix(h, node->second->hash());
  node->hash = h;
  return Diagram(std::move(node));
}

Diagram Diagram::id(const Color& a) { return make(leaf(DiagramKind::Id, a, Color::zero(), {a}, {a})); }

Diagram Diagram::swap(const Color& a, const Color& b) {
  return make(leaf(DiagramKind::Swap, a, b, {a, b}, {b, a}));
}

Diagram Diagram::ten(const Color& a, const Color& b) {
  return make(leaf(DiagramKind::Ten, a, b, {a, b}, {Color::tensor(a, b)}));
}

Diagram Diagram::plus(const Color& a, const Color& b) {
  return make(leaf(DiagramKind::Plus, a, b, {a, b}, {Color::plus(a, b)}));
}

Diagram Diagram::contr(const Color& a) {
  return make(leaf(DiagramKind::Contr, a, Color::zero(), {a, a}, {a}));
}

Diagram Diagram::null(const Color& a) {
  return make(leaf(DiagramKind::Null, a, Color::zero(), {}, {a}));
}

Diagram Diagram::unit() {
  auto n = leaf(DiagramKind::Unit, Color::one(), Color::zero(), {}, {Color::one()});
  n->functional = false;
  return make(std::move(n));
}

Diagram Diagram::adapt(const Color& from, const Color& to) {
  if (!color_equiv(from, to)) {
    throw TypeError("adapter between inequivalent colors " + to_string(from) + " and " +
                    to_string(to));
  }
  return make(leaf(DiagramKind::Adapt, from, to, {from}, {to}));
}

Diagram Diagram::scal(const Scalar& s, const Color& a) {
  auto n = leaf(DiagramKind::Scal, a, Color::zero(), {a}, {a});
  n->scalar = s;
  n->tag = s.tag();
  return make(std::move(n));
}

Diagram Diagram::seq(const Diagram& first, const Diagram& second) {
  if (first.cod() != second.dom()) {
    throw TypeError("sequential composition: codomain " + to_string(first.cod()) +
                    " does not match domain " + to_string(second.dom()));
  }
  auto n = leaf(DiagramKind::Seq, Color::zero(), Color::zero(), first.dom(), second.cod());
  n->first = first;
  n->second = second;
  n->functional = first.is_functional() && second.is_functional();
  n->tag = join_tags(first.tag(), second.tag());
  n->size = 1 + first.size() + second.size();
  return make(std::move(n));
}

Diagram Diagram::par(const Diagram& left, const Diagram& right) {
  Obj dom = left.dom();
  dom.insert(dom.end(), right.dom().begin(), right.dom().end());
  Obj cod = left.cod();
  cod.insert(cod.end(), right.cod().begin(), right.cod().end());
  auto n = leaf(DiagramKind::Par, Color::zero(), Color::zero(), std::move(dom), std::move(cod));
  n->first = left;
  n->second = right;
  n->functional = left.is_functional() && right.is_functional();
  n->tag = join_tags(left.tag(), right.tag());
  n->size = 1 + left.size() + right.size();
  return make(std::move(n));
}

Diagram Diagram::mirror(const Diagram& d) {
  switch (d.kind()) {
    case DiagramKind::Id:
    case DiagramKind::Scal: return d;
    case DiagramKind::Swap: return swap(d.b(), d.a());
    case DiagramKind::Adapt: return adapt(d.b(), d.a());
    case DiagramKind::Mirror: return d.inner();
    case DiagramKind::Seq: return seq(mirror(d.second()), mirror(d.first()));
    case DiagramKind::Par: return par(mirror(d.first()), mirror(d.second()));
    case DiagramKind::Ten:
    case DiagramKind::Plus:
    case DiagramKind::Contr:
    case DiagramKind::Null:
    case DiagramKind::Unit: {
      auto n = leaf(DiagramKind::Mirror, d.a(), d.b(), d.cod(), d.dom());
      n->first = d;
      n->functional = d.is_functional();
      n->size = 2;
      return make(std::move(n));
    }
  }
  throw InvariantError("unknown diagram kind");
}

bool Diagram::is_generator() const {
  return kind() != DiagramKind::Seq && kind() != DiagramKind::Par;
}

bool operator==(const Diagram& x, const Diagram& y) {
  // Iterative so that long composition chains do not exhaust the stack.
  std::vector<std::pair<const Diagram*, const Diagram*>> todo{{&x, &y}};
  while (!todo.empty()) {
    auto [p, q] = todo.back();
    todo.pop_back();
    if (p->node_ == q->node_) continue;
    if (p->kind() != q->kind() || p->hash() != q->hash() || p->size() != q->size()) return false;
    switch (p->kind()) {
      case DiagramKind::Seq:
      case DiagramKind::Par:
        todo.emplace_back(&p->first(), &q->first());
        todo.emplace_back(&p->second(), &q->second());
        break;
      case DiagramKind::Mirror: todo.emplace_back(&p->inner(), &q->inner()); break;
      case DiagramKind::Scal:
        if (!(p->scalar() == q->scalar()) || p->a() != q->a()) return false;
        break;
      default:
        if (p->a() != q->a() || p->b() != q->b()) return false;
        break;
    }
  }
  return true;
}

Diagram seq_all(const std::vector<Diagram>& ds) {
  if (ds.empty()) throw UserError("seq_all needs at least one diagram");
  Diagram acc = ds.front();
  for (std::size_t i = 1; i < ds.size(); ++i) acc = seq(acc, ds[i]);
  return acc;
}

Diagram par_all(const std::vector<Diagram>& ds) {
  if (ds.empty()) throw UserError("par_all needs at least one diagram");
  Diagram acc = ds.front();
  for (std::size_t i = 1; i < ds.size(); ++i) acc = par(acc, ds[i]);
  return acc;
}

Diagram empty_diagram() {
  static const Diagram d = seq(Diagram::null(Color::zero()), mirror(Diagram::null(Color::zero())));
  return d;
}

Diagram identity(const Obj& x) {
  if (x.empty()) return empty_diagram();
  std::vector<Diagram> ids;
  ids.reserve(x.size());
  for (const Color& c : x) ids.push_back(Diagram::id(c));
  return par_all(ids);
}

std::optional<SemiringTag> scalar_tag(const Diagram& d) { return d.tag(); }

void require_boundary(const Diagram& d, const Obj& dom, const Obj& cod) {
  if (d.dom() != dom || d.cod() != cod) {
    throw TypeError("expected boundary " + to_string(dom) + " -> " + to_string(cod) + ", got " +
                    to_string(d.dom()) + " -> " + to_string(d.cod()));
  }
}

}  // namespace tpcalc
