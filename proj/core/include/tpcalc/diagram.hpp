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
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tpcalc/color.hpp"
#include "tpcalc/semiring.hpp"

namespace tpcalc {

enum class DiagramKind : std::uint8_t {
  Id,      // [A] -> [A]
  Swap,    // [A, B] -> [B, A]
  Ten,     // [A, B] -> [A*B]
  Plus,    // [A, B] -> [A+B]
  Contr,   // [A, A] -> [A]
  Null,    // [] -> [A]
  Unit,    // [] -> [1]
  Adapt,   // [A] -> [A'], A and A' equivalent colors
  Scal,    // [A] -> [A], scaled by s
  Mirror,  // up-down mirror of a Ten/Plus/Contr/Null/Unit node
  Seq,     // first then second
  Par,     // side by side
};

std::string_view kind_name(DiagramKind kind);

// Immutable typed diagram term. Constructors type-check and throw TypeError.
//
// mirror() is pushed down to the generators when building, so Mirror nodes
// only ever wrap Ten, Plus, Contr, Null or Unit. Structural equality is
// exact term equality; no PROP law is applied.
class Diagram {
 public:
  static Diagram id(const Color& a);
  static Diagram swap(const Color& a, const Color& b);
  static Diagram ten(const Color& a, const Color& b);
  static Diagram plus(const Color& a, const Color& b);
  static Diagram contr(const Color& a);
  static Diagram null(const Color& a);
  static Diagram unit();
  static Diagram adapt(const Color& from, const Color& to);
  static Diagram scal(const Scalar& s, const Color& a);
  static Diagram seq(const Diagram& first, const Diagram& second);
  static Diagram par(const Diagram& left, const Diagram& right);
  static Diagram mirror(const Diagram& d);

  DiagramKind kind() const;
  const Obj& dom() const;
  const Obj& cod() const;
  bool is_functional() const;
  std::size_t hash() const;
  // Number of term nodes.
  std::size_t size() const;

  // Generator colors: a() for every generator, b() for Swap/Ten/Plus/Adapt.
  const Color& a() const;
  const Color& b() const;
  const Scalar& scalar() const;
  // Mirror: the wrapped generator. Seq/Par: first() and second().
  const Diagram& inner() const;
  const Diagram& first() const;
  const Diagram& second() const;

  bool is_generator() const;
  std::optional<SemiringTag> tag() const;
  // Identity of the node, for memo tables.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Diagram& x, const Diagram& y);
  friend bool operator!=(const Diagram& x, const Diagram& y) { return !(x == y); }

 private:
  struct Node;
  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::shared_ptr<Node> leaf(DiagramKind kind, const Color& a, const Color& b, Obj dom,
                                    Obj cod);
  static Diagram make(std::shared_ptr<Node> node);

  std::shared_ptr<const Node> node_;
};

struct Diagram::Node {
  DiagramKind kind = DiagramKind::Id;
  Color a;
  Color b;
  std::optional<Scalar> scalar;
  std::optional<Diagram> first;
  std::optional<Diagram> second;
  Obj dom;
  Obj cod;
  bool functional = true;
  std::optional<SemiringTag> tag;
  std::size_t hash = 0;
  std::size_t size = 1;
};

inline DiagramKind Diagram::kind() const { return node_->kind; }
inline const Obj& Diagram::dom() const { return node_->dom; }
inline const Obj& Diagram::cod() const { return node_->cod; }
inline bool Diagram::is_functional() const { return node_->functional; }
inline std::size_t Diagram::hash() const { return node_->hash; }
inline std::size_t Diagram::size() const { return node_->size; }
inline const Color& Diagram::a() const { return node_->a; }
inline const Color& Diagram::b() const { return node_->b; }
inline const Scalar& Diagram::scalar() const { return *node_->scalar; }
inline const Diagram& Diagram::inner() const { return *node_->first; }
inline const Diagram& Diagram::first() const { return *node_->first; }
inline const Diagram& Diagram::second() const { return *node_->second; }
inline std::optional<SemiringTag> Diagram::tag() const { return node_->tag; }

inline Diagram seq(const Diagram& d, const Diagram& e) { return Diagram::seq(d, e); }
inline Diagram par(const Diagram& d, const Diagram& e) { return Diagram::par(d, e); }
inline Diagram mirror(const Diagram& d) { return Diagram::mirror(d); }
inline bool is_functional(const Diagram& d) { return d.is_functional(); }

// Left-nested folds; both require a nonempty list.
Diagram seq_all(const std::vector<Diagram>& ds);
Diagram par_all(const std::vector<Diagram>& ds);

// nil<0> ; ~nil<0>: the diagram [] -> [] whose semantics is the unit scalar.
Diagram empty_diagram();
// Identity on an object: parallel identities, or the empty diagram for [].
Diagram identity(const Obj& x);

// Semiring of the scalar literals in d; nullopt when there are none. Mixing
// semirings inside one diagram is rejected at construction.
std::optional<SemiringTag> scalar_tag(const Diagram& d);

// Throws TypeError unless d has the given boundary.
void require_boundary(const Diagram& d, const Obj& dom, const Obj& cod);

}  // namespace tpcalc
