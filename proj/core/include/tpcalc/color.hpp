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
#include <ostream>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace tpcalc {

enum class ColorKind : std::uint8_t { Zero, One, Plus, Tensor };

// Immutable wire type built from 0, 1, (A+B) and (A*B). Copies share nodes.
class Color {
 public:
  Color();  // 0
  static Color zero();
  static Color one();
  static Color plus(const Color& a, const Color& b);
  static Color tensor(const Color& a, const Color& b);

  ColorKind kind() const;
  const Color& left() const;
  const Color& right() const;
  std::uint64_t dim() const;
  int depth() const;
  std::size_t hash() const;

  friend bool operator==(const Color& a, const Color& b);
  friend bool operator!=(const Color& a, const Color& b) { return !(a == b); }
  // Total order: by textual form. Used for deterministic containers.
  friend bool operator<(const Color& a, const Color& b);

 private:
  struct Node;
  explicit Color(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Color::Node {
  ColorKind kind;
  Color left_child;
  Color right_child;
  std::uint64_t dim;
  int depth;
  std::size_t hash;
};

inline ColorKind Color::kind() const { return node_->kind; }
inline std::uint64_t Color::dim() const { return node_->dim; }
inline int Color::depth() const { return node_->depth; }
inline std::size_t Color::hash() const { return node_->hash; }

// Wires in parallel; the empty vector is the unit object.
using Obj = std::vector<Color>;

std::string to_string(const Color& c);
std::string to_string(const Obj& x);
std::ostream& operator<<(std::ostream& os, const Color& c);

// Leaf descriptors in enumeration order: "L"/"R" prefixes for summands,
// concatenation for tensor factors (left factor outer), "" for the unit leaf.
std::vector<std::string> leaves(const Color& c);

std::uint64_t dim(const Color& c);
// dim(X || B) = dim(X) dim(B) + dim(X) + dim(B). Throws ShapeError on overflow.
std::uint64_t dim(const Obj& x);

// Canonical representative of the class generated by associativity and unit
// laws of + and *. 0 * A is not reduced.
Color canon_color(const Color& c);
bool color_equiv(const Color& a, const Color& b);

// Fold with * (resp. +), left-nested; empty list gives 1 (resp. 0).
Color tensor_fold(const std::vector<Color>& colors);
Color plus_fold(const std::vector<Color>& colors);

// One entry per wire: the chosen leaf index, or kUnselected.
using BasisName = boost::container::small_vector<std::int32_t, 6>;
inline constexpr std::int32_t kUnselected = -1;

bool is_empty_name(const BasisName& name);
std::string to_string(const BasisName& name);  // e.g. {1:L,2:R}, or ∅

// Functional enumeration: nonempty selections, left-nested recurrence.
std::vector<BasisName> enumerate(const Obj& x);
// enumerate(x) followed by the empty-selection name.
std::vector<BasisName> enumerate_full(const Obj& x);

// Position of `name` in enumerate (full = false) or enumerate_full (full = true).
std::uint64_t index_of(const Obj& x, const BasisName& name, bool full);
// Inverse of index_of.
BasisName name_at(const Obj& x, std::uint64_t index, bool full);

enum class EnumMode : std::uint8_t { Functional, Full };

// p[k] is the index in the enumeration of left++right of the k-th name of the
// block order: [pairs(enum(left) x enum(right)), enum(left), enum(right)] for
// Functional, enum_full(left) x enum_full(right) for Full (left outer).
std::vector<std::uint64_t> regroup_perm(const Obj& left, const Obj& right, EnumMode mode);

struct ColorHash {
  std::size_t operator()(const Color& c) const { return c.hash(); }
};

}  // namespace tpcalc
