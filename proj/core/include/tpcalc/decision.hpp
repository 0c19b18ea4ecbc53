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

#include <optional>
#include <string>

#include "tpcalc/diagram.hpp"
#include "tpcalc/matrix.hpp"
#include "tpcalc/semantics.hpp"

namespace tpcalc {

// iso_color(A): [A] -> [1, ..., 1] with dim(A) unit wires, one per leaf.
Diagram iso_color(const Color& a);
// iso_obj(X): X -> [1, ..., 1] with dim(X) unit wires, one per basis name of
// enumerate(X), ending in a disjunction when dim(X) >= 2.
Diagram iso_obj(const Obj& x);
// Color of the single wire produced by iso_then_plus: the left-nested sum of
// dim(X) units, or 0 when dim(X) = 0.
Color packed_color(const Obj& x);
// iso_obj(X) followed by the plus-fold: X -> [packed_color(X)].
Diagram iso_then_plus(const Obj& x);

// [M]: [1 x cols] -> [1 x rows]. Zero entries are absent wires, unit
// entries carry no scalar node.
Diagram matrix_diagram(const SemMatrix& m);

struct NormalForm {
  Diagram diagram;
  SemMatrix matrix;
  Obj dom;
  Obj cod;
  bool full = false;
};

// iso_obj(dom) ; [M] ; mirror(iso_obj(cod)). M is dim(cod) x dim(dom).
NormalForm synthesize(const SemMatrix& m, const Obj& dom, const Obj& cod);
// Full-calculus normal form for V of shape (dim(cod)+1) x (dim(dom)+1).
// Throws NotRepresentableError when V's bottom-right entry has no s + 1 form.
NormalForm synthesize_full(const SemMatrix& v, const Obj& dom, const Obj& cod);
// synthesize(eval(d)) for functional d, synthesize_full(eval_full(d)) otherwise.
NormalForm normalize(const Diagram& d, SemiringTag tag);

struct Witness {
  BasisName row;
  BasisName col;
  Scalar left;
  Scalar right;
};

struct Verdict {
  bool equivalent = false;
  std::optional<Witness> witness;
};

// Decides d == e in the equational theory by comparing full semantics.
// Refuses the floating-point semiring.
Verdict equiv(const Diagram& d, const Diagram& e, SemiringTag tag);

// Single-wire view of an object: 0, A, then (C*B)+(C+B) folding from the left.
Color single_color(const Obj& x);
// [single_color(X)] -> X; semantically the identity permutation.
Diagram single_to_parallel(const Obj& x);
// single_to_parallel(dom) ; d ; mirror(single_to_parallel(cod)).
Diagram to_single_color(const Diagram& d);
// Inverse conjugation back to the given boundary.
Diagram from_single_color(const Diagram& s, const Obj& dom, const Obj& cod);

}  // namespace tpcalc
