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

#include <vector>

#include "tpcalc/diagram.hpp"
#include "tpcalc/semiring.hpp"

namespace tpcalc {

// n-ary nodes, left-nested. n = 1 gives the identity; n = 0 is rejected.
Diagram n_tensor(const std::vector<Color>& colors);
Diagram n_plus(const std::vector<Color>& colors);
Diagram n_contraction(const Color& a, std::size_t n);

// n_tensor(inputs) ; adapter ; mirror(n_tensor(outputs)), skipping identity
// stages. Throws TypeError unless the two tensor folds are equivalent.
Diagram spider(const std::vector<Color>& inputs, const std::vector<Color>& outputs);

// n_plus ; mirror(n_plus). disjunction([A]) is id<A>.
Diagram disjunction(const std::vector<Color>& colors);
// Plus-fold of each group, tensor of the sums, then the mirrored shape.
// Needs at least two nonempty groups.
Diagram conjunction(const std::vector<std::vector<Color>>& groups);

// Compact structure: cup(A): [] -> [A, A], cap(A) = mirror(cup(A)).
Diagram cup(const Color& a);
Diagram cap(const Color& a);
// Feedback loop of f: [X..., A] -> [Y..., A] over its last wire.
Diagram trace_last(const Diagram& f);

// Booleans live in 1 + 1; the left leaf is false, the right leaf is true.
Color bool_color();
Diagram value_true();
Diagram value_false();
Diagram value_bot();
Diagram value_top();

Diagram or_strict();
Diagram or_lazy();
Diagram or_parallel();
// Closed forms of or_strict ; (id | bot) and or_lazy ; (true | id) plugged
// appropriately; see the tests for the exact composites.
Diagram or_strict_with_bot_rhs();
Diagram or_lazy_with_true_rhs();

// p false + q true.
Diagram pbit(const Scalar& p, const Scalar& q);
// if x then coin() else false, with a fair coin.
Diagram proba_coin_matrix(SemiringTag tag);
// Hadamard gate on 1 + 1 and the state (1/sqrt2, 1/sqrt2), both over qr2.
Diagram hadamard();
Diagram hadamard_state();

// Quantum switch on (1 + 1) * A: false runs v then u, true runs u then v.
Diagram switch_dup(const Diagram& u, const Diagram& v);
// Same behaviour with a single occurrence of u and v, using a feedback loop.
Diagram switch_single(const Diagram& u, const Diagram& v);
// switch_single with u and v replaced by holes fed from Choi states:
// [(1+1)*A, A, A, A, A] -> [(1+1)*A], u-state wires first.
Diagram switch_higher_order(const Color& a);
// cup(A) ; (id | u): [] -> [A, A].
Diagram choi(const Diagram& u);

}  // namespace tpcalc
