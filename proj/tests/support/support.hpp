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

#include <random>
#include <vector>

#include "tpcalc/color.hpp"
#include "tpcalc/diagram.hpp"
#include "tpcalc/matrix.hpp"
#include "tpcalc/semiring.hpp"

namespace tpcalc::testing {

// Dense reference evaluator. Generator matrices are written out from their
// basis-name rules and parallel composition is an explicit Kronecker product
// followed by a name-matching regroup. Shares no code with the sparse engine.
SemMatrix oracle_eval_full(const Diagram& d, SemiringTag tag);
SemMatrix oracle_generator(const Diagram& g, SemiringTag tag);

Obj random_obj(std::mt19937_64& rng, std::size_t max_wires, int max_depth,
               std::uint64_t max_dim = 64);

// Random well-typed diagram from `dom`, built layer by layer. Objects stay
// within `max_wires` wires and `max_dim` dimension.
struct DiagramShape {
  int layers = 6;
  std::size_t max_wires = 3;
  std::uint64_t max_dim = 48;
  bool allow_unit = false;
  bool allow_scalars = true;
};
Diagram random_diagram(std::mt19937_64& rng, const Obj& dom, SemiringTag tag,
                       const DiagramShape& shape = {});

// Same generators in the same order, with Seq and Par chains rebracketed at
// random.
Diagram reassociate(const Diagram& d, std::mt19937_64& rng);

SemMatrix random_matrix(std::mt19937_64& rng, SemiringTag tag, std::size_t rows, std::size_t cols,
                        int zero_percent = 30);

}  // namespace tpcalc::testing
