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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tpcalc/decision.hpp"
#include "tpcalc/diagram.hpp"
#include "tpcalc/semiring.hpp"

namespace tpcalc {

enum class Fragment : std::uint8_t { Functional, Full };

struct AxiomInstance {
  Diagram lhs;
  Diagram rhs;
};

// One equation of the theory as a generator of diagram pairs.
struct AxiomSchema {
  std::string label;   // e.g. "(mix)"; mirrored copies are prefixed with '~'
  std::string origin;  // main, zero, contraction, adapter, scalar, unit, induced, derived
  // Color slot i must be equivalent to slot equiv_to[i] when that is >= 0.
  std::vector<int> equiv_to;
  std::size_t scalar_slots = 0;
  Fragment fragment = Fragment::Functional;
  bool derived = false;
  bool mirrored = false;
  std::function<AxiomInstance(const std::vector<Color>&, const std::vector<Scalar>&, SemiringTag)>
      build;
  // Extra condition on the scalars, e.g. s + 1 = t + 1; empty when none.
  std::function<bool(const std::vector<Scalar>&)> precondition;

  std::size_t color_slots() const { return equiv_to.size(); }
};

// Every equation together with its up-down mirror.
const std::vector<AxiomSchema>& catalog();
const AxiomSchema& find_schema(const std::string& label);

// Throws UserError when the parameters do not fit the schema's signature.
AxiomInstance instantiate(const AxiomSchema& schema, const std::vector<Color>& colors,
                          const std::vector<Scalar>& scalars, SemiringTag tag);

struct SoundnessResult {
  bool pass = false;
  std::optional<Witness> witness;
};

SoundnessResult check_soundness(const AxiomSchema& schema, const std::vector<Color>& colors,
                                 const std::vector<Scalar>& scalars, SemiringTag tag);
SoundnessResult check_instance(const AxiomInstance& inst, SemiringTag tag);

// Unit inequations: pairs that must evaluate to DIFFERENT matrices over nat.
struct Inequation {
  std::string label;
  Diagram lhs;
  Diagram rhs;
};
std::vector<Inequation> unit_inequations();

// Random sampling shared by the harness and the tests.
Color random_color(std::mt19937_64& rng, int max_depth);
// Applies `steps` random associativity/unit rewrites at random positions.
Color random_equivalent(const Color& c, std::mt19937_64& rng, int steps = 3);
Scalar random_scalar(SemiringTag tag, std::mt19937_64& rng);

struct FuzzOptions {
  std::uint64_t seed = 42;
  std::size_t iterations = 50;
  int depth_bound = 3;
  std::vector<SemiringTag> semirings = {SemiringTag::Bool, SemiringTag::Nat,
                                        SemiringTag::Rational};
  // Instances whose boundary objects exceed this dimension are resampled.
  std::uint64_t max_boundary_dim = 300;
  std::size_t threads = 1;
};

struct FuzzRow {
  std::string label;
  std::string origin;
  SemiringTag tag = SemiringTag::Bool;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_failure;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  int depth_bound = 0;
  std::vector<FuzzRow> rows;
  std::size_t failures() const;
  std::size_t instances() const;
  std::string to_table() const;
  std::string to_json(int indent = 2) const;
};

FuzzReport fuzz(const FuzzOptions& options);

}  // namespace tpcalc
