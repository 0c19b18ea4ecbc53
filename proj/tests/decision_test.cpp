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

#include <random>

#include "gtest/gtest.h"
#include "support.hpp"
#include "tpcalc/builders.hpp"
#include "tpcalc/error.hpp"
#include "tpcalc/textio.hpp"

namespace tpcalc {
namespace {

const auto Q = SemiringTag::Rational;
const Color k0 = Color::zero();
const Color k1 = Color::one();
const Color kBool = Color::plus(k1, k1);

void expect_same(const SemMatrix& a, const SemMatrix& b) {
  auto diff = first_difference(a, b);
  EXPECT_FALSE(diff.has_value()) << to_string(a) << "\nvs\n" << to_string(b);
}

TEST(Decision, IsoColorBoundaries) {
  EXPECT_EQ(iso_color(k1), Diagram::id(k1));
  EXPECT_EQ(iso_color(kBool).cod(), (Obj{k1, k1}));
  EXPECT_TRUE(iso_color(Color::tensor(kBool, k0)).cod().empty());
  EXPECT_EQ(iso_obj({kBool, kBool}).cod(), Obj(8, k1));
  EXPECT_EQ(packed_color({k1, k1}), parse_color("((1+1)+1)"));
  EXPECT_EQ(packed_color({k0}), k0);
}

TEST(Decision, IsoIsInvertible) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const Obj x = testing::random_obj(rng, 3, 2, 12);
    const Diagram iso = iso_obj(x);
    expect_same(eval(seq(iso, mirror(iso)), Q), SemMatrix::identity(Q, dim(x)));
  }
}

TEST(Decision, IsoOfOneColorIsTensorOfUnits) {
  // [1, 0, 0] is the matrix of ten<1,1>.
  const Diagram d = synthesize(SemMatrix::from_rows(Q, {{one(Q), zero(Q), zero(Q)}}), {k1, k1},
                               {Color::tensor(k1, k1)})
                        .diagram;
  EXPECT_TRUE(equiv(d, Diagram::ten(k1, k1), Q).equivalent);
}

TEST(Decision, SynthesizeRoundTrip) {
  std::mt19937_64 rng(40);
  for (int i = 0; i < 60; ++i) {
    const Obj dom = testing::random_obj(rng, 2, 2, 10);
    const Obj cod = testing::random_obj(rng, 2, 2, 10);
    const SemMatrix m = testing::random_matrix(rng, Q, dim(cod), dim(dom));
    const NormalForm nf = synthesize(m, dom, cod);
    EXPECT_EQ(nf.diagram.dom(), dom);
    EXPECT_EQ(nf.diagram.cod(), cod);
    EXPECT_TRUE(nf.diagram.is_functional());
    expect_same(eval(nf.diagram, Q), m);
  }
}

TEST(Decision, SynthesizeEmptyBoundaries) {
  const NormalForm nf = synthesize(SemMatrix(Q, 0, 0), {}, {});
  EXPECT_TRUE(equiv(nf.diagram, empty_diagram(), Q).equivalent);
  EXPECT_THROW(synthesize(SemMatrix(Q, 2, 2), {k1}, {k1}), ShapeError);
}

TEST(Decision, SynthesizeFullRoundTrip) {
  std::mt19937_64 rng(41);
  for (SemiringTag tag : {Q, SemiringTag::Nat, SemiringTag::Bool}) {
    for (int i = 0; i < 30; ++i) {
      const Obj dom = testing::random_obj(rng, 2, 2, 6);
      const Obj cod = testing::random_obj(rng, 2, 2, 6);
      SemMatrix v = testing::random_matrix(rng, tag, dim(cod) + 1, dim(dom) + 1);
      // The corner must be of the form s + 1.
      v.at(v.rows - 1, v.cols - 1) = add(v.at(v.rows - 1, v.cols - 1), one(tag));
      const NormalForm nf = synthesize_full(v, dom, cod);
      EXPECT_FALSE(nf.diagram.is_functional());
      expect_same(eval_full(nf.diagram, tag), v);
    }
  }
}

TEST(Decision, SynthesizeFullNeedsSuccessorCorner) {
  SemMatrix v(SemiringTag::Nat, 2, 2);
  for (auto& e : v.entries) e = zero(SemiringTag::Nat);
  EXPECT_THROW(synthesize_full(v, {k1}, {k1}), NotRepresentableError);
}

TEST(Decision, NormalizeIsDeterministicAndSound) {
  std::mt19937_64 rng(43);
  testing::DiagramShape shape;
  shape.allow_unit = true;
  for (int i = 0; i < 40; ++i) {
    const Diagram d = testing::random_diagram(rng, testing::random_obj(rng, 2, 2, 8), Q, shape);
    const NormalForm a = normalize(d, Q);
    const NormalForm b = normalize(d, Q);
    EXPECT_EQ(a.diagram, b.diagram);
    EXPECT_EQ(a.full, !d.is_functional());
    EXPECT_TRUE(equiv(a.diagram, d, Q).equivalent) << print_diagram(d);
  }
}

TEST(Decision, EquivReportsWitness) {
  const Diagram a = Diagram::scal(from_int(Q, 2), kBool);
  const Verdict v = equiv(a, Diagram::id(kBool), Q);
  EXPECT_FALSE(v.equivalent);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->col, (BasisName{0}));
  EXPECT_TRUE(equiv(a, a, Q).equivalent);
}

TEST(Decision, EquivRefusesFloats) {
  EXPECT_THROW(equiv(Diagram::id(k1), Diagram::id(k1), SemiringTag::Float), UserError);
}

TEST(Decision, SingleColorViewIsAnIsomorphism) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 30; ++i) {
    const Obj x = testing::random_obj(rng, 3, 2, 20);
    const Diagram psi = single_to_parallel(x);
    EXPECT_EQ(psi.dom(), (Obj{single_color(x)}));
    EXPECT_EQ(psi.cod(), x);
    EXPECT_TRUE(equiv(seq(psi, mirror(psi)), Diagram::id(single_color(x)), Q).equivalent);
    EXPECT_TRUE(equiv(seq(mirror(psi), psi), identity(x), Q).equivalent);
  }
}

TEST(Decision, SingleColorConjugation) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 30; ++i) {
    const Diagram d = testing::random_diagram(rng, testing::random_obj(rng, 2, 2, 10), Q);
    const Diagram s = to_single_color(d);
    EXPECT_EQ(s.dom().size(), 1u);
    EXPECT_EQ(s.cod().size(), 1u);
    EXPECT_TRUE(equiv(from_single_color(s, d.dom(), d.cod()), d, Q).equivalent);
  }
}

}  // namespace
}  // namespace tpcalc
