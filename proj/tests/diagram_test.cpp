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

#include <random>

#include "gtest/gtest.h"
#include "support.hpp"
#include "tpcalc/error.hpp"
#include "tpcalc/textio.hpp"

namespace tpcalc {
namespace {

const Color k0 = Color::zero();
const Color k1 = Color::one();
const Color kBool = Color::plus(k1, k1);

TEST(Diagram, GeneratorBoundaries) {
  const Color a = kBool;
  const Color b = Color::tensor(k1, kBool);
  EXPECT_EQ(Diagram::id(a).dom(), (Obj{a}));
  EXPECT_EQ(Diagram::swap(a, b).cod(), (Obj{b, a}));
  EXPECT_EQ(Diagram::ten(a, b).cod(), (Obj{Color::tensor(a, b)}));
  EXPECT_EQ(Diagram::plus(a, b).cod(), (Obj{Color::plus(a, b)}));
  EXPECT_EQ(Diagram::contr(a).dom(), (Obj{a, a}));
  EXPECT_EQ(Diagram::null(a).dom(), Obj{});
  EXPECT_EQ(Diagram::unit().cod(), (Obj{k1}));
  EXPECT_EQ(mirror(Diagram::ten(a, b)).dom(), (Obj{Color::tensor(a, b)}));
  EXPECT_EQ(mirror(Diagram::ten(a, b)).cod(), (Obj{a, b}));
}

TEST(Diagram, FunctionalFlag) {
  EXPECT_TRUE(Diagram::contr(kBool).is_functional());
  EXPECT_FALSE(Diagram::unit().is_functional());
  EXPECT_FALSE(mirror(Diagram::unit()).is_functional());
  EXPECT_FALSE(par(Diagram::id(k1), Diagram::unit()).is_functional());
  EXPECT_TRUE(seq(Diagram::null(k1), mirror(Diagram::null(k1))).is_functional());
}

TEST(Diagram, SequentialTypeError) {
  EXPECT_THROW(seq(Diagram::ten(k1, k1), mirror(Diagram::plus(k1, k1))), TypeError);
}

TEST(Diagram, AdapterNeedsEquivalentColors) {
  EXPECT_NO_THROW(Diagram::adapt(parse_color("(1*(1*1))"), parse_color("((1*1)*1)")));
  EXPECT_THROW(Diagram::adapt(kBool, k1), TypeError);
  EXPECT_THROW(Diagram::adapt(Color::tensor(k0, kBool), k0), TypeError);
}

TEST(Diagram, MixedScalarTagsAreRejected) {
  const Diagram a = Diagram::scal(from_int(SemiringTag::Nat, 2), k1);
  const Diagram b = Diagram::scal(from_int(SemiringTag::Rational, 2), k1);
  EXPECT_THROW(seq(a, b), TagMismatchError);
  EXPECT_THROW(par(a, b), TagMismatchError);
  EXPECT_EQ(scalar_tag(seq(a, a)), SemiringTag::Nat);
  EXPECT_FALSE(scalar_tag(Diagram::id(k1)).has_value());
}

TEST(Diagram, MirrorIsPushedToGenerators) {
  const Diagram d = seq(Diagram::plus(k1, k1), mirror(Diagram::contr(kBool)));
  const Diagram m = mirror(d);
  EXPECT_EQ(m.kind(), DiagramKind::Seq);
  EXPECT_EQ(m.first(), Diagram::contr(kBool));
  EXPECT_EQ(m.second().kind(), DiagramKind::Mirror);
  EXPECT_EQ(mirror(Diagram::swap(k1, kBool)), Diagram::swap(kBool, k1));
}

TEST(Diagram, MirrorIsAnInvolution) {
  std::mt19937_64 rng(1);
  testing::DiagramShape shape;
  shape.allow_unit = true;
  for (int i = 0; i < 200; ++i) {
    const Obj dom = testing::random_obj(rng, 3, 2, 40);
    const Diagram d = testing::random_diagram(rng, dom, SemiringTag::Rational, shape);
    EXPECT_EQ(mirror(mirror(d)), d);
    EXPECT_EQ(mirror(d).dom(), d.cod());
    EXPECT_EQ(mirror(d).cod(), d.dom());
    EXPECT_EQ(mirror(d).is_functional(), d.is_functional());
  }
}

TEST(Diagram, StructuralEquality) {
  const Diagram a = seq(Diagram::plus(k1, k1), mirror(Diagram::plus(k1, k1)));
  const Diagram b = seq(Diagram::plus(k1, k1), mirror(Diagram::plus(k1, k1)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_NE(a, seq(Diagram::plus(k1, k1), Diagram::id(kBool)));
  EXPECT_NE(Diagram::scal(from_int(SemiringTag::Nat, 2), k1),
            Diagram::scal(from_int(SemiringTag::Nat, 3), k1));
}

TEST(Diagram, LongChainsDoNotOverflowTheStack) {
  Diagram a = Diagram::id(kBool);
  Diagram b = Diagram::id(kBool);
  for (int i = 0; i < 20000; ++i) {
    a = seq(a, Diagram::id(kBool));
    b = seq(b, Diagram::id(kBool));
  }
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u * 20000 + 1);
}

TEST(Diagram, EmptyAndIdentity) {
  EXPECT_EQ(empty_diagram().dom(), Obj{});
  EXPECT_EQ(empty_diagram().cod(), Obj{});
  const Obj x{k1, kBool};
  EXPECT_EQ(identity(x).dom(), x);
  EXPECT_EQ(identity(x).cod(), x);
  EXPECT_NO_THROW(require_boundary(identity(x), x, x));
  EXPECT_THROW(require_boundary(identity(x), x, {k1}), TypeError);
}

}  // namespace
}  // namespace tpcalc
