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

#include "tpcalc/semantics.hpp"

#include <random>

#include "gtest/gtest.h"
#include "support.hpp"
#include "tpcalc/axioms.hpp"
#include "tpcalc/error.hpp"
#include "tpcalc/textio.hpp"

namespace tpcalc {
namespace {

const auto Q = SemiringTag::Rational;
const Color k0 = Color::zero();
const Color k1 = Color::one();
const Color kBool = Color::plus(k1, k1);

SemMatrix rows(std::vector<std::vector<long long>> r, std::size_t cols = 0) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : r) {
    std::vector<Scalar> line;
    for (long long v : row) line.push_back(from_int(Q, v));
    out.push_back(line);
  }
  return SemMatrix::from_rows(Q, out, cols);
}

void expect_same(const SemMatrix& a, const SemMatrix& b) {
  auto diff = first_difference(a, b);
  EXPECT_FALSE(diff.has_value()) << to_string(a) << "\nvs\n" << to_string(b);
}

std::vector<Diagram> generators_over(const Color& a, const Color& b, SemiringTag tag) {
  return {Diagram::id(a),
          Diagram::swap(a, b),
          Diagram::ten(a, b),
          Diagram::plus(a, b),
          Diagram::contr(a),
          Diagram::null(a),
          Diagram::unit(),
          Diagram::adapt(Color::tensor(a, Color::tensor(b, k1)), Color::tensor(Color::tensor(a, b), k1)),
          Diagram::scal(from_ratio(tag, 2, 3), a)};
}

TEST(Semantics, UnitWireBlocks) {
  expect_same(eval(Diagram::id(k1), Q), rows({{1}}));
  expect_same(eval(Diagram::swap(k1, k1), Q), rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  expect_same(eval(Diagram::ten(k1, k1), Q), rows({{1, 0, 0}}));
  expect_same(eval(Diagram::plus(k1, k1), Q), rows({{0, 1, 0}, {0, 0, 1}}));
  expect_same(eval(Diagram::contr(k1), Q), rows({{0, 1, 1}}));
  expect_same(eval(Diagram::null(k1), Q), rows({{}}, 0));
  expect_same(eval_full(Diagram::null(k1), Q), rows({{0}, {1}}));
  expect_same(eval_full(Diagram::unit(), Q), rows({{1}, {1}}));
  expect_same(eval_full(mirror(Diagram::unit()), Q), rows({{1, 1}}));
}

TEST(Semantics, GeneratorsMatchOracle) {
  const std::vector<Color> colors{k0, k1, kBool, Color::tensor(kBool, kBool), Color::plus(k1, k0),
                                  Color::tensor(k0, kBool)};
  for (const Color& a : colors) {
    for (const Color& b : colors) {
      for (const Diagram& g : generators_over(a, b, Q)) {
        expect_same(gen_matrix_full(g, Q), testing::oracle_generator(g, Q));
        if (g.kind() != DiagramKind::Id && g.kind() != DiagramKind::Scal &&
            g.kind() != DiagramKind::Swap && g.kind() != DiagramKind::Adapt) {
          const Diagram m = mirror(g);
          expect_same(gen_matrix_full(m, Q), transpose(gen_matrix_full(g, Q)));
        }
      }
    }
  }
}

TEST(Semantics, EngineMatchesDenseOracle) {
  std::mt19937_64 rng(2024);
  testing::DiagramShape shape;
  shape.allow_unit = true;
  shape.layers = 8;
  for (SemiringTag tag : {SemiringTag::Bool, SemiringTag::Nat, SemiringTag::Rational,
                          SemiringTag::QI}) {
    for (int i = 0; i < 60; ++i) {
      const Obj dom = testing::random_obj(rng, 2, 2, 16);
      const Diagram d = testing::random_diagram(rng, dom, tag, shape);
      expect_same(eval_full(d, tag), testing::oracle_eval_full(d, tag));
    }
  }
}

TEST(Semantics, FunctionalSemanticsIsTheRestriction) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 80; ++i) {
    const Obj dom = testing::random_obj(rng, 3, 2, 30);
    const Diagram d = testing::random_diagram(rng, dom, Q);
    ASSERT_TRUE(d.is_functional());
    const SemMatrix f = eval(d, Q);
    const SemMatrix full = eval_full(d, Q);
    ASSERT_EQ(full.rows, f.rows + 1);
    ASSERT_EQ(full.cols, f.cols + 1);
    for (std::size_t r = 0; r < f.rows; ++r) {
      for (std::size_t c = 0; c < f.cols; ++c) EXPECT_EQ(full.at(r, c), f.at(r, c));
      EXPECT_TRUE(full.at(r, f.cols).is_zero());
    }
    for (std::size_t c = 0; c < f.cols; ++c) EXPECT_TRUE(full.at(f.rows, c).is_zero());
    EXPECT_TRUE(full.at(f.rows, f.cols).is_one());
  }
}

TEST(Semantics, EvalRejectsUnit) {
  EXPECT_THROW(eval(Diagram::unit(), Q), UserError);
}

TEST(Semantics, TwoUnitsInParallel) {
  // enum_full([1,1]) = [{1,2}, {1}, {2}, ∅]; (1 + x)(1 + y) expands to ones.
  expect_same(eval_full(par(Diagram::unit(), Diagram::unit()), Q), rows({{1}, {1}, {1}, {1}}));
}

TEST(Semantics, TensorAfterMirroredPlusIsNull) {
  const Diagram d = seq(mirror(Diagram::plus(k1, k1)), Diagram::ten(k1, k1));
  expect_same(eval(d, Q), rows({{0, 0}}));
}

TEST(Semantics, MirrorIsTranspose) {
  std::mt19937_64 rng(8);
  testing::DiagramShape shape;
  shape.allow_unit = true;
  for (int i = 0; i < 60; ++i) {
    const Diagram d = testing::random_diagram(rng, testing::random_obj(rng, 3, 2, 30), Q, shape);
    expect_same(eval_full(mirror(d), Q), transpose(eval_full(d, Q)));
  }
}

TEST(Semantics, BottomRightEntryIsSuccessor) {
  std::mt19937_64 rng(99);
  testing::DiagramShape shape;
  shape.allow_unit = true;
  shape.layers = 10;
  for (SemiringTag tag : {SemiringTag::Nat, SemiringTag::QNonNeg, SemiringTag::Bool}) {
    for (int i = 0; i < 60; ++i) {
      const Diagram d = testing::random_diagram(rng, testing::random_obj(rng, 2, 2, 16), tag, shape);
      const SemMatrix m = eval_full(d, tag);
      EXPECT_NO_THROW(sub_one(m.at(m.rows - 1, m.cols - 1))) << print_diagram(d);
    }
  }
}

TEST(Semantics, SparseApplyOfEmptyName) {
  const SparseVec v = apply(par(Diagram::unit(), Diagram::unit()), BasisName{}, Q);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v.front().first, (BasisName{0, 0}));
  EXPECT_EQ(v.back().first, (BasisName{kUnselected, kUnselected}));
}

TEST(Semantics, DenseSizeLimit) {
  const Obj wide(10, kBool);
  EXPECT_THROW(eval_full(identity(wide), Q), ShapeError);
  EXPECT_FALSE(compare_full(identity(wide), identity(wide), Q).has_value());
}

TEST(Semantics, CompareReportsFirstDifference) {
  const Diagram a = Diagram::scal(from_int(Q, 2), kBool);
  const Diagram b = Diagram::id(kBool);
  auto diff = compare_full(a, b, Q);
  ASSERT_TRUE(diff.has_value());
  EXPECT_EQ(diff->col, (BasisName{0}));
  EXPECT_EQ(diff->left, from_int(Q, 2));
  EXPECT_EQ(diff->right, from_int(Q, 1));
  EXPECT_THROW(compare_full(a, Diagram::id(k1), Q), TypeError);
}

class PropLaws : public ::testing::Test {
 protected:
  std::mt19937_64 rng{4242};
  testing::DiagramShape shape = [] {
    testing::DiagramShape s;
    s.allow_unit = true;
    s.layers = 4;
    return s;
  }();

  Diagram next(const Obj& dom) { return testing::random_diagram(rng, dom, Q, shape); }
};

TEST_F(PropLaws, Associativity) {
  for (int i = 0; i < 50; ++i) {
    const Diagram d = next(testing::random_obj(rng, 2, 2, 16));
    const Diagram e = next(d.cod());
    const Diagram f = next(e.cod());
    EXPECT_FALSE(compare_full(seq(seq(d, e), f), seq(d, seq(e, f)), Q).has_value());
    const Diagram g = next(testing::random_obj(rng, 1, 2, 8));
    EXPECT_FALSE(compare_full(par(par(d, g), f), par(d, par(g, f)), Q).has_value());
  }
}

TEST_F(PropLaws, Identities) {
  for (int i = 0; i < 50; ++i) {
    const Diagram d = next(testing::random_obj(rng, 2, 2, 16));
    EXPECT_FALSE(compare_full(seq(identity(d.dom()), d), d, Q).has_value());
    EXPECT_FALSE(compare_full(seq(d, identity(d.cod())), d, Q).has_value());
    EXPECT_FALSE(compare_full(par(d, empty_diagram()), d, Q).has_value());
  }
}

TEST_F(PropLaws, Interchange) {
  for (int i = 0; i < 40; ++i) {
    const Diagram d = next(testing::random_obj(rng, 2, 1, 8));
    const Diagram d2 = next(d.cod());
    const Diagram e = next(testing::random_obj(rng, 1, 2, 8));
    const Diagram e2 = next(e.cod());
    EXPECT_FALSE(compare_full(seq(par(d, e), par(d2, e2)), par(seq(d, d2), seq(e, e2)), Q)
                     .has_value());
  }
}

TEST_F(PropLaws, SwapNaturalityAndInvolution) {
  for (int i = 0; i < 40; ++i) {
    const Diagram d = next(Obj{random_color(rng, 2)});
    const Diagram e = next(Obj{random_color(rng, 2)});
    if (d.cod().size() != 1 || e.cod().size() != 1) continue;
    const Color a = d.dom()[0], b = e.dom()[0], a2 = d.cod()[0], b2 = e.cod()[0];
    EXPECT_FALSE(compare_full(seq(par(d, e), Diagram::swap(a2, b2)),
                              seq(Diagram::swap(a, b), par(e, d)), Q)
                     .has_value());
    EXPECT_FALSE(compare_full(seq(Diagram::swap(a, b), Diagram::swap(b, a)), identity({a, b}), Q)
                     .has_value());
  }
}

}  // namespace
}  // namespace tpcalc
