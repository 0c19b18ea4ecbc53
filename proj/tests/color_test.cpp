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

#include "tpcalc/color.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "support.hpp"
#include "tpcalc/axioms.hpp"
#include "tpcalc/error.hpp"
#include "tpcalc/textio.hpp"

namespace tpcalc {
namespace {

const Color k0 = Color::zero();
const Color k1 = Color::one();
const Color kBool = Color::plus(k1, k1);

// dim recurrence straight from the definition, used as an oracle.
std::uint64_t naive_dim(const Color& c) {
  switch (c.kind()) {
    case ColorKind::Zero: return 0;
    case ColorKind::One: return 1;
    case ColorKind::Plus: return naive_dim(c.left()) + naive_dim(c.right());
    case ColorKind::Tensor: return naive_dim(c.left()) * naive_dim(c.right());
  }
  return 0;
}

TEST(Color, Dimensions) {
  EXPECT_EQ(dim(k0), 0u);
  EXPECT_EQ(dim(k1), 1u);
  EXPECT_EQ(dim(kBool), 2u);
  EXPECT_EQ(dim(Color::tensor(kBool, kBool)), 4u);
  EXPECT_EQ(dim(Obj{}), 0u);
  EXPECT_EQ(dim(Obj{kBool, kBool}), 8u);
  EXPECT_EQ(dim(Obj{k1, k1, k1}), 7u);
  EXPECT_EQ(dim(Obj{k0, kBool}), 2u);
}

TEST(Color, DimMatchesRecurrenceOnRandomColors) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Color c = random_color(rng, 4);
    EXPECT_EQ(c.dim(), naive_dim(c)) << to_string(c);
    EXPECT_EQ(leaves(c).size(), c.dim());
  }
}

TEST(Color, ObjectDimensionRecurrence) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Obj x = testing::random_obj(rng, 4, 2, 1u << 20);
    std::uint64_t acc = 0;
    for (const Color& c : x) acc = acc * c.dim() + acc + c.dim();
    EXPECT_EQ(dim(x), acc);
    EXPECT_EQ(enumerate(x).size(), acc);
  }
}

TEST(Color, EnumerationOfTwoBooleans) {
  const auto names = enumerate({kBool, kBool});
  std::vector<std::string> text;
  for (const auto& n : names) text.push_back(to_string(n));
  EXPECT_EQ(text, (std::vector<std::string>{"{1:0,2:0}", "{1:0,2:1}", "{1:1,2:0}", "{1:1,2:1}",
                                             "{1:0}", "{1:1}", "{2:0}", "{2:1}"}));
  const auto full = enumerate_full({kBool, kBool});
  ASSERT_EQ(full.size(), 9u);
  EXPECT_TRUE(is_empty_name(full.back()));
  EXPECT_EQ(to_string(full.back()), "∅");
}

TEST(Color, IndexAndNameAreInverse) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const Obj x = testing::random_obj(rng, 4, 2, 300);
    for (bool full : {false, true}) {
      const auto names = full ? enumerate_full(x) : enumerate(x);
      std::set<BasisName> distinct(names.begin(), names.end());
      EXPECT_EQ(distinct.size(), names.size());
      for (std::uint64_t k = 0; k < names.size(); ++k) {
        EXPECT_EQ(index_of(x, names[k], full), k);
        EXPECT_EQ(name_at(x, k, full), names[k]);
      }
    }
  }
}

TEST(Color, IndexOfRejectsForeignNames) {
  EXPECT_THROW(index_of({kBool}, BasisName{2}, false), UserError);
  EXPECT_THROW(index_of({kBool}, BasisName{kUnselected}, false), UserError);
  EXPECT_THROW(name_at({kBool}, 2, false), UserError);
}

TEST(Color, CanonicalForm) {
  EXPECT_EQ(canon_color(Color::plus(kBool, k0)), kBool);
  EXPECT_EQ(canon_color(Color::tensor(k1, kBool)), kBool);
  EXPECT_EQ(canon_color(Color::plus(Color::plus(k1, k1), k1)),
            canon_color(Color::plus(k1, Color::plus(k1, k1))));
  // 0 * A is not a unit or associativity instance.
  EXPECT_FALSE(color_equiv(Color::tensor(k0, kBool), k0));
  EXPECT_FALSE(color_equiv(Color::tensor(kBool, kBool), Color::plus(kBool, kBool)));
  EXPECT_TRUE(color_equiv(parse_color("(1*(1*1))"), parse_color("((1*1)*1)")));
}

TEST(Color, RandomRewritesStayEquivalent) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const Color c = random_color(rng, 3);
    const Color d = random_equivalent(c, rng, 4);
    EXPECT_TRUE(color_equiv(c, d)) << to_string(c) << " vs " << to_string(d);
    EXPECT_EQ(c.dim(), d.dim());
    EXPECT_EQ(canon_color(c), canon_color(d));
  }
}

TEST(Color, StructuralEqualityAndHash) {
  const Color a = parse_color("((1+0)*(1+1))");
  const Color b = parse_color("((1+0)*(1+1))");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_NE(a, parse_color("((0+1)*(1+1))"));
  EXPECT_EQ(a.depth(), 2);
}

TEST(Color, RegroupPermutationOfThreeUnitWires) {
  // Rows: (AB)C, AB, AC, A, BC, B, C. Columns follow the left-nested
  // enumeration (AB)C, AC, BC, AB, A, B, C.
  const auto p = regroup_perm({k1}, {k1, k1}, EnumMode::Functional);
  EXPECT_EQ(p, (std::vector<std::uint64_t>{0, 3, 1, 4, 2, 5, 6}));
  // With the split [A, B] | [C] the block order is already the enumeration.
  const auto q = regroup_perm({k1, k1}, {k1}, EnumMode::Functional);
  EXPECT_EQ(q, (std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(Color, RegroupPermutationIsABijection) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 80; ++i) {
    const Obj l = testing::random_obj(rng, 2, 2, 20);
    const Obj r = testing::random_obj(rng, 2, 2, 20);
    Obj lr = l;
    lr.insert(lr.end(), r.begin(), r.end());
    for (EnumMode mode : {EnumMode::Functional, EnumMode::Full}) {
      const auto p = regroup_perm(l, r, mode);
      const bool full = mode == EnumMode::Full;
      ASSERT_EQ(p.size(), full ? dim(lr) + 1 : dim(lr));
      std::set<std::uint64_t> seen(p.begin(), p.end());
      EXPECT_EQ(seen.size(), p.size());
      if (full) {
        // Full block order is enum_full(l) x enum_full(r), left outer.
        const auto ln = enumerate_full(l);
        const auto rn = enumerate_full(r);
        const auto all = enumerate_full(lr);
        for (std::size_t a = 0; a < ln.size(); ++a) {
          for (std::size_t b = 0; b < rn.size(); ++b) {
            BasisName n = ln[a];
            n.insert(n.end(), rn[b].begin(), rn[b].end());
            EXPECT_EQ(all[p[a * rn.size() + b]], n);
          }
        }
      }
    }
  }
}

TEST(Color, DimensionOverflowIsReported) {
  // Dimensions are cached at construction, so the overflow surfaces there.
  Color big = kBool;
  for (int i = 0; i < 5; ++i) big = Color::tensor(big, big);  // 2^32
  EXPECT_EQ(big.dim(), std::uint64_t{1} << 32);
  EXPECT_THROW(Color::tensor(big, big), ShapeError);
}

}  // namespace
}  // namespace tpcalc
