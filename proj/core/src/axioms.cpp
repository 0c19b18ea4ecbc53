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

#include "tpcalc/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tpcalc/builders.hpp"
#include "tpcalc/error.hpp"
#include "tpcalc/semantics.hpp"

namespace tpcalc {

namespace {

using D = Diagram;
using Cs = std::vector<Color>;
using Ss = std::vector<Scalar>;
using Build = std::function<AxiomInstance(const Cs&, const Ss&, SemiringTag)>;

D I(const Color& a) { return D::id(a); }
D M(const D& d) { return mirror(d); }
D S(std::initializer_list<D> ds) { return seq_all(ds); }
D P(std::initializer_list<D> ds) { return par_all(ds); }
Color tp(const Color& a, const Color& b) { return Color::tensor(a, b); }
Color pl(const Color& a, const Color& b) { return Color::plus(a, b); }

const Color& c0() {
  static const Color z = Color::zero();
  return z;
}
const Color& c1() {
  static const Color o = Color::one();
  return o;
}

struct Registry {
  std::vector<AxiomSchema> items;

  void add(std::string label, std::string origin, std::vector<int> equiv_to,
           std::size_t scalar_slots, Fragment fragment, Build build,
           std::function<bool(const Ss&)> pre = {}) {
    AxiomSchema s;
    s.derived = label.front() == '[';
    s.label = std::move(label);
    s.origin = std::move(origin);
    s.equiv_to = std::move(equiv_to);
    s.scalar_slots = scalar_slots;
    s.fragment = fragment;
    s.build = std::move(build);
    s.precondition = std::move(pre);
    items.push_back(std::move(s));
  }
};

constexpr auto kFun = Fragment::Functional;
constexpr auto kFull = Fragment::Full;

void main_equations(Registry& r) {
  r.add("(⊗)", "main", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({M(D::ten(a, b)), D::ten(a, b)}), I(tp(a, b))};
  });
  r.add("(⊕)", "main", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({M(D::plus(a, b)), D::plus(a, b)}), I(pl(a, b))};
  });
  r.add("(⊥)", "main", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({M(D::plus(a, b)), D::ten(a, b)}),
                         S({M(D::null(pl(a, b))), D::null(tp(a, b))})};
  });
  r.add("(⊥▽)", "main", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({M(D::contr(a)), D::ten(a, a)}),
                         S({M(D::null(a)), D::null(tp(a, a))})};
  });
  r.add("(0)", "main", {}, 0, kFun, [](const Cs&, const Ss&, SemiringTag) {
    return AxiomInstance{I(c0()), S({M(D::null(c0())), D::null(c0())})};
  });
  r.add("(σ▽)", "main", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({D::swap(a, a), D::contr(a)}), D::contr(a)};
  });
  r.add("(N⊗)", "main", {-1, -1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1], &x = c[2];
    D lhs = S({P({M(D::ten(a, b)), I(x)}), P({I(a), D::ten(b, x)})});
    D rhs = S({D::ten(tp(a, b), x), D::adapt(tp(tp(a, b), x), tp(a, tp(b, x))),
               M(D::ten(a, tp(b, x)))});
    return AxiomInstance{lhs, rhs};
  });
  r.add("(X⊕)", "main", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    D p = D::plus(c[0], c[1]);
    return AxiomInstance{S({p, M(p), p}), p};
  });
  r.add("(⊕→▽)", "main", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({D::plus(a, a), M(D::plus(a, a)), D::contr(a)}), D::contr(a)};
  });
  r.add("(mix)", "main", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D rhs = S({P({M(D::contr(a)), M(D::contr(b))}), P({I(a), D::swap(a, b), I(b)}),
               P({D::ten(a, b), D::plus(a, b)}), P({M(D::ten(a, b)), M(D::plus(a, b))}),
               P({I(a), D::swap(b, a), I(b)}), P({D::contr(a), D::contr(b)})});
    return AxiomInstance{P({I(a), I(b)}), rhs};
  });
}

void zero_equations(Registry& r) {
  r.add("(⊗0)", "zero", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({P({D::null(a), I(b)}), D::ten(a, b)}),
                         S({M(D::null(b)), D::null(tp(a, b))})};
  });
  r.add("[0⊗]", "zero", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({P({I(a), D::null(b)}), D::ten(a, b)}),
                         S({M(D::null(a)), D::null(tp(a, b))})};
  });
  r.add("(⊕0)", "zero", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({P({D::null(a), D::null(b)}), D::plus(a, b)}), D::null(pl(a, b))};
  });
  r.add("[X⊕0]", "zero", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D init = P({I(a), D::null(b)});
    return AxiomInstance{S({init, D::plus(a, b), M(D::plus(a, b))}), init};
  });
  r.add("(▽0)", "zero", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({P({D::null(a), D::null(a)}), D::contr(a)}), D::null(a)};
  });
  r.add("(00)", "zero", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({D::null(a), M(D::null(a))}), empty_diagram()};
  });
  r.add("(0 adapter)", "zero", {-1, 0}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    return AxiomInstance{S({D::null(c[0]), D::adapt(c[0], c[1])}), D::null(c[1])};
  });
  r.add("(0R)", "zero", {-1}, 1, kFun, [](const Cs& c, const Ss& s, SemiringTag) {
    return AxiomInstance{S({D::null(c[0]), D::scal(s[0], c[0])}), D::null(c[0])};
  });
  r.add("(ρ▽)", "zero", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({P({I(a), D::null(a)}), D::contr(a)}), I(a)};
  });
  r.add("[λ▽]", "zero", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({P({D::null(a), I(a)}), D::contr(a)}), I(a)};
  });
}

void contraction_equations(Registry& r) {
  r.add("(⊗▽)", "contraction", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D rhs = S({P({M(D::ten(a, b)), M(D::ten(a, b))}), P({I(a), D::swap(b, a), I(b)}),
               P({D::contr(a), D::contr(b)}), D::ten(a, b)});
    return AxiomInstance{D::contr(tp(a, b)), rhs};
  });
  r.add("(▽⊗)", "contraction", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D lhs = S({P({D::contr(a), I(b)}), D::ten(a, b)});
    D rhs = S({P({I(a), I(a), M(D::contr(b))}), P({I(a), D::swap(a, b), I(b)}),
               P({D::ten(a, b), D::ten(a, b)}), D::contr(tp(a, b))});
    return AxiomInstance{lhs, rhs};
  });
  r.add("(⊕▽)", "contraction", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D rhs = S({P({M(D::plus(a, b)), M(D::plus(a, b))}), P({I(a), D::swap(b, a), I(b)}),
               P({D::contr(a), D::contr(b)}), D::plus(a, b)});
    return AxiomInstance{D::contr(pl(a, b)), rhs};
  });
  r.add("(X⊕▽)", "contraction", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D lhs = S({P({D::plus(a, b), D::plus(a, b)}), D::contr(pl(a, b))});
    D rhs = S({P({I(a), D::swap(b, a), I(b)}), P({D::contr(a), D::contr(b)}), D::plus(a, b)});
    return AxiomInstance{lhs, rhs};
  });
  r.add("(▽▽)", "contraction", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    D rhs = S({P({M(D::contr(a)), M(D::contr(a))}), P({I(a), D::swap(a, a), I(a)}),
               P({D::contr(a), D::contr(a)}), disjunction({a, a})});
    return AxiomInstance{S({D::contr(a), M(D::contr(a))}), rhs};
  });
  r.add("(α▽)", "contraction", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({P({D::contr(a), I(a)}), D::contr(a)}),
                         S({P({I(a), D::contr(a)}), D::contr(a)})};
  });
  r.add("(▽R)", "contraction", {-1}, 1, kFun, [](const Cs& c, const Ss& s, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({D::contr(a), D::scal(s[0], a)}),
                         S({P({D::scal(s[0], a), D::scal(s[0], a)}), D::contr(a)})};
  });
  r.add("(▽ adapter)", "contraction", {-1, 0}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &a2 = c[1];
    return AxiomInstance{S({D::contr(a), D::adapt(a, a2)}),
                         S({P({D::adapt(a, a2), D::adapt(a, a2)}), D::contr(a2)})};
  });
}

void adapter_equations(Registry& r) {
  r.add("(⊗ adapter)", "adapter", {-1, -1, 0, 1}, 0, kFun,
        [](const Cs& c, const Ss&, SemiringTag) {
          const Color &a = c[0], &b = c[1], &a2 = c[2], &b2 = c[3];
          return AxiomInstance{S({D::ten(a, b), D::adapt(tp(a, b), tp(a2, b2))}),
                               S({P({D::adapt(a, a2), D::adapt(b, b2)}), D::ten(a2, b2)})};
        });
  r.add("(⊕ adapter)", "adapter", {-1, -1, 0, 1}, 0, kFun,
        [](const Cs& c, const Ss&, SemiringTag) {
          const Color &a = c[0], &b = c[1], &a2 = c[2], &b2 = c[3];
          return AxiomInstance{S({D::plus(a, b), D::adapt(pl(a, b), pl(a2, b2))}),
                               S({P({D::adapt(a, a2), D::adapt(b, b2)}), D::plus(a2, b2)})};
        });
  r.add("(λρ⊗)", "adapter", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{D::adapt(tp(c1(), a), tp(a, c1())),
                         S({M(D::ten(c1(), a)), D::swap(c1(), a), D::ten(a, c1())})};
  });
  r.add("(ρ⊕)", "adapter", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{D::adapt(pl(a, c0()), a),
                         S({M(D::plus(a, c0())), P({I(a), M(D::null(c0()))})})};
  });
  r.add("(λ⊕)", "adapter", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{D::adapt(pl(c0(), a), a),
                         S({M(D::plus(c0(), a)), P({M(D::null(c0())), I(a)})})};
  });
  r.add("(adapter adapter)", "adapter", {-1, 0, 0}, 0, kFun,
        [](const Cs& c, const Ss&, SemiringTag) {
          return AxiomInstance{S({D::adapt(c[0], c[1]), D::adapt(c[1], c[2])}),
                               D::adapt(c[0], c[2])};
        });
  r.add("(adapter)", "adapter", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    return AxiomInstance{D::adapt(c[0], c[0]), I(c[0])};
  });
  r.add("(α⊗)", "adapter", {-1, -1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1], &x = c[2];
    D lhs = S({P({D::ten(a, b), I(x)}), D::ten(tp(a, b), x),
               D::adapt(tp(tp(a, b), x), tp(a, tp(b, x)))});
    D rhs = S({P({I(a), D::ten(b, x)}), D::ten(a, tp(b, x))});
    return AxiomInstance{lhs, rhs};
  });
  r.add("(α⊕)", "adapter", {-1, -1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1], &x = c[2];
    D lhs = S({P({D::plus(a, b), I(x)}), D::plus(pl(a, b), x),
               D::adapt(pl(pl(a, b), x), pl(a, pl(b, x)))});
    D rhs = S({P({I(a), D::plus(b, x)}), D::plus(a, pl(b, x))});
    return AxiomInstance{lhs, rhs};
  });
}

void scalar_equations(Registry& r) {
  r.add("[R×]", "scalar", {-1}, 2, kFun, [](const Cs& c, const Ss& s, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({D::scal(s[0], a), D::scal(s[1], a)}), D::scal(mul(s[0], s[1]), a)};
  });
  r.add("(R1)", "scalar", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag tag) {
    return AxiomInstance{D::scal(one(tag), c[0]), I(c[0])};
  });
  r.add("(R0)", "scalar", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag tag) {
    const Color& a = c[0];
    return AxiomInstance{D::scal(zero(tag), a), S({M(D::null(a)), D::null(a)})};
  });
  r.add("(R+)", "scalar", {-1}, 2, kFun, [](const Cs& c, const Ss& s, SemiringTag) {
    const Color& a = c[0];
    D lhs = S({M(D::contr(a)), P({D::scal(s[0], a), D::scal(s[1], a)}), D::contr(a)});
    return AxiomInstance{lhs, D::scal(add(s[0], s[1]), a)};
  });
  r.add("(⊗R)", "scalar", {-1, -1}, 1, kFun, [](const Cs& c, const Ss& s, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({P({D::scal(s[0], a), I(b)}), D::ten(a, b)}),
                         S({D::ten(a, b), D::scal(s[0], tp(a, b))})};
  });
  r.add("(⊕R)", "scalar", {-1, -1}, 1, kFun, [](const Cs& c, const Ss& s, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({P({D::scal(s[0], a), D::scal(s[0], b)}), D::plus(a, b)}),
                         S({D::plus(a, b), D::scal(s[0], pl(a, b))})};
  });
  r.add("(R adapter)", "scalar", {-1, 0}, 1, kFun, [](const Cs& c, const Ss& s, SemiringTag) {
    const Color &a = c[0], &a2 = c[1];
    return AxiomInstance{S({D::scal(s[0], a), D::adapt(a, a2)}),
                         S({D::adapt(a, a2), D::scal(s[0], a2)})};
  });
}

// [1] -> [1] with full semantics [[1, 1], [1, s + 1]].
D cancellation_side(const Scalar& s) {
  const Color& u = c1();
  return S({P({I(u), D::unit()}), P({I(u), M(D::contr(u))}), P({I(u), D::scal(s, u), I(u)}),
            P({D::swap(u, u), I(u)}), P({D::contr(u), I(u)}), P({M(D::unit()), I(u)})});
}

void unit_equations(Registry& r) {
  r.add("(ρ⊗)", "unit", {-1}, 0, kFull, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    D lhs = S({D::adapt(a, tp(a, c1())), M(D::ten(a, c1())), P({I(a), M(D::unit())})});
    return AxiomInstance{lhs, I(a)};
  });
  r.add("[λ⊗]", "unit", {-1}, 0, kFull, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    D lhs = S({D::adapt(a, tp(c1(), a)), M(D::ten(c1(), a)), P({M(D::unit()), I(a)})});
    return AxiomInstance{lhs, I(a)};
  });
  r.add("(10)", "unit", {}, 0, kFull, [](const Cs&, const Ss&, SemiringTag) {
    return AxiomInstance{S({D::null(c1()), M(D::unit())}), empty_diagram()};
  });
  r.add(
      "(Can)", "unit", {}, 2, kFull,
      [](const Cs&, const Ss& s, SemiringTag) {
        return AxiomInstance{cancellation_side(s[0]), cancellation_side(s[1])};
      },
      [](const Ss& s) {
        const Scalar u = one(s[0].tag());
        return eq(add(s[0], u), add(s[1], u));
      });
  r.add("[1+]", "unit", {}, 0, kFull, [](const Cs&, const Ss&, SemiringTag) {
    const Color& u = c1();
    return AxiomInstance{S({P({D::unit(), D::unit()}), D::plus(u, u)}),
                         S({D::unit(), M(D::contr(u)), D::plus(u, u)})};
  });
  r.add("[1∥]", "unit", {}, 0, kFull, [](const Cs&, const Ss&, SemiringTag) {
    const Color& u = c1();
    return AxiomInstance{S({P({D::unit(), D::unit()}), D::ten(u, u)}),
                         S({D::unit(), D::adapt(u, tp(u, u))})};
  });
}

void induced_equations(Registry& r) {
  r.add("[X⊗]", "induced", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    D t = D::ten(c[0], c[1]);
    return AxiomInstance{S({t, M(t), t}), t};
  });
  r.add("[σ⊗]", "induced", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({D::ten(a, b), M(D::ten(a, b)), D::swap(a, b)}),
                         S({D::swap(a, b), D::ten(b, a), M(D::ten(b, a))})};
  });
  r.add("[σ⊕]", "induced", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({D::plus(a, b), M(D::plus(a, b)), D::swap(a, b)}),
                         S({D::swap(a, b), D::plus(b, a), M(D::plus(b, a))})};
  });
  r.add("[▽→⊕]", "induced", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({M(D::contr(a)), D::plus(a, a), M(D::plus(a, a))}), M(D::contr(a))};
  });
  r.add("[▽▽→⊗]", "induced", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D lhs = S({P({M(D::contr(a)), M(D::contr(b))}), P({I(a), D::swap(a, b), I(b)}),
               P({D::ten(a, b), D::ten(a, b)})});
    return AxiomInstance{lhs, S({D::ten(a, b), M(D::contr(tp(a, b)))})};
  });
  r.add("[⊕▽→⊗]", "induced", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    return AxiomInstance{S({D::plus(a, b), M(D::plus(a, b)), D::ten(a, b)}),
                         S({P({M(D::null(a)), M(D::null(b))}), D::null(tp(a, b))})};
  });
  r.add("[X⊕→X▽]", "induced", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    D loop = S({D::contr(a), M(D::contr(a))});
    return AxiomInstance{S({D::plus(a, a), M(D::plus(a, a)), loop}), loop};
  });
  r.add("[X⊕→▽]", "induced", {}, 0, kFull, [](const Cs&, const Ss&, SemiringTag) {
    const Color& u = c1();
    D lhs = S({P({D::unit(), D::unit()}), D::plus(u, u), M(D::plus(u, u)), D::contr(u)});
    return AxiomInstance{lhs, S({D::unit(), M(D::contr(u)), D::contr(u)})};
  });
  r.add("[X▽→▽]", "induced", {}, 0, kFull, [](const Cs&, const Ss&, SemiringTag) {
    const Color& u = c1();
    return AxiomInstance{S({P({D::unit(), D::unit()}), D::contr(u)}),
                         S({D::unit(), M(D::contr(u)), D::contr(u)})};
  });
  r.add("[X⊕⊕]", "induced", {-1, -1, -1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1], &x = c[2], &y = c[3];
    D balanced = S({P({D::plus(a, b), D::plus(x, y)}), D::plus(pl(a, b), pl(x, y))});
    return AxiomInstance{disjunction({a, b, x, y}), S({balanced, M(balanced)})};
  });
  r.add("[R⊕⊕]", "induced", {-1, -1}, 1, kFun, [](const Cs& c, const Ss& s, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D scale = P({D::scal(s[0], a), D::scal(s[0], b)});
    return AxiomInstance{S({disjunction({a, b}), scale}), S({scale, disjunction({a, b})})};
  });
  r.add("[▽⊕]", "induced", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D rhs = S({P({M(D::plus(a, b)), M(D::plus(a, b))}), P({I(a), D::swap(b, a), I(b)}),
               P({D::contr(a), D::contr(b)}), disjunction({a, b})});
    return AxiomInstance{S({D::contr(pl(a, b)), M(D::plus(a, b))}), rhs};
  });
}

void derived_laws(Registry& r) {
  r.add("[spider fusion]", "derived", {-1, -1, -1}, 0, kFun,
        [](const Cs& c, const Ss&, SemiringTag) {
          const Color &a = c[0], &b = c[1], &x = c[2];
          const Color mid = tp(a, tp(b, x));
          return AxiomInstance{S({spider({a, b, x}, {mid}), spider({mid}, {tp(a, b), x})}),
                               spider({a, b, x}, {tp(a, b), x})};
        });
  r.add("[spider ▽]", "derived", {-1, -1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D split = spider({tp(a, b)}, {a, b});
    D rhs = S({P({split, split}), P({I(a), D::swap(b, a), I(b)}), P({D::contr(a), D::contr(b)})});
    return AxiomInstance{S({D::contr(tp(a, b)), split}), rhs};
  });
  r.add("[spider 0]", "derived", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({P({D::null(a), D::null(a)}), spider({a, a}, {tp(a, a)})}),
                         D::null(tp(a, a))};
  });
  r.add("[λρ spider]", "derived", {-1}, 0, kFull, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    D lhs = S({P({D::unit(), I(a)}), spider({c1(), a}, {a}), P({I(a), D::unit()}),
               spider({a, c1()}, {a})});
    return AxiomInstance{lhs, I(a)};
  });
  r.add("[spider R]", "derived", {-1, -1}, 2, kFun, [](const Cs& c, const Ss& s, SemiringTag) {
    const Color &a = c[0], &b = c[1];
    D sp = spider({a, b}, {tp(a, b)});
    return AxiomInstance{S({P({D::scal(s[0], a), D::scal(s[1], b)}), sp}),
                         S({sp, D::scal(mul(s[0], s[1]), tp(a, b))})};
  });
  r.add("[n-ary ⊗]", "derived", {-1, -1, -1, -1}, 0, kFun,
        [](const Cs& c, const Ss&, SemiringTag) {
          const Color &a = c[0], &b = c[1], &x = c[2], &y = c[3];
          const Color right = tp(a, tp(b, tp(x, y)));
          D lhs = S({n_tensor({a, b, x, y}), D::adapt(tensor_fold({a, b, x, y}), right)});
          D rhs = S({P({I(a), I(b), D::ten(x, y)}), P({I(a), D::ten(b, tp(x, y))}),
                     D::ten(a, tp(b, tp(x, y)))});
          return AxiomInstance{lhs, rhs};
        });
  r.add("[n-ary ⊕]", "derived", {-1, -1, -1, -1}, 0, kFun,
        [](const Cs& c, const Ss&, SemiringTag) {
          const Color &a = c[0], &b = c[1], &x = c[2], &y = c[3];
          const Color right = pl(a, pl(b, pl(x, y)));
          D lhs = S({n_plus({a, b, x, y}), D::adapt(plus_fold({a, b, x, y}), right)});
          D rhs = S({P({I(a), I(b), D::plus(x, y)}), P({I(a), D::plus(b, pl(x, y))}),
                     D::plus(a, pl(b, pl(x, y)))});
          return AxiomInstance{lhs, rhs};
        });
  r.add("[n-ary ▽]", "derived", {-1}, 0, kFun, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{n_contraction(a, 4),
                         S({P({D::contr(a), D::contr(a)}), D::contr(a)})};
  });
  r.add("[disjunction idempotence]", "derived", {-1, -1, -1}, 0, kFun,
        [](const Cs& c, const Ss&, SemiringTag) {
          D d = disjunction({c[0], c[1], c[2]});
          return AxiomInstance{S({d, d}), d};
        });
  r.add("[snake]", "derived", {-1}, 0, kFull, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({P({cup(a), I(a)}), P({I(a), cap(a)})}), I(a)};
  });
  r.add("[snake']", "derived", {-1}, 0, kFull, [](const Cs& c, const Ss&, SemiringTag) {
    const Color& a = c[0];
    return AxiomInstance{S({P({I(a), cup(a)}), P({cap(a), I(a)})}), I(a)};
  });
}

std::vector<AxiomSchema> build_catalog() {
  Registry r;
  main_equations(r);
  zero_equations(r);
  contraction_equations(r);
  adapter_equations(r);
  scalar_equations(r);
  unit_equations(r);
  induced_equations(r);
  derived_laws(r);
  std::vector<AxiomSchema> out = r.items;
  for (const AxiomSchema& s : r.items) {
    AxiomSchema m = s;
    m.label = "~" + s.label;
    m.mirrored = true;
    m.build = [base = s.build](const Cs& c, const Ss& sc, SemiringTag tag) {
      AxiomInstance inst = base(c, sc, tag);
      return AxiomInstance{mirror(inst.lhs), mirror(inst.rhs)};
    };
    out.push_back(std::move(m));
  }
  return out;
}

std::string join_colors(const Cs& cs) {
  std::string out = "[";
  for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? ", " : "") + to_string(cs[i]);
  return out + "]";
}

std::string join_scalars(const Ss& ss) {
  std::string out = "[";
  for (std::size_t i = 0; i < ss.size(); ++i) out += (i ? ", " : "") + to_string(ss[i]);
  return out + "]";
}

std::string describe_failure(const Cs& cs, const Ss& ss, const SoundnessResult& r) {
  std::string out = "colors " + join_colors(cs);
  if (!ss.empty()) out += " scalars " + join_scalars(ss);
  if (r.witness) {
    out += ": row " + to_string(r.witness->row) + " col " + to_string(r.witness->col) +
           ": lhs " + to_string(r.witness->left) + ", rhs " + to_string(r.witness->right);
  }
  return out;
}

template <typename T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

Color rewrite_at_root(const Color& c, std::mt19937_64& rng) {
  const bool sum = c.kind() == ColorKind::Plus;
  const bool prod = c.kind() == ColorKind::Tensor;
  std::vector<Color> options{pl(c, c0()), pl(c0(), c), tp(c, c1()), tp(c1(), c)};
  if (sum || prod) {
    const Color &l = c.left(), &r = c.right();
    const Color& neutral = sum ? c0() : c1();
    if (r == neutral) options.push_back(l);
    if (l == neutral) options.push_back(r);
    auto op = [sum](const Color& a, const Color& b) { return sum ? pl(a, b) : tp(a, b); };
    if (l.kind() == c.kind()) options.push_back(op(l.left(), op(l.right(), r)));
    if (r.kind() == c.kind()) options.push_back(op(op(l, r.left()), r.right()));
  }
  return options[uniform<std::size_t>(rng, 0, options.size() - 1)];
}

Color rewrite_somewhere(const Color& c, std::mt19937_64& rng) {
  const bool inner = c.kind() == ColorKind::Plus || c.kind() == ColorKind::Tensor;
  if (!inner || uniform(rng, 0, 2) == 0) return rewrite_at_root(c, rng);
  const bool go_left = uniform(rng, 0, 1) == 0;
  Color l = go_left ? rewrite_somewhere(c.left(), rng) : c.left();
  Color r = go_left ? c.right() : rewrite_somewhere(c.right(), rng);
  return c.kind() == ColorKind::Plus ? pl(l, r) : tp(l, r);
}

struct Sample {
  Cs colors;
  Ss scalars;
};

Sample sample(const AxiomSchema& s, SemiringTag tag, int depth, std::mt19937_64& rng) {
  Sample out;
  for (std::size_t i = 0; i < s.color_slots(); ++i) {
    const int src = s.equiv_to[i];
    out.colors.push_back(src < 0 ? random_color(rng, depth)
                                 : random_equivalent(out.colors[static_cast<std::size_t>(src)], rng,
                                                     uniform(rng, 0, 3)));
  }
  for (int attempt = 0;; ++attempt) {
    out.scalars.clear();
    for (std::size_t i = 0; i < s.scalar_slots; ++i) out.scalars.push_back(random_scalar(tag, rng));
    if (!s.precondition || s.precondition(out.scalars)) break;
    if (attempt == 16) {
      // s + 1 = s + 1 always holds; fall back to equal scalars.
      for (Scalar& x : out.scalars) x = out.scalars.front();
      break;
    }
  }
  return out;
}

FuzzRow run_row(const AxiomSchema& s, std::size_t schema_index, SemiringTag tag,
                const FuzzOptions& opt) {
  FuzzRow row;
  row.label = s.label;
  row.origin = s.origin;
  row.tag = tag;
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(schema_index), static_cast<std::uint32_t>(tag)};
  std::mt19937_64 rng(seq);
  for (std::size_t it = 0; it < opt.iterations; ++it) {
    Sample smp;
    std::optional<AxiomInstance> inst;
    for (int attempt = 0; !inst; ++attempt) {
      const int depth = std::max(0, opt.depth_bound - attempt / 16);
      smp = sample(s, tag, depth, rng);
      AxiomInstance candidate = instantiate(s, smp.colors, smp.scalars, tag);
      if ((dim(candidate.lhs.dom()) <= opt.max_boundary_dim &&
           dim(candidate.lhs.cod()) <= opt.max_boundary_dim) ||
          depth == 0) {
        inst = std::move(candidate);
      }
    }
    ++row.instances;
    SoundnessResult res;
    try {
      res = check_instance(*inst, tag);
    } catch (const Error& e) {
      res.pass = false;
      if (!row.first_failure) {
        row.first_failure = "colors " + join_colors(smp.colors) + ": " + e.what();
      }
    }
    if (res.pass) {
      ++row.passed;
    } else {
      ++row.failed;
      if (!row.first_failure) row.first_failure = describe_failure(smp.colors, smp.scalars, res);
    }
  }
  return row;
}

}  // namespace

const std::vector<AxiomSchema>& catalog() {
  static const std::vector<AxiomSchema> schemas = build_catalog();
  return schemas;
}

const AxiomSchema& find_schema(const std::string& label) {
  for (const AxiomSchema& s : catalog()) {
    if (s.label == label) return s;
  }
  throw UserError("no axiom schema labelled " + label);
}

AxiomInstance instantiate(const AxiomSchema& schema, const std::vector<Color>& colors,
                          const std::vector<Scalar>& scalars, SemiringTag tag) {
  if (colors.size() != schema.color_slots() || scalars.size() != schema.scalar_slots) {
    throw UserError(schema.label + " takes " + std::to_string(schema.color_slots()) +
                    " colors and " + std::to_string(schema.scalar_slots) + " scalars, got " +
                    std::to_string(colors.size()) + " and " + std::to_string(scalars.size()));
  }
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const int src = schema.equiv_to[i];
    if (src >= 0 && !color_equiv(colors[i], colors[static_cast<std::size_t>(src)])) {
      throw TypeError(schema.label + ": color " + std::to_string(i) + " must be equivalent to color " +
                      std::to_string(src));
    }
  }
  for (const Scalar& s : scalars) require_tag(s, tag);
  if (schema.precondition && !schema.precondition(scalars)) {
    throw UserError(schema.label + ": scalars " + join_scalars(scalars) +
                    " violate the precondition s + 1 = t + 1");
  }
  AxiomInstance inst = schema.build(colors, scalars, tag);
  if (inst.lhs.dom() != inst.rhs.dom() || inst.lhs.cod() != inst.rhs.cod()) {
    throw InvariantError(schema.label + ": sides have different boundaries " +
                         to_string(inst.lhs.dom()) + " -> " + to_string(inst.lhs.cod()) + " and " +
                         to_string(inst.rhs.dom()) + " -> " + to_string(inst.rhs.cod()));
  }
  return inst;
}

SoundnessResult check_instance(const AxiomInstance& inst, SemiringTag tag) {
  auto diff = compare_full(inst.lhs, inst.rhs, tag);
  if (!diff) return SoundnessResult{true, std::nullopt};
  return SoundnessResult{false, Witness{diff->row, diff->col, diff->left, diff->right}};
}

SoundnessResult check_soundness(const AxiomSchema& schema, const std::vector<Color>& colors,
                                 const std::vector<Scalar>& scalars, SemiringTag tag) {
  return check_instance(instantiate(schema, colors, scalars, tag), tag);
}

std::vector<Inequation> unit_inequations() {
  const Color& u = c1();
  D uu = P({D::unit(), D::unit()});
  return {
      {"unit | unit ; cnt vs unit", S({uu, D::contr(u)}), D::unit()},
      {"unit ; ~cnt vs unit | unit", S({D::unit(), M(D::contr(u))}), uu},
      {"~unit vs ~nil", M(D::unit()), M(D::null(u))},
      {"unit ; ~unit vs empty", S({D::unit(), M(D::unit())}), empty_diagram()},
  };
}

Color random_color(std::mt19937_64& rng, int max_depth) {
  if (max_depth <= 0 || uniform(rng, 0, 9) < 3) {
    return uniform(rng, 0, 3) == 0 ? c0() : c1();
  }
  Color l = random_color(rng, max_depth - 1);
  Color r = random_color(rng, max_depth - 1);
  return uniform(rng, 0, 1) == 0 ? pl(l, r) : tp(l, r);
}

Color random_equivalent(const Color& c, std::mt19937_64& rng, int steps) {
  Color out = c;
  for (int i = 0; i < steps; ++i) out = rewrite_somewhere(out, rng);
  return out;
}

Scalar random_scalar(SemiringTag tag, std::mt19937_64& rng) {
  const auto small = [&](long long lo, long long hi) { return uniform<long long>(rng, lo, hi); };
  switch (tag) {
    case SemiringTag::Bool:
    case SemiringTag::Nat: return from_int(tag, tag == SemiringTag::Bool ? small(0, 1) : small(0, 4));
    case SemiringTag::QNonNeg: return from_ratio(tag, small(0, 4), small(1, 3));
    case SemiringTag::Rational: return from_ratio(tag, small(-3, 3), small(1, 3));
    case SemiringTag::QI:
    case SemiringTag::QR2:
      return make_pair_scalar(tag, BigRational(BigInt(small(-3, 3)), BigInt(small(1, 3))),
                              BigRational(BigInt(small(-3, 3)), BigInt(small(1, 3))));
    case SemiringTag::Float:
      return Scalar(tag, std::uniform_real_distribution<double>(-2.0, 2.0)(rng));
  }
  throw InvariantError("unknown semiring tag");
}

std::size_t FuzzReport::failures() const {
  std::size_t n = 0;
  for (const FuzzRow& r : rows) n += r.failed;
  return n;
}

std::size_t FuzzReport::instances() const {
  std::size_t n = 0;
  for (const FuzzRow& r : rows) n += r.instances;
  return n;
}

std::string FuzzReport::to_table() const {
  std::size_t width = 5;
  for (const FuzzRow& r : rows) width = std::max(width, r.label.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width) + 2) << "label" << std::setw(13) << "group"
     << std::setw(6) << "ring" << std::right << std::setw(7) << "inst" << std::setw(7) << "pass"
     << std::setw(7) << "fail" << "\n";
  for (const FuzzRow& r : rows) {
    // Labels contain multi-byte symbols; pad by byte count so columns stay put
    // for ASCII labels and drift only slightly otherwise.
    os << std::left << std::setw(static_cast<int>(width) + 2) << r.label << std::setw(13) << r.origin
       << std::setw(6) << tag_name(r.tag) << std::right << std::setw(7) << r.instances
       << std::setw(7) << r.passed << std::setw(7) << r.failed << "\n";
    if (r.first_failure) os << "    first failure: " << *r.first_failure << "\n";
  }
  os << "total: " << instances() << " instances, " << failures() << " failures\n";
  return os.str();
}

std::string FuzzReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["iterations"] = iterations;
  j["depth_bound"] = depth_bound;
  j["instances"] = instances();
  j["failures"] = failures();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const FuzzRow& r : rows) {
    nlohmann::ordered_json o;
    o["label"] = r.label;
    o["group"] = r.origin;
    o["semiring"] = std::string(tag_name(r.tag));
    o["instances"] = r.instances;
    o["passed"] = r.passed;
    o["failed"] = r.failed;
    o["first_witness"] = r.first_failure ? nlohmann::ordered_json(*r.first_failure) : nullptr;
    arr.push_back(o);
  }
  j["schemas"] = arr;
  return j.dump(indent);
}

FuzzReport fuzz(const FuzzOptions& options) {
  FuzzReport report;
  report.seed = options.seed;
  report.iterations = options.iterations;
  report.depth_bound = options.depth_bound;
  if (options.iterations == 0) return report;

  struct Job {
    std::size_t schema;
    SemiringTag tag;
  };
  std::vector<Job> jobs;
  const auto& schemas = catalog();
  for (std::size_t i = 0; i < schemas.size(); ++i) {
    for (SemiringTag t : options.semirings) jobs.push_back({i, t});
  }
  report.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      report.rows[k] = run_row(schemas[jobs[k].schema], jobs[k].schema, jobs[k].tag, options);
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(options.threads, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return report;
}

}  // namespace tpcalc
