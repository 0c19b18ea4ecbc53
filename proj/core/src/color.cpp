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

#include <functional>
#include <limits>

#include "tpcalc/error.hpp"

namespace tpcalc {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw ShapeError("dimension overflow");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) throw ShapeError("dimension overflow");
  return a + b;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void flatten(const Color& c, ColorKind op, std::vector<Color>& out) {
  if (c.kind() == op) {
    flatten(c.left(), op, out);
    flatten(c.right(), op, out);
  } else {
    out.push_back(c);
  }
}

Color right_nest(const std::vector<Color>& items, ColorKind op) {
  Color acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) {
    acc = op == ColorKind::Plus ? Color::plus(items[i], acc) : Color::tensor(items[i], acc);
  }
  return acc;
}

}  // namespace

Color::Color() : Color(Color::zero()) {}

Color Color::zero() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::shared_ptr<Node>(new Node{ColorKind::Zero, Color(nullptr), Color(nullptr), 0, 0,
                                            std::hash<int>{}(0)});
    return std::shared_ptr<const Node>(n);
  }();
  return Color(node);
}

Color Color::one() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::shared_ptr<Node>(new Node{ColorKind::One, Color(nullptr), Color(nullptr), 1, 0,
                                            std::hash<int>{}(1)});
    return std::shared_ptr<const Node>(n);
  }();
  return Color(node);
}

Color Color::plus(const Color& a, const Color& b) {
  std::size_t h = mix(mix(std::hash<int>{}(2), a.hash()), b.hash());
  return Color(std::make_shared<const Node>(Node{ColorKind::Plus, a, b, checked_add(a.dim(), b.dim()),
                                                 1 + std::max(a.depth(), b.depth()), h}));
}

Color Color::tensor(const Color& a, const Color& b) {
  std::size_t h = mix(mix(std::hash<int>{}(3), a.hash()), b.hash());
  return Color(std::make_shared<const Node>(Node{ColorKind::Tensor, a, b, checked_mul(a.dim(), b.dim()),
                                                 1 + std::max(a.depth(), b.depth()), h}));
}

const Color& Color::left() const {
  if (kind() != ColorKind::Plus && kind() != ColorKind::Tensor) {
    throw InvariantError("left() of a constant color");
  }
  return node_->left_child;
}

const Color& Color::right() const {
  if (kind() != ColorKind::Plus && kind() != ColorKind::Tensor) {
    throw InvariantError("right() of a constant color");
  }
  return node_->right_child;
}

bool operator==(const Color& a, const Color& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.hash() != b.hash() || a.dim() != b.dim()) return false;
  if (a.kind() == ColorKind::Zero || a.kind() == ColorKind::One) return true;
  return a.left() == b.left() && a.right() == b.right();
}

bool operator<(const Color& a, const Color& b) { return to_string(a) < to_string(b); }

std::string to_string(const Color& c) {
  switch (c.kind()) {
    case ColorKind::Zero: return "0";
    case ColorKind::One: return "1";
    case ColorKind::Plus: return "(" + to_string(c.left()) + "+" + to_string(c.right()) + ")";
    case ColorKind::Tensor: return "(" + to_string(c.left()) + "*" + to_string(c.right()) + ")";
  }
  return "?";
}

std::string to_string(const Obj& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += to_string(x[i]);
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Color& c) { return os << to_string(c); }

std::vector<std::string> leaves(const Color& c) {
  switch (c.kind()) {
    case ColorKind::Zero: return {};
    case ColorKind::One: return {""};
    case ColorKind::Plus: {
      std::vector<std::string> out;
      for (const auto& l : leaves(c.left())) out.push_back("L" + l);
      for (const auto& r : leaves(c.right())) out.push_back("R" + r);
      return out;
    }
    case ColorKind::Tensor: {
      std::vector<std::string> out;
      auto rs = leaves(c.right());
      for (const auto& l : leaves(c.left())) {
        for (const auto& r : rs) out.push_back(l + r);
      }
      return out;
    }
  }
  return {};
}

std::uint64_t dim(const Color& c) { return c.dim(); }

std::uint64_t dim(const Obj& x) {
  std::uint64_t d = 0;
  for (const Color& c : x) {
    std::uint64_t b = c.dim();
    d = checked_add(checked_add(checked_mul(d, b), d), b);
  }
  return d;
}

Color canon_color(const Color& c) {
  if (c.kind() == ColorKind::Zero || c.kind() == ColorKind::One) return c;
  const ColorKind op = c.kind();
  const Color unit = op == ColorKind::Plus ? Color::zero() : Color::one();
  std::vector<Color> parts;
  flatten(canon_color(c.left()), op, parts);
  flatten(canon_color(c.right()), op, parts);
  std::vector<Color> kept;
  for (const Color& p : parts) {
    if (p != unit) kept.push_back(p);
  }
  if (kept.empty()) return unit;
  return right_nest(kept, op);
}

bool color_equiv(const Color& a, const Color& b) { return canon_color(a) == canon_color(b); }

Color tensor_fold(const std::vector<Color>& colors) {
  if (colors.empty()) return Color::one();
  Color acc = colors.front();
  for (std::size_t i = 1; i < colors.size(); ++i) acc = Color::tensor(acc, colors[i]);
  return acc;
}

Color plus_fold(const std::vector<Color>& colors) {
  if (colors.empty()) return Color::zero();
  Color acc = colors.front();
  for (std::size_t i = 1; i < colors.size(); ++i) acc = Color::plus(acc, colors[i]);
  return acc;
}

bool is_empty_name(const BasisName& name) {
  for (auto v : name) {
    if (v != kUnselected) return false;
  }
  return true;
}

std::string to_string(const BasisName& name) {
  if (is_empty_name(name)) return "∅";
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == kUnselected) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(i + 1) + ":" + std::to_string(name[i]);
  }
  return out + "}";
}

std::vector<BasisName> enumerate(const Obj& x) {
  std::vector<BasisName> names;
  for (std::size_t w = 0; w < x.size(); ++w) {
    const auto db = static_cast<std::int32_t>(x[w].dim());
    std::vector<BasisName> next;
    next.reserve(names.size() * (db + 1) + db);
    for (const BasisName& p : names) {
      for (std::int32_t l = 0; l < db; ++l) {
        BasisName n = p;
        n.push_back(l);
        next.push_back(std::move(n));
      }
    }
    for (const BasisName& p : names) {
      BasisName n = p;
      n.push_back(kUnselected);
      next.push_back(std::move(n));
    }
    for (std::int32_t l = 0; l < db; ++l) {
      BasisName n(w, kUnselected);
      n.push_back(l);
      next.push_back(std::move(n));
    }
    names = std::move(next);
  }
  return names;
}

std::vector<BasisName> enumerate_full(const Obj& x) {
  auto names = enumerate(x);
  names.emplace_back(x.size(), kUnselected);
  return names;
}

std::uint64_t index_of(const Obj& x, const BasisName& name, bool full) {
  if (name.size() != x.size()) throw ShapeError("basis name has the wrong number of wires");
  if (is_empty_name(name)) {
    if (!full) throw ShapeError("empty basis name outside the full enumeration");
    return dim(x);
  }
  // Walk the prefix recurrence; `idx` is the index of the name restricted to
  // wires [0, w), valid only when that restriction is nonempty.
  std::uint64_t idx = 0;
  std::uint64_t dprefix = 0;
  bool any = false;
  for (std::size_t w = 0; w < x.size(); ++w) {
    const std::uint64_t db = x[w].dim();
    const std::int32_t l = name[w];
    if (l != kUnselected && static_cast<std::uint64_t>(l) >= db) {
      throw ShapeError("leaf index out of range in basis name");
    }
    if (l != kUnselected && any) {
      idx = idx * db + static_cast<std::uint64_t>(l);
    } else if (l != kUnselected) {
      idx = dprefix * db + dprefix + static_cast<std::uint64_t>(l);
    } else if (any) {
      idx = dprefix * db + idx;
    }
    any = any || l != kUnselected;
    dprefix = dprefix * db + dprefix + db;
  }
  return idx;
}

BasisName name_at(const Obj& x, std::uint64_t index, bool full) {
  const std::uint64_t d = dim(x);
  if (index > d || (index == d && !full)) throw ShapeError("basis index out of range");
  BasisName name(x.size(), kUnselected);
  if (index == d) return name;
  // Prefix dimensions d_w = dim(x[0..w)).
  std::vector<std::uint64_t> dp(x.size() + 1, 0);
  for (std::size_t w = 0; w < x.size(); ++w) {
    dp[w + 1] = dp[w] * x[w].dim() + dp[w] + x[w].dim();
  }
  std::uint64_t idx = index;
  for (std::size_t w = x.size(); w-- > 0;) {
    const std::uint64_t db = x[w].dim();
    const std::uint64_t dx = dp[w];
    if (idx < dx * db) {
      name[w] = static_cast<std::int32_t>(idx % db);
      idx /= db;
    } else if (idx < dx * db + dx) {
      idx -= dx * db;
    } else {
      name[w] = static_cast<std::int32_t>(idx - dx * db - dx);
      break;
    }
  }
  return name;
}

std::vector<std::uint64_t> regroup_perm(const Obj& left, const Obj& right, EnumMode mode) {
  Obj both = left;
  both.insert(both.end(), right.begin(), right.end());
  const bool full = mode == EnumMode::Full;
  auto ln = full ? enumerate_full(left) : enumerate(left);
  auto rn = full ? enumerate_full(right) : enumerate(right);
  auto join = [&](const BasisName& a, const BasisName& b) {
    BasisName n = a;
    n.insert(n.end(), b.begin(), b.end());
    return index_of(both, n, full);
  };
  std::vector<std::uint64_t> perm;
  perm.reserve(ln.size() * rn.size() + ln.size() + rn.size());
  for (const auto& a : ln) {
    for (const auto& b : rn) perm.push_back(join(a, b));
  }
  if (!full) {
    const BasisName none_r(right.size(), kUnselected);
    const BasisName none_l(left.size(), kUnselected);
    for (const auto& a : ln) perm.push_back(join(a, none_r));
    for (const auto& b : rn) perm.push_back(join(none_l, b));
  }
  return perm;
}

}  // namespace tpcalc
