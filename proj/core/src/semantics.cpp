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

#include <algorithm>
#include <unordered_map>

#include <boost/container/small_vector.hpp>

#include "tpcalc/error.hpp"

namespace tpcalc {

namespace {

struct NameHash {
  std::size_t operator()(const BasisName& n) const {
    std::size_t h = n.size();
    for (auto v : n) h = h * 1000003u ^ static_cast<std::size_t>(v + 1);
    return h;
  }
};

// Most generators produce one or two terms; keep those inline.
using Terms = boost::container::small_vector<std::pair<BasisName, Scalar>, 2>;

using Accumulator = std::unordered_map<BasisName, Scalar, NameHash>;

// Propagates basis names through a diagram. Every generator acts directly on
// names; mirrored generators act by the transposed rule.
class Engine {
 public:
  explicit Engine(SemiringTag tag) : tag_(tag), one_(one(tag)) {}

  Terms run(const Diagram& d, const BasisName& in) {
    // A composite with no inputs is a fixed state; evaluate it once.
    if (d.dom().empty() && (d.kind() == DiagramKind::Seq || d.kind() == DiagramKind::Par)) {
      auto it = states_.find(d.identity());
      if (it != states_.end()) return it->second;
      Terms v = d.kind() == DiagramKind::Seq ? run_seq(d, in) : run_par(d, in);
      states_.emplace(d.identity(), v);
      return v;
    }
    switch (d.kind()) {
      case DiagramKind::Seq: return run_seq(d, in);
      case DiagramKind::Par: return run_par(d, in);
      case DiagramKind::Mirror: return run_mirrored(d.inner(), in);
      default: return run_generator(d, in);
    }
  }

 private:
  // Factors of a Seq or Par chain, left to right. Nested parallel states stay
  // whole so that they hit the state cache.
  const std::vector<const Diagram*>& flatten(const Diagram& d) {
    auto [it, fresh] = factors_.try_emplace(d.identity());
    if (!fresh) return it->second;
    std::vector<const Diagram*> stack{&d};
    while (!stack.empty()) {
      const Diagram* top = stack.back();
      stack.pop_back();
      const bool split = top->kind() == d.kind() &&
                         (top == &d || d.kind() == DiagramKind::Seq || !top->dom().empty());
      if (split) {
        stack.push_back(&top->second());
        stack.push_back(&top->first());
      } else {
        it->second.push_back(top);
      }
    }
    return it->second;
  }

  static bool passes_names(const Diagram& g) {
    return g.kind() == DiagramKind::Id || g.kind() == DiagramKind::Adapt;
  }

  Terms single(BasisName n) const { return {{std::move(n), one_}}; }

  Terms run_seq(const Diagram& d, const BasisName& in) {
    const std::vector<const Diagram*>& factors = flatten(d);
    Terms cur = single(in);
    for (const Diagram* f : factors) {
      if (cur.empty()) break;
      if (passes_names(*f)) continue;
      if (cur.size() == 1 && cur.front().second.is_one()) {
        cur = run(*f, cur.front().first);
        continue;
      }
      Accumulator acc;
      for (const auto& [name, s] : cur) {
        for (auto& [out, t] : run(*f, name)) {
          Scalar w = mul(s, t);
          auto it = acc.find(out);
          if (it == acc.end()) {
            acc.emplace(std::move(out), std::move(w));
          } else {
            it->second = add(it->second, w);
          }
        }
      }
      cur.clear();
      for (auto& [name, s] : acc) {
        if (!s.is_zero()) cur.emplace_back(name, std::move(s));
      }
    }
    return cur;
  }

  Terms run_par(const Diagram& d, const BasisName& in) {
    const std::vector<const Diagram*>& factors = flatten(d);
    Terms acc;
    acc.emplace_back(BasisName{}, one_);
    acc.front().first.reserve(d.cod().size());
    std::size_t offset = 0;
    for (const Diagram* f : factors) {
      const std::size_t k = f->dom().size();
      if (passes_names(*f)) {
        for (auto& entry : acc) {
          entry.first.insert(entry.first.end(), in.begin() + static_cast<long>(offset),
                             in.begin() + static_cast<long>(offset + k));
        }
        offset += k;
        continue;
      }
      Terms v = run(*f, BasisName(in.begin() + static_cast<long>(offset),
                                      in.begin() + static_cast<long>(offset + k)));
      offset += k;
      if (v.empty()) return {};
      if (v.size() == 1 && v.front().second.is_one()) {
        const BasisName& n = v.front().first;
        for (auto& entry : acc) entry.first.insert(entry.first.end(), n.begin(), n.end());
        continue;
      }
      Terms next;
      next.reserve(acc.size() * v.size());
      for (const auto& [na, sa] : acc) {
        for (const auto& [nb, sb] : v) {
          Scalar w = mul(sa, sb);
          if (w.is_zero()) continue;
          BasisName n;
          n.reserve(d.cod().size());
          n.insert(n.end(), na.begin(), na.end());
          n.insert(n.end(), nb.begin(), nb.end());
          next.emplace_back(std::move(n), std::move(w));
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

  Terms run_generator(const Diagram& g, const BasisName& in) {
    const bool empty = is_empty_name(in);
    switch (g.kind()) {
      case DiagramKind::Id:
      case DiagramKind::Adapt: return single(in);
      case DiagramKind::Swap: return single({in[1], in[0]});
      case DiagramKind::Scal:
        if (empty) return single(in);
        if (g.scalar().is_zero()) return {};
        return {{in, g.scalar()}};
      case DiagramKind::Ten: {
        if (empty) return single({kUnselected});
        if (in[0] == kUnselected || in[1] == kUnselected) return {};
        const auto db = static_cast<std::int32_t>(g.b().dim());
        return single({in[0] * db + in[1]});
      }
      case DiagramKind::Plus: {
        if (empty) return single({kUnselected});
        if (in[0] != kUnselected && in[1] != kUnselected) return {};
        if (in[0] != kUnselected) return single({in[0]});
        return single({static_cast<std::int32_t>(g.a().dim()) + in[1]});
      }
      case DiagramKind::Contr: {
        if (empty) return single({kUnselected});
        if (in[0] != kUnselected && in[1] != kUnselected) return {};
        return single({in[0] != kUnselected ? in[0] : in[1]});
      }
      case DiagramKind::Null: return single({kUnselected});
      case DiagramKind::Unit: return {{BasisName{0}, one_}, {BasisName{kUnselected}, one_}};
      default: break;
    }
    throw InvariantError("run_generator on a composite node");
  }

  Terms run_mirrored(const Diagram& g, const BasisName& in) {
    const bool empty = is_empty_name(in);
    switch (g.kind()) {
      case DiagramKind::Ten: {
        if (empty) return single({kUnselected, kUnselected});
        const auto db = static_cast<std::int32_t>(g.b().dim());
        return single({in[0] / db, in[0] % db});
      }
      case DiagramKind::Plus: {
        if (empty) return single({kUnselected, kUnselected});
        const auto da = static_cast<std::int32_t>(g.a().dim());
        if (in[0] < da) return single({in[0], kUnselected});
        return single({kUnselected, in[0] - da});
      }
      case DiagramKind::Contr:
        if (empty) return single({kUnselected, kUnselected});
        return {{BasisName{in[0], kUnselected}, one_}, {BasisName{kUnselected, in[0]}, one_}};
      case DiagramKind::Null:
        if (empty) return single({});
        return {};
      case DiagramKind::Unit: return single({});
      default: break;
    }
    throw InvariantError("mirror node around a self-mirrored generator");
  }

  SemiringTag tag_;
  Scalar one_;
  std::unordered_map<const void*, Terms> states_;
  std::unordered_map<const void*, std::vector<const Diagram*>> factors_;
};

void check_tag(const Diagram& d, SemiringTag tag) {
  if (d.tag() && *d.tag() != tag) {
    throw TagMismatchError("diagram scalars are in " + std::string(tag_name(*d.tag())) +
                           ", evaluation requested in " + std::string(tag_name(tag)));
  }
}

void check_size(std::uint64_t rows, std::uint64_t cols) {
  if (cols != 0 && rows > kMaxDenseEntries / cols) {
    throw ShapeError("semantics matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " is too large to materialize");
  }
}

}  // namespace

SparseVec apply(const Diagram& d, const BasisName& input, SemiringTag tag) {
  check_tag(d, tag);
  if (input.size() != d.dom().size()) throw ShapeError("basis name does not match the domain");
  Engine engine(tag);
  Terms v = engine.run(d, input);
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  for (std::size_t i = 0; i < v.size(); ++i) order.emplace_back(index_of(d.cod(), v[i].first, true), i);
  std::sort(order.begin(), order.end());
  SparseVec sorted;
  sorted.reserve(v.size());
  for (auto [idx, i] : order) sorted.push_back(std::move(v[i]));
  return sorted;
}

SemMatrix eval_full(const Diagram& d, SemiringTag tag) {
  check_tag(d, tag);
  const std::uint64_t rows = dim(d.cod()) + 1;
  const std::uint64_t cols = dim(d.dom()) + 1;
  check_size(rows, cols);
  SemMatrix m(tag, rows, cols);
  m.dom = d.dom();
  m.cod = d.cod();
  m.full = true;
  Engine engine(tag);
  for (std::uint64_t j = 0; j < cols; ++j) {
    for (auto& [name, s] : engine.run(d, name_at(d.dom(), j, true))) {
      Scalar& cell = m.at(index_of(d.cod(), name, true), j);
      cell = add(cell, s);
    }
  }
  return m;
}

SemMatrix eval(const Diagram& d, SemiringTag tag) {
  check_tag(d, tag);
  if (!d.is_functional()) {
    throw UserError("functional semantics requested for a diagram that uses unit");
  }
  const std::uint64_t rows = dim(d.cod());
  const std::uint64_t cols = dim(d.dom());
  check_size(rows, cols);
  SemMatrix m(tag, rows, cols);
  m.dom = d.dom();
  m.cod = d.cod();
  Engine engine(tag);
  const Terms nothing = engine.run(d, BasisName(d.dom().size(), kUnselected));
  if (nothing.size() != 1 || !is_empty_name(nothing.front().first) ||
      !nothing.front().second.is_one()) {
    throw InvariantError("functional diagram does not send the empty name to itself");
  }
  for (std::uint64_t j = 0; j < cols; ++j) {
    for (auto& [name, s] : engine.run(d, name_at(d.dom(), j, false))) {
      if (is_empty_name(name)) throw InvariantError("functional diagram reached the empty name");
      Scalar& cell = m.at(index_of(d.cod(), name, false), j);
      cell = add(cell, s);
    }
  }
  return m;
}

SemMatrix gen_matrix_full(const Diagram& g, SemiringTag tag) {
  if (!g.is_generator()) throw UserError("gen_matrix_full expects a single generator");
  return eval_full(g, tag);
}

std::optional<SemanticDiff> compare_full(const Diagram& d, const Diagram& e, SemiringTag tag) {
  check_tag(d, tag);
  check_tag(e, tag);
  if (d.dom() != e.dom() || d.cod() != e.cod()) {
    throw TypeError("comparing diagrams with different boundaries: " + to_string(d.dom()) +
                    " -> " + to_string(d.cod()) + " vs " + to_string(e.dom()) + " -> " +
                    to_string(e.cod()));
  }
  Engine engine(tag);
  const std::uint64_t cols = dim(d.dom()) + 1;
  for (std::uint64_t j = 0; j < cols; ++j) {
    BasisName col = name_at(d.dom(), j, true);
    std::unordered_map<BasisName, std::pair<Scalar, Scalar>, NameHash> cells;
    for (auto& [name, s] : engine.run(d, col)) {
      auto& cell = cells.try_emplace(name, zero(tag), zero(tag)).first->second;
      cell.first = add(cell.first, s);
    }
    for (auto& [name, s] : engine.run(e, col)) {
      auto& cell = cells.try_emplace(name, zero(tag), zero(tag)).first->second;
      cell.second = add(cell.second, s);
    }
    std::optional<std::pair<std::uint64_t, SemanticDiff>> best;
    for (auto& [name, cell] : cells) {
      if (cell.first == cell.second) continue;
      std::uint64_t row = index_of(d.cod(), name, true);
      if (!best || row < best->first) best.emplace(row, SemanticDiff{name, col, cell.first, cell.second});
    }
    if (best) return best->second;
  }
  return std::nullopt;
}

}  // namespace tpcalc
