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

#include "tpcalc/circuit.hpp"

#include <algorithm>
#include <unordered_map>

#include "tpcalc/error.hpp"

namespace tpcalc {

Circuit::Circuit(const Obj& inputs) : dom_(inputs), colors_(inputs) {
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    inputs_.push_back(static_cast<Wire>(i));
    layout_.push_back(static_cast<Wire>(i));
  }
}

void Circuit::append(const Diagram& layer) {
  body_ = body_ ? seq(*body_, layer) : layer;
}

void Circuit::permute_to(const std::vector<Wire>& target) {
  std::unordered_map<Wire, std::size_t> rank;
  for (std::size_t i = 0; i < target.size(); ++i) rank[target[i]] = i;
  std::vector<Wire> cur = layout_;
  // Odd-even transposition sort; every pass with a swap becomes one layer.
  bool sorted = std::is_sorted(cur.begin(), cur.end(),
                               [&](Wire a, Wire b) { return rank.at(a) < rank.at(b); });
  for (std::size_t pass = 0; !sorted; ++pass) {
    std::vector<Diagram> pieces;
    bool any = false;
    std::size_t i = 0;
    if (pass % 2 == 1 && !cur.empty()) {
      pieces.push_back(Diagram::id(color(cur[0])));
      i = 1;
    }
    while (i < cur.size()) {
      if (i + 1 < cur.size() && rank.at(cur[i]) > rank.at(cur[i + 1])) {
        pieces.push_back(Diagram::swap(color(cur[i]), color(cur[i + 1])));
        std::swap(cur[i], cur[i + 1]);
        any = true;
        i += 2;
      } else if (i + 1 < cur.size()) {
        pieces.push_back(Diagram::id(color(cur[i])));
        pieces.push_back(Diagram::id(color(cur[i + 1])));
        i += 2;
      } else {
        pieces.push_back(Diagram::id(color(cur[i])));
        i += 1;
      }
    }
    if (any) append(par_all(pieces));
    sorted = std::is_sorted(cur.begin(), cur.end(),
                            [&](Wire a, Wire b) { return rank.at(a) < rank.at(b); });
  }
  layout_ = std::move(cur);
}

std::vector<Circuit::Wire> Circuit::apply(const Diagram& g, const std::vector<Wire>& args) {
  if (args.size() != g.dom().size()) {
    throw TypeError("circuit: generator expects " + std::to_string(g.dom().size()) +
                    " wires, got " + std::to_string(args.size()));
  }
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < args.size(); ++k) {
    auto it = std::find(layout_.begin(), layout_.end(), args[k]);
    if (it == layout_.end()) throw TypeError("circuit: wire is not live");
    if (std::count(args.begin(), args.end(), args[k]) != 1) {
      throw TypeError("circuit: wire used twice in one application");
    }
    if (color(args[k]) != g.dom()[k]) {
      throw TypeError("circuit: wire color " + to_string(color(args[k])) + " does not match " +
                      to_string(g.dom()[k]));
    }
    pos.push_back(static_cast<std::size_t>(it - layout_.begin()));
  }

  std::size_t start = layout_.size();
  if (!args.empty()) {
    const std::size_t first = *std::min_element(pos.begin(), pos.end());
    std::vector<Wire> target(layout_.begin(), layout_.begin() + static_cast<long>(first));
    start = target.size();
    target.insert(target.end(), args.begin(), args.end());
    for (std::size_t i = first; i < layout_.size(); ++i) {
      if (std::find(args.begin(), args.end(), layout_[i]) == args.end()) target.push_back(layout_[i]);
    }
    permute_to(target);
  }

  std::vector<Diagram> pieces;
  for (std::size_t i = 0; i < start; ++i) pieces.push_back(Diagram::id(color(layout_[i])));
  pieces.push_back(g);
  for (std::size_t i = start + args.size(); i < layout_.size(); ++i) {
    pieces.push_back(Diagram::id(color(layout_[i])));
  }
  append(par_all(pieces));

  std::vector<Wire> outs;
  for (const Color& c : g.cod()) {
    outs.push_back(static_cast<Wire>(colors_.size()));
    colors_.push_back(c);
  }
  std::vector<Wire> next(layout_.begin(), layout_.begin() + static_cast<long>(start));
  next.insert(next.end(), outs.begin(), outs.end());
  next.insert(next.end(), layout_.begin() + static_cast<long>(start + args.size()), layout_.end());
  layout_ = std::move(next);
  return outs;
}

Circuit::Wire Circuit::apply1(const Diagram& g, const std::vector<Wire>& args) {
  auto outs = apply(g, args);
  if (outs.size() != 1) throw TypeError("circuit: apply1 needs a single-output generator");
  return outs.front();
}

Diagram Circuit::finish(const std::vector<Wire>& outputs) {
  std::vector<Wire> a = outputs;
  std::vector<Wire> b = layout_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw TypeError("circuit: outputs must list every live wire exactly once");
  permute_to(outputs);
  if (!body_) return identity(dom_);
  return *body_;
}

}  // namespace tpcalc
