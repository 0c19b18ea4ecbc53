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

#include <optional>
#include <vector>

#include "tpcalc/diagram.hpp"

namespace tpcalc {

// Builds a diagram by wiring generators to named wires instead of tracking
// positions by hand. Each apply() emits a layer of swaps that brings the
// arguments next to each other (in argument order) followed by
// id | ... | g | ... | id. The output is deterministic in the call sequence.
class Circuit {
 public:
  using Wire = int;

  explicit Circuit(const Obj& inputs);

  const std::vector<Wire>& inputs() const { return inputs_; }
  const Color& color(Wire w) const { return colors_.at(static_cast<std::size_t>(w)); }
  // Live wires in their current left-to-right order.
  const std::vector<Wire>& layout() const { return layout_; }

  // Feeds `args` into g and returns the wires carrying g's outputs. When g has
  // no inputs its outputs are appended on the right.
  std::vector<Wire> apply(const Diagram& g, const std::vector<Wire>& args);
  Wire apply1(const Diagram& g, const std::vector<Wire>& args);

  // Permutes the live wires into `outputs` order and returns the diagram.
  // `outputs` must list every live wire exactly once.
  Diagram finish(const std::vector<Wire>& outputs);

 private:
  void permute_to(const std::vector<Wire>& target);
  void append(const Diagram& layer);

  Obj dom_;
  std::vector<Color> colors_;
  std::vector<Wire> inputs_;
  std::vector<Wire> layout_;
  std::optional<Diagram> body_;
};

}  // namespace tpcalc
