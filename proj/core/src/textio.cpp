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

#include "tpcalc/textio.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "tpcalc/error.hpp"

namespace tpcalc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::optional<SemiringTag> tag) : text_(text), tag_(tag) {}

  Color color() {
    skip();
    const std::size_t start = pos_;
    if (eat('0')) return Color::zero();
    if (eat('1')) return Color::one();
    if (!eat('(')) fail("expected a color", start);
    Color a = color();
    skip();
    char op = peek();
    if (op != '+' && op != '*') fail("expected '+' or '*' in color", pos_);
    ++pos_;
    Color b = color();
    expect(')');
    return op == '+' ? Color::plus(a, b) : Color::tensor(a, b);
  }

  Obj obj() {
    expect('[');
    Obj x;
    skip();
    if (eat(']')) return x;
    x.push_back(color());
    while (true) {
      skip();
      if (eat(']')) return x;
      expect(',');
      x.push_back(color());
    }
  }

  Diagram diagram() {
    const std::size_t start = (skip(), pos_);
    Diagram d = par_expr();
    while (true) {
      skip();
      if (!eat(';')) return d;
      Diagram e = par_expr();
      d = typed([&] { return seq(d, e); }, start);
    }
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
  }

 private:
  Diagram par_expr() {
    Diagram d = unary();
    while (true) {
      skip();
      if (!eat('|')) return d;
      d = par(d, unary());
    }
  }

  Diagram unary() {
    skip();
    std::size_t mirrors = 0;
    while (eat('~')) {
      ++mirrors;
      skip();
    }
    Diagram d = [&] {
      if (eat('(')) {
        Diagram inner = diagram();
        expect(')');
        return inner;
      }
      return generator();
    }();
    for (std::size_t i = 0; i < mirrors; ++i) d = mirror(d);
    return d;
  }

  Diagram generator() {
    skip();
    const std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      word.push_back(text_[pos_++]);
    }
    if (word.empty()) fail("expected a generator or '('", start);
    if (word == "unit") return Diagram::unit();
    expect('<');
    Diagram d = [&]() -> Diagram {
      if (word == "id") return Diagram::id(color());
      if (word == "cnt") return Diagram::contr(color());
      if (word == "nil") return Diagram::null(color());
      if (word == "scl") {
        Scalar s = scalar();
        Color a = color();
        return Diagram::scal(s, a);
      }
      if (word == "swap" || word == "ten" || word == "plus" || word == "adp") {
        Color a = color();
        expect(',');
        Color b = color();
        if (word == "swap") return Diagram::swap(a, b);
        if (word == "ten") return Diagram::ten(a, b);
        if (word == "plus") return Diagram::plus(a, b);
        return typed([&] { return Diagram::adapt(a, b); }, start);
      }
      fail("unknown generator '" + word + "'", start);
    }();
    expect('>');
    return d;
  }

  Scalar scalar() {
    const std::size_t start = pos_;
    const std::size_t semi = text_.find(';', pos_);
    if (semi == std::string_view::npos) fail("expected ';' after scalar literal", start);
    std::string_view lit = text_.substr(pos_, semi - pos_);
    pos_ = semi + 1;
    if (!tag_) fail("scalar literal needs a semiring", start);
    try {
      return parse_scalar(*tag_, lit);
    } catch (const UserError& e) {
      throw ParseError(e.what(), {start, semi});
    }
  }

  template <typename F>
  Diagram typed(F build, std::size_t start) {
    try {
      return build();
    } catch (const TypeError& e) {
      throw TypeError(std::string(e.what()) + " at bytes " + std::to_string(start) + ".." +
                      std::to_string(pos_));
    }
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    skip();
    if (!eat(c)) fail(std::string("expected '") + c + "'", pos_);
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t start) const {
    throw ParseError(msg, {start, std::min(text_.size(), std::max(start, pos_) + 1)});
  }

  std::string_view text_;
  std::optional<SemiringTag> tag_;
  std::size_t pos_ = 0;
};

enum class Ctx { Top, SeqLeft, SeqRight, ParLeft, ParRight };

void print_into(const Diagram& d, Ctx ctx, std::string& out, bool multiline) {
  switch (d.kind()) {
    case DiagramKind::Seq: {
      const bool parens = ctx != Ctx::Top && ctx != Ctx::SeqLeft;
      if (parens) out += "(";
      print_into(d.first(), Ctx::SeqLeft, out, multiline && !parens);
      out += (multiline && !parens) ? " ;\n" : " ; ";
      print_into(d.second(), Ctx::SeqRight, out, false);
      if (parens) out += ")";
      return;
    }
    case DiagramKind::Par: {
      const bool parens = ctx == Ctx::ParRight;
      if (parens) out += "(";
      print_into(d.first(), Ctx::ParLeft, out, false);
      out += " | ";
      print_into(d.second(), Ctx::ParRight, out, false);
      if (parens) out += ")";
      return;
    }
    case DiagramKind::Mirror:
      out += "~";
      print_into(d.inner(), Ctx::ParRight, out, false);
      return;
    case DiagramKind::Unit: out += "unit"; return;
    case DiagramKind::Id:
    case DiagramKind::Contr:
    case DiagramKind::Null:
      out += std::string(kind_name(d.kind())) + "<" + to_string(d.a()) + ">";
      return;
    case DiagramKind::Swap:
    case DiagramKind::Ten:
    case DiagramKind::Plus:
    case DiagramKind::Adapt:
      out += std::string(kind_name(d.kind())) + "<" + to_string(d.a()) + "," + to_string(d.b()) + ">";
      return;
    case DiagramKind::Scal:
      out += "scl<" + to_string(d.scalar()) + ";" + to_string(d.a()) + ">";
      return;
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

class DotWriter {
 public:
  struct End {
    std::string node;
    Color color;
  };

  std::string run(const Diagram& d) {
    os_ << "digraph tpc {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
    std::vector<End> ins;
    for (std::size_t i = 0; i < d.dom().size(); ++i) {
      std::string n = "in" + std::to_string(i);
      os_ << "  " << n << " [shape=plaintext, label=\"in" << i << "\"];\n";
      ins.push_back({n, d.dom()[i]});
    }
    auto outs = emit(d, ins);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      std::string n = "out" + std::to_string(i);
      os_ << "  " << n << " [shape=plaintext, label=\"out" << i << "\"];\n";
      edge(outs[i], n);
    }
    os_ << "}\n";
    return os_.str();
  }

 private:
  void edge(const End& from, const std::string& to) {
    os_ << "  " << from.node << " -> " << to << " [label=\"" << dot_escape(to_string(from.color))
        << "\"];\n";
  }

  std::vector<End> emit(const Diagram& d, const std::vector<End>& ins) {
    switch (d.kind()) {
      case DiagramKind::Id: return ins;
      case DiagramKind::Seq: return emit(d.second(), emit(d.first(), ins));
      case DiagramKind::Par: {
        const std::size_t k = d.first().dom().size();
        std::vector<End> left(ins.begin(), ins.begin() + static_cast<long>(k));
        std::vector<End> right(ins.begin() + static_cast<long>(k), ins.end());
        auto a = emit(d.first(), left);
        auto b = emit(d.second(), right);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }
      default: break;
    }
    std::string label;
    if (d.kind() == DiagramKind::Mirror) {
      label = "~" + std::string(kind_name(d.inner().kind()));
    } else if (d.kind() == DiagramKind::Scal) {
      label = "scl " + to_string(d.scalar());
    } else {
      label = std::string(kind_name(d.kind()));
    }
    std::string n = "g" + std::to_string(next_++);
    os_ << "  " << n << " [label=\"" << dot_escape(label) << "\"];\n";
    for (const End& e : ins) edge(e, n);
    std::vector<End> outs;
    for (const Color& c : d.cod()) outs.push_back({n, c});
    return outs;
  }

  std::ostringstream os_;
  int next_ = 0;
};

}  // namespace

Color parse_color(std::string_view text) {
  Parser p(text, std::nullopt);
  Color c = p.color();
  p.finish();
  return c;
}

Obj parse_obj(std::string_view text) {
  Parser p(text, std::nullopt);
  Obj x = p.obj();
  p.finish();
  return x;
}

Diagram parse_diagram(std::string_view text, SemiringTag tag) {
  Parser p(text, tag);
  Diagram d = p.diagram();
  p.finish();
  return d;
}

std::string print_color(const Color& c) { return to_string(c); }
std::string print_obj(const Obj& x) { return to_string(x); }

std::string print_diagram(const Diagram& d, bool multiline) {
  std::string out;
  print_into(d, Ctx::Top, out, multiline);
  return out;
}

std::string export_dot(const Diagram& d) { return DotWriter().run(d); }

std::string matrix_to_json(const SemMatrix& m, int indent) {
  nlohmann::ordered_json j;
  j["semiring"] = std::string(tag_name(m.tag));
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(to_string(m.at(r, c)));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j.dump(indent);
}

SemMatrix matrix_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UserError(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("semiring") || !j.contains("entries")) {
    throw UserError("matrix JSON needs \"semiring\" and \"entries\"");
  }
  auto tag = tag_from_name(j["semiring"].get<std::string>());
  if (!tag) throw UserError("matrix JSON: unknown semiring '" + j["semiring"].get<std::string>() + "'");
  const auto& entries = j["entries"];
  if (!entries.is_array()) throw UserError("matrix JSON: entries must be an array of rows");
  const std::size_t rows = j.value("rows", entries.size());
  std::size_t cols = j.contains("cols") ? j["cols"].get<std::size_t>()
                                        : (entries.empty() ? 0 : entries[0].size());
  if (rows != entries.size()) throw ShapeError("matrix JSON: rows does not match entries");
  SemMatrix m(*tag, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) {
      throw ShapeError("matrix JSON: row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& v = entries[r][c];
      std::string lit = v.is_string() ? v.get<std::string>() : v.dump();
      m.at(r, c) = parse_scalar(*tag, lit);
    }
  }
  return m;
}

}  // namespace tpcalc
