#pragma once

// Text form of trees and forests.
//
//   tree   := DEC | DEC '[' edge (',' edge)* ']'
//   edge   := TYPE ':' tree
//   forest := '1' | tree (' ' tree)*
//
// Parsing accepts children in any order and canonicalizes; rendering always
// emits canonical order with no whitespace except between forest factors.
// How decorations and types are spelled is delegated to a syntax policy so the
// same grammar serves named alphabets, integer-labeled operad trees and
// forests decorated by trees.

#include "typedtrees/alphabet.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace typedtrees {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  std::size_t position() const { return pos_; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void skip_spaces() {
    while (!eof() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    const std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string shown = at >= text_.size() ? "end of input" : std::string("'") + text_[at] + "'";
    throw ParseError(msg + " at " + shown, line, column);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Decorations and types spelled by alphabet names.
struct NamedSyntax {
  using dec_type = DecId;
  const Alphabets* alphabets;

  DecId parse_dec(Cursor& in) const {
    const std::size_t at = in.position();
    const std::string name = in.identifier();
    if (auto d = alphabets->decorations.find(name)) return *d;
    unknown(in, at, "decoration", name);
  }
  std::string dec_name(DecId d) const { return alphabets->decorations.name(d); }
  TypeId parse_type(Cursor& in) const {
    const std::size_t at = in.position();
    const std::string name = in.identifier();
    if (auto t = alphabets->types.find(name)) return *t;
    unknown(in, at, "type", name);
  }
  std::string type_name(TypeId t) const { return alphabets->types.name(t); }

  [[noreturn]] static void unknown(const Cursor& in, std::size_t at, const char* what, const std::string& name) {
    try {
      in.fail_at(at, std::string("unknown ") + what + " '" + name + "'");
    } catch (const ParseError& e) {
      throw AlphabetError(e.what());
    }
  }
};

template <class Syntax>
BasicTree<typename Syntax::dec_type> parse_tree(Cursor& in, const Syntax& syntax) {
  BasicTree<typename Syntax::dec_type> t(syntax.parse_dec(in));
  if (in.accept('[')) {
    do {
      in.skip_spaces();
      const TypeId type = syntax.parse_type(in);
      in.expect(':');
      t.children.push_back({type, parse_tree(in, syntax)});
      in.skip_spaces();
    } while (in.accept(','));
    in.expect(']');
  }
  sort_children(t);
  return t;
}

template <class Syntax>
BasicTree<typename Syntax::dec_type> parse_tree(std::string_view text, const Syntax& syntax) {
  Cursor in(text);
  auto t = parse_tree(in, syntax);
  if (!in.eof()) in.fail("trailing input");
  return t;
}

template <class Syntax>
BasicForest<typename Syntax::dec_type> parse_forest(std::string_view text, const Syntax& syntax) {
  if (text == "1") return {};
  Cursor in(text);
  std::vector<BasicTree<typename Syntax::dec_type>> trees;
  do {
    trees.push_back(parse_tree(in, syntax));
  } while (in.accept(' '));
  if (!in.eof()) in.fail("trailing input");
  return BasicForest<typename Syntax::dec_type>(std::move(trees));
}

template <class Syntax>
void render_to(std::string& out, const BasicTree<typename Syntax::dec_type>& t, const Syntax& syntax) {
  out += syntax.dec_name(t.dec);
  if (t.children.empty()) return;
  out += '[';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ',';
    out += syntax.type_name(t.children[i].type);
    out += ':';
    render_to(out, t.children[i].tree, syntax);
  }
  out += ']';
}

template <class Syntax>
std::string render(const BasicTree<typename Syntax::dec_type>& t, const Syntax& syntax) {
  std::string out;
  render_to(out, t, syntax);
  return out;
}

template <class Syntax>
std::string render(const BasicForest<typename Syntax::dec_type>& f, const Syntax& syntax) {
  if (f.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ' ';
    render_to(out, f.trees[i], syntax);
  }
  return out;
}

}  // namespace typedtrees
