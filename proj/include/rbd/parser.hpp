#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rbd/diagram.hpp"

namespace rbd {

// Grammar:
//   expr   := term (('+' | '|') term)*
//   term   := factor (('*' | '&') factor)*
//   factor := '~' factor | '(' expr ')' | 'A' digits | '1' | '0'
// Infix operators are left-associative, whitespace is insignificant.
// '&' and '|' are input aliases; render() emits only '*' and '+'.

enum class ParseErrorKind {
  unexpected_token,
  unbalanced_parenthesis,
  bad_component_index,
  empty_input,
  trailing_input,
};

inline const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::unexpected_token: return "unexpected-token";
    case ParseErrorKind::unbalanced_parenthesis: return "unbalanced-parenthesis";
    case ParseErrorKind::bad_component_index: return "bad-component-index";
    case ParseErrorKind::empty_input: return "empty-input";
    case ParseErrorKind::trailing_input: return "trailing-input";
  }
  return "?";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position)
      : std::runtime_error(std::string("parse error (") + to_string(kind) + ") at offset " +
                           std::to_string(position)),
        kind_(kind),
        position_(position) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) {}

  Diagram run() {
    skip_ws();
    if (at_end()) throw ParseError(ParseErrorKind::empty_input, pos_);
    Diagram d = expr();
    skip_ws();
    if (!at_end()) throw ParseError(ParseErrorKind::trailing_input, pos_);
    return d;
  }

 private:
  bool at_end() const { return pos_ >= input_.size(); }
  char peek() const { return input_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char a, char alias = '\0') {
    skip_ws();
    if (!at_end() && (peek() == a || (alias && peek() == alias))) {
      ++pos_;
      return true;
    }
    return false;
  }

  Diagram expr() {
    Diagram d = term();
    while (accept('+', '|')) d = Diagram::parallel(std::move(d), term());
    return d;
  }

  Diagram term() {
    Diagram d = factor();
    while (accept('*', '&')) d = Diagram::series(std::move(d), factor());
    return d;
  }

  Diagram factor() {
    skip_ws();
    if (at_end()) throw ParseError(ParseErrorKind::unexpected_token, pos_);
    char c = peek();
    if (c == '~') {
      ++pos_;
      return Diagram::complement(factor());
    }
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      Diagram d = expr();
      skip_ws();
      if (at_end() || peek() != ')') throw ParseError(ParseErrorKind::unbalanced_parenthesis, at_end() ? open : pos_);
      ++pos_;
      return d;
    }
    if (c == 'A') {
      std::size_t start = pos_;
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(ParseErrorKind::bad_component_index, pos_);
      long long index = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        index = index * 10 + (peek() - '0');
        if (index > 1'000'000'000) throw ParseError(ParseErrorKind::bad_component_index, start);
        ++pos_;
      }
      if (index < 1) throw ParseError(ParseErrorKind::bad_component_index, start);
      return Diagram::elementary(static_cast<int>(index));
    }
    if (c == '1') {
      ++pos_;
      return Diagram::one();
    }
    if (c == '0') {
      ++pos_;
      return Diagram::zero();
    }
    throw ParseError(ParseErrorKind::unexpected_token, pos_);
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

// Precedence levels: parallel 0, series 1, complement operand 2.
inline void render_into(const Diagram& d, int min_prec, std::string& out) {
  switch (d.kind()) {
    case DiagramKind::one:
      out += '1';
      return;
    case DiagramKind::zero:
      out += '0';
      return;
    case DiagramKind::elementary:
      out += 'A';
      out += std::to_string(d.component().index());
      return;
    case DiagramKind::complement:
      out += '~';
      render_into(d.left(), 2, out);
      return;
    case DiagramKind::series:
    case DiagramKind::parallel: {
      const bool series = d.kind() == DiagramKind::series;
      const int prec = series ? 1 : 0;
      const bool parens = prec < min_prec;
      if (parens) out += '(';
      render_into(d.left(), prec, out);
      out += series ? " * " : " + ";
      render_into(d.right(), prec + 1, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace detail

// Parses an expression string; throws ParseError on malformed input.
inline Diagram parse(std::string_view text) { return detail::Parser(text).run(); }

struct ParseOutcome {
  std::optional<Diagram> diagram;
  std::optional<ParseError> error;
};

inline ParseOutcome try_parse(std::string_view text) {
  try {
    return {parse(text), std::nullopt};
  } catch (const ParseError& e) {
    return {std::nullopt, e};
  }
}

// Minimal-parenthesis rendering; parse(render(d)) reproduces d structurally.
inline std::string render(const Diagram& d) {
  std::string out;
  detail::render_into(d, 0, out);
  return out;
}

}  // namespace rbd
