#include "folres/parser.hpp"

#include <cctype>
#include <limits>

#include "folres/error.hpp"

namespace folres {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables) : text_(text), vars_(variables) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) unexpected();
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        acc *= unary();
      } else if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '(') {
        fail("missing '*' (implicit multiplication is not allowed)");
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a nonnegative integer");
    const std::string digits = integer_digits();
    if (digits.size() > 6) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Polynomial primary() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value{Integer(integer_digits())};
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer denominator");
        const Integer den(integer_digits());
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
      }
      return Polynomial::constant(vars_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Polynomial::variable(vars_, i);
      }
      throw Error(ErrorCode::UnknownVariable,
                  "'" + std::string(name) + "' at column " + std::to_string(start + 1) + " is not declared");
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (at_end()) fail("unexpected end of expression");
    unexpected();
  }

  std::string integer_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void unexpected() { fail(std::string("unexpected '") + peek() + "'"); }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::SyntaxError, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

}  // namespace folres
