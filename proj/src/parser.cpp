#include "funksphere/parser.hpp"

#include <cctype>

namespace funksphere {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int m) : text_(text), m_(m) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  const std::string& text_;
  int m_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  unsigned long read_uint(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    try {
      return std::stoul(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail(std::string(what) + " out of range");
    }
  }

  Polynomial expr() {
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = (c == '-');
      ++pos_;
    }
    Polynomial p = term();
    if (neg) p = -p;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      if (c == '+')
        p += term();
      else
        p -= term();
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = p * factor();
      } else if (starts_factor(c)) {
        fail("missing '*': implicit multiplication is not allowed");
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial factor() {
    Polynomial p = primary();
    while (peek() == '^') {
      ++pos_;
      std::size_t at = pos_;
      unsigned long e = read_uint("exponent");
      if (e > 64) {
        pos_ = at;
        fail("exponent overflow: maximum is 64");
      }
      Polynomial r = Polynomial::constant(m_, Rational(1));
      Polynomial base = p;
      for (unsigned long i = 0; i < e; ++i) r = r * base;
      p = r;
    }
    return p;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(pos_ < text_.size() ? text_[pos_] : '\0'))) {
        pos_ = at;
        fail("expected variable index after 'x'");
      }
      unsigned long idx = read_uint("variable index");
      if (idx < 1 || idx > static_cast<unsigned long>(m_)) {
        pos_ = at;
        fail("variable index out of range");
      }
      return Polynomial::variable(m_, static_cast<int>(idx) - 1);
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    fail("expected rational, variable, or '('");
  }

  Polynomial rational_literal() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected number");
    }
    mpz_class num(text_.substr(start, pos_ - start));
    if (peek() == '/') {
      ++pos_;
      unsigned long den = read_uint("denominator");
      if (den == 0) fail("zero denominator");
      return Polynomial::constant(m_, Rational(num, mpz_class(den)));
    }
    return Polynomial::constant(m_, Rational(num));
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int m) {
  if (m < 1) throw std::domain_error("parse_polynomial: dimension must be positive");
  return Parser(text, m).run();
}

}  // namespace funksphere
