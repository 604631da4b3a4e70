#include "polyinf/parser.hpp"

#include <cctype>

#include "polyinf/errors.hpp"

namespace polyinf {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (true) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / d.coeff(0, 0);
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer literal");
      if (pos_ - start > 4) fail("exponent too large");
      base = pow(base, std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return MultiPoly::constant(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "x") return MultiPoly::x();
      if (name == "y") return MultiPoly::y();
      throw UnsupportedInput("only the variables x and y are supported (got '" + name + "')");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational number() {
    size_t start = pos_;
    std::string digits;
    long frac = 0;
    bool dot = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (dot) ++frac;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    Rational r(Integer(digits, 10), 1);
    if (frac > 0) {
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
      r /= Rational(den);
    }
    r.canonicalize();
    return r;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace polyinf
