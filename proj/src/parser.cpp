#include "graphoid/ratfunc.hpp"

#include <cctype>

namespace graphoid {

namespace {

// Recursive descent over the expression grammar (see README):
//   expr   = term { ("+" | "-") term }
//   term   = factor { ("*" | "/") factor }
//   factor = ("+" | "-") factor | power
//   power  = atom [ "^" digits ]
//   atom   = number | "x" | "y" | "(" expr ")"
class Parser {
public:
  explicit Parser(const std::string& text) : s_(text), pos_(0) {}

  RatFunc run() {
    RatFunc e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError("division by the zero polynomial", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    if (accept('+')) return factor();
    if (accept('-')) return -factor();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (accept('^')) {
      size_t at = pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("exponent must be a nonnegative integer literal", at);
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (e > 1000) throw ParseError("exponent too large", at);
        ++pos_;
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  RatFunc atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (c == 'x') {
      ++pos_;
      return ratfunc_x();
    }
    if (c == 'y') {
      ++pos_;
      return ratfunc_y();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        ++pos_;
      try {
        return ratfunc_constant(rat_from_string(s_.substr(start, pos_ - start)));
      } catch (const std::exception&) {
        throw ParseError("bad numeric literal", start);
      }
    }
    throw ParseError("expected a number, variable or '('", pos_);
  }

  const std::string& s_;
  size_t pos_;
};

} // namespace

RatFunc parse_ratfunc(const std::string& text) {
  return Parser(text).run();
}

} // namespace graphoid
