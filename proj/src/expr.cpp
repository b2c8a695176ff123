#include "wittkit/expr.hpp"

#include <cctype>
#include <string>

#include "wittkit/errors.hpp"

namespace wk {

namespace {

class Parser {
 public:
  Parser(std::string_view text, char var) : text_(text), var_(var) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("series literal \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool starts_atom() {
    const char c = peek();
    return c == '(' || c == var_ || std::isdigit(static_cast<unsigned char>(c));
  }

  RatFunc expr() {
    RatFunc acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = RatFunc() - acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = power();
    for (;;) {
      if (accept('*')) acc = acc * power();
      else if (accept('/')) acc = acc / power();
      else if (starts_atom()) acc = acc * power();
      else return acc;
    }
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^')) return base;
    bool neg = false;
    if (accept('-')) neg = true;
    const Integer e = integer();
    if (!e.fits_uint_p() || e > 4096) fail("exponent too large");
    const Poly one = Poly::constant(1);
    RatFunc r = RatFunc::from_poly(one);
    for (unsigned long i = 0; i < e.get_ui(); ++i) r = r * base;
    return neg ? RatFunc::from_poly(one) / r : r;
  }

  RatFunc atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == var_) {
      ++pos_;
      return RatFunc::from_poly(Poly::monomial(1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::from_poly(Poly::constant(Scalar(integer())));
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, char var) { return Parser(text, var).parse(); }

}  // namespace wk
