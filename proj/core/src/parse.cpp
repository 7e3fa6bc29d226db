#include <cctype>

#include "jetres/poly.hpp"

namespace jetres::poly {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expression();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expression() {
    Polynomial acc;
    bool first = true;
    while (true) {
      char c = peek();
      bool negative = false;
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = product();
      acc += negative ? -t : t;
      first = false;
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' ||
           c == '(';
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (starts_factor(c)) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      mpz_class e = integer();
      if (e > 100000) throw ParseError("exponent too large", at);
      base = pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(integer());
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      Axis a = axis_from_char(c);
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        mpz_class i = integer();
        return Polynomial::variable(Var::jet(a, static_cast<std::uint32_t>(i.get_ui())));
      }
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        mpz_class i = integer();
        if (i != 1) throw ParseError("chart variables are x1, y1, z1", at);
        return Polynomial::variable(Var::chart(a));
      }
      return Polynomial::variable(Var::plain(a));
    }
    if (c == '\0') throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }
};

}  // namespace

Polynomial parse(std::string_view text) { return Parser(text).run(); }

}  // namespace jetres::poly
