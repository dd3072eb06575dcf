#include <cctype>
#include <ostream>
#include <sstream>

#include "krammer/errors.hpp"
#include "krammer/laurent.hpp"

namespace krammer {

namespace {

void append_power(std::string& out, char var, int e) {
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

// Recursive-descent parser for
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' signed-int]
//   atom   := integer | 't' | 'q' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  LaurentPoly parse() {
    LaurentPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("laurent polynomial: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == 't' || c == 'q' || std::isdigit(static_cast<unsigned char>(c));
  }

  LaurentPoly expr() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    LaurentPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_atom()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly factor() {
    LaurentPoly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected exponent");
    try {
      return pow(base, std::stol(digits));
    } catch (const std::out_of_range&) {
      fail("exponent out of range");
    }
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 't') {
      ++pos_;
      return LaurentPoly::t();
    }
    if (c == 'q') {
      ++pos_;
      return LaurentPoly::q();
    }
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LaurentPoly(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : a.terms()) {
    const bool negative = term.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpz_class mag = abs(term.coeff);
    const bool constant = term.exp.t == 0 && term.exp.q == 0;
    if (constant) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    if (term.exp.t != 0) append_power(out, 't', term.exp.t);
    if (term.exp.t != 0 && term.exp.q != 0) out += '*';
    if (term.exp.q != 0) append_power(out, 'q', term.exp.q);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) { return Parser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << to_string(a); }

}  // namespace krammer
