#pragma once

// Sparse bivariate Laurent polynomials over Z in the variables t and q.
//
// Terms are kept sorted in descending lexicographic order of (e_t, e_q) with
// no zero coefficients, so structural equality is polynomial equality.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace krammer {

struct Exponent {
  int t = 0;
  int q = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

struct Term {
  Exponent exp;
  mpz_class coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exp == b.exp && a.coeff == b.coeff;
  }
};

class LaurentPoly {
 public:
  LaurentPoly() = default;

  template <std::integral I>
  LaurentPoly(I c) : LaurentPoly(mpz_class(static_cast<long>(c))) {}  // NOLINT: ring literal

  explicit LaurentPoly(mpz_class c, Exponent e = {});

  // Builds from arbitrary terms: merges duplicate exponents and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  static LaurentPoly monomial(long coeff, int et, int eq) { return LaurentPoly(mpz_class(coeff), {et, eq}); }
  static LaurentPoly t() { return monomial(1, 1, 0); }
  static LaurentPoly q() { return monomial(1, 0, 1); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Units of Z[t^±1, q^±1] are exactly the monomials with coefficient ±1.
  bool is_unit() const;
  bool is_monomial() const { return terms_.size() == 1; }

  // Lexicographically largest term. Precondition: non-zero.
  const Term& leading() const { return terms_.front(); }

  // Componentwise minimum / maximum exponents. Precondition: non-zero.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  // Multiplies by t^et q^eq.
  LaurentPoly shifted(Exponent e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  struct sorted_tag {};
  LaurentPoly(sorted_tag, std::vector<Term> terms) : terms_(std::move(terms)) {}
  friend class TermAccumulator;
  std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly& a, long k);

// Exact quotient a / b. Throws NotDivisible when b does not divide a in the
// Laurent ring, or when b is zero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// (a*b - c*d) / p, computed without materializing the two products. This is
// the Bareiss update step; the quotient must be exact.
LaurentPoly cross_div(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c,
                      const LaurentPoly& d, const LaurentPoly& p);

// Canonical associate: no negative exponents, not divisible by t or q, and the
// lex-leading coefficient positive. normalize(0) == 0.
LaurentPoly normalize(const LaurentPoly& a);

// Normalized greatest common divisor; gcd(a, 0) == normalize(a).
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

bool divides(const LaurentPoly& divisor, const LaurentPoly& a);

// Text form, e.g. "t^2*q^6 - 1". Terms in descending lex order.
std::string to_string(const LaurentPoly& a);
LaurentPoly parse_laurent(std::string_view text);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& a);

}  // namespace krammer
