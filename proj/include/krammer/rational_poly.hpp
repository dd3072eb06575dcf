#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace krammer {

// Univariate polynomial in x with rational coefficients, ascending powers,
// no trailing zeros.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coeffs);

  const std::vector<mpq_class>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(int k) const;
  mpq_class operator()(const mpq_class& x) const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  // p(x + s)
  RationalPoly shifted(const mpq_class& s) const;
  // (x - r)^k
  static RationalPoly linear_power(const mpq_class& r, int k);

 private:
  std::vector<mpq_class> c_;
};

struct RationalRoot {
  mpq_class value;
  int multiplicity;
};

struct RootFactorization {
  std::vector<RationalRoot> roots;  // ascending
  RationalPoly residual;            // monic, no rational roots; degree 0 when fully resolved
};

// Rational roots by the rational-root theorem on the primitive integer
// associate, deflating each root to its full multiplicity.
// Precondition: p is non-zero.
RootFactorization rational_roots(const RationalPoly& p);

// Multiplicity of r as a root of p (0 when p(r) != 0).
int root_multiplicity(const RationalPoly& p, const mpq_class& r);

mpq_class parse_rational(std::string_view text);
std::string to_string(const mpq_class& r);
// Text form in x, e.g. "x^3 - 4*x".
std::string to_string(const RationalPoly& p);

}  // namespace krammer
