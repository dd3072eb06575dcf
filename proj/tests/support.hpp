#pragma once

#include <random>

#include "krammer/laurent.hpp"
#include "krammer/polymatrix.hpp"

namespace krammer::testing {

inline LaurentPoly P(const char* text) { return parse_laurent(text); }

// Random polynomial with up to `max_terms` terms, coefficients in
// [-coeff, coeff] and exponents in [-exp, exp].
inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 5, int coeff = 10, int exp = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<int> e(-exp, exp);
  std::vector<Term> terms;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) terms.push_back({{e(rng), e(rng)}, mpz_class(c(rng))});
  return LaurentPoly::from_terms(std::move(terms));
}

inline LaurentPoly random_nonzero(std::mt19937& rng, int max_terms = 5, int coeff = 10, int exp = 6) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_terms, coeff, exp);
    if (!p.is_zero()) return p;
  }
}

// Evaluation at a rational point, computed term by term without any ring code.
inline mpq_class eval(const LaurentPoly& p, const mpq_class& t, const mpq_class& q) {
  mpq_class acc = 0;
  for (const auto& term : p.terms()) {
    mpq_class v(term.coeff);
    mpq_class base_t = term.exp.t >= 0 ? t : mpq_class(1 / t);
    mpq_class base_q = term.exp.q >= 0 ? q : mpq_class(1 / q);
    for (int i = 0; i < std::abs(term.exp.t); ++i) v *= base_t;
    for (int i = 0; i < std::abs(term.exp.q); ++i) v *= base_q;
    acc += v;
  }
  return acc;
}

inline const std::vector<std::pair<mpq_class, mpq_class>>& sample_points() {
  static const std::vector<std::pair<mpq_class, mpq_class>> pts = {
      {2, 3}, {-3, 5}, {mpq_class(1, 2), 7}, {5, mpq_class(-2, 3)}, {11, -13}};
  return pts;
}

inline bool same_values(const LaurentPoly& a, const LaurentPoly& b) {
  for (const auto& [t, q] : sample_points()) {
    if (eval(a, t, q) != eval(b, t, q)) return false;
  }
  return true;
}

inline PolyMatrix random_matrix(std::mt19937& rng, int n, int max_terms = 2, int coeff = 3, int exp = 2) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = random_poly(rng, max_terms, coeff, exp);
  }
  return m;
}

}  // namespace krammer::testing
