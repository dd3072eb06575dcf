// GCD in Z[t^±1, q^±1].
//
// Monomial factors are units, so both inputs are shifted into Z[t, q] first.
// The GCD there is computed by the primitive polynomial remainder sequence in
// t over the coefficient ring Z[q], whose own GCD is the univariate primitive
// PRS over Z.

#include <algorithm>
#include <utility>

#include "krammer/laurent.hpp"

namespace krammer {
namespace {

// Dense univariate polynomial over Z, ascending powers, no trailing zeros.
using ZPoly = std::vector<mpz_class>;
// Dense polynomial in t with ZPoly (in q) coefficients, ascending powers of t.
using ZqPoly = std::vector<ZPoly>;

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}
void trim(ZqPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }
int deg(const ZqPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly divexact(const ZPoly& a, const mpz_class& c) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

// Exact quotient in Z[q]; the caller guarantees divisibility.
ZPoly divexact(ZPoly a, const ZPoly& b) {
  if (a.empty()) return {};
  ZPoly quot(a.size() - b.size() + 1);
  const mpz_class& lb = b.back();
  for (int i = deg(a) - deg(b); i >= 0; --i) {
    mpz_class& top = a[static_cast<std::size_t>(i) + b.size() - 1];
    if (sgn(top) == 0) continue;
    mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(a[i + j].get_mpz_t(), quot[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(quot);
  return quot;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return a;
  mpz_class c = content(a);
  if (a.back() < 0) c = -c;
  return c == 1 ? a : divexact(a, c);
}

// Pseudo-remainder up to a non-zero constant factor.
ZPoly prem(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  while (deg(a) >= deg(b)) {
    const std::size_t shift = a.size() - b.size();
    const mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) {
    ZPoly r = a.empty() ? b : a;
    if (!r.empty() && r.back() < 0) {
      for (auto& c : r) c = -c;
    }
    return r;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  ZPoly x = primitive_part(a);
  ZPoly y = primitive_part(b);
  if (deg(x) < deg(y)) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = prem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  x = primitive_part(x);
  for (auto& c : x) c *= g;
  return x;
}

// --- polynomials in t over Z[q] ---

ZPoly content(const ZqPoly& a) {
  ZPoly g;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

ZqPoly divexact(const ZqPoly& a, const ZPoly& c) {
  ZqPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = divexact(a[i], c);
  return r;
}

ZqPoly primitive_part(const ZqPoly& a) {
  if (a.empty()) return a;
  ZPoly c = content(a);
  if (a.back().back() < 0) {
    for (auto& x : c) x = -x;
  }
  if (c.size() == 1 && c[0] == 1) return a;
  return divexact(a, c);
}

ZqPoly prem(ZqPoly a, const ZqPoly& b) {
  const ZPoly& lb = b.back();
  while (deg(a) >= deg(b)) {
    const std::size_t shift = a.size() - b.size();
    const ZPoly la = a.back();
    for (auto& c : a) c = mul(c, lb);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(la, b[j]));
    trim(a);
  }
  return a;
}

ZqPoly gcd(const ZqPoly& a, const ZqPoly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const ZPoly cont = gcd(content(a), content(b));
  ZqPoly x = primitive_part(a);
  ZqPoly y = primitive_part(b);
  if (deg(x) < deg(y)) std::swap(x, y);
  while (!y.empty()) {
    if (deg(y) == 0) {
      // A primitive polynomial of t-degree 0 is a unit up to sign.
      x = ZqPoly{ZPoly{1}};
      break;
    }
    ZqPoly r = prem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  x = primitive_part(x);
  for (auto& c : x) c = mul(c, cont);
  return x;
}

ZqPoly to_dense(const LaurentPoly& a) {
  const Exponent lo = a.min_exponent();
  const Exponent hi = a.max_exponent();
  ZqPoly r(static_cast<std::size_t>(hi.t - lo.t + 1));
  for (const auto& term : a.terms()) {
    ZPoly& c = r[static_cast<std::size_t>(term.exp.t - lo.t)];
    const auto k = static_cast<std::size_t>(term.exp.q - lo.q);
    if (c.size() <= k) c.resize(k + 1);
    c[k] = term.coeff;
  }
  return r;
}

LaurentPoly from_dense(const ZqPoly& a) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (sgn(a[i][j]) != 0) terms.push_back(Term{{static_cast<int>(i), static_cast<int>(j)}, a[i][j]});
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_unit() || b.is_unit()) return LaurentPoly(1);
  if (a.is_monomial() || b.is_monomial()) {
    // gcd(c*m, f) for a monomial m is gcd(c, content(f)).
    mpz_class g = 0;
    for (const auto& t : a.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    for (const auto& t : b.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    return LaurentPoly(g);
  }
  return normalize(from_dense(gcd(to_dense(a), to_dense(b))));
}

}  // namespace krammer
