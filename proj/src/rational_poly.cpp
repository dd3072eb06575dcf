#include "krammer/rational_poly.hpp"

#include <algorithm>
#include <set>

#include "krammer/errors.hpp"

namespace krammer {

namespace {

void trim(std::vector<mpq_class>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// Divisors of |n| for n != 0. Trial division, with a primality test on the
// remaining cofactor so large prime factors are still handled.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (p > 1000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
        throw Error("rational root search: coefficient " + n.get_str() + " is too large to factor");
      }
      break;
    }
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// p / (x - r), assuming p(r) == 0.
RationalPoly deflate(const RationalPoly& p, const mpq_class& r) {
  const auto& c = p.coeffs();
  std::vector<mpq_class> out(c.size() - 1);
  mpq_class carry = 0;
  for (int k = p.degree(); k >= 1; --k) {
    carry = c[static_cast<std::size_t>(k)] + carry * r;
    out[static_cast<std::size_t>(k - 1)] = carry;
  }
  return RationalPoly(std::move(out));
}

}  // namespace

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim(c_);
}

mpq_class RationalPoly::coeff(int k) const {
  return (k >= 0 && k <= degree()) ? c_[static_cast<std::size_t>(k)] : mpq_class(0);
}

mpq_class RationalPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::shifted(const mpq_class& s) const {
  // Horner in the polynomial ring: p(x + s) = (...(c_d (x+s) + c_{d-1})(x+s) ...)
  const RationalPoly xs({s, mpq_class(1)});
  RationalPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xs + RationalPoly({*it});
  return acc;
}

RationalPoly RationalPoly::linear_power(const mpq_class& r, int k) {
  RationalPoly acc({mpq_class(1)});
  const RationalPoly lin({-r, mpq_class(1)});
  for (int i = 0; i < k; ++i) acc = acc * lin;
  return acc;
}

int root_multiplicity(const RationalPoly& p, const mpq_class& r) {
  int m = 0;
  RationalPoly cur = p;
  while (!cur.is_zero() && cur.degree() >= 1 && sgn(cur(r)) == 0) {
    cur = deflate(cur, r);
    ++m;
  }
  return m;
}

RootFactorization rational_roots(const RationalPoly& p) {
  RootFactorization out;
  RationalPoly cur = p;
  auto take_root = [&](const mpq_class& r) {
    int m = 0;
    while (cur.degree() >= 1 && sgn(cur(r)) == 0) {
      cur = deflate(cur, r);
      ++m;
    }
    if (m > 0) out.roots.push_back({r, m});
  };
  take_root(0);
  if (cur.degree() >= 1) {
    // Primitive integer associate: scale by the lcm of denominators.
    mpz_class l = 1;
    for (const auto& c : cur.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    const mpz_class a0 = mpz_class(cur.coeffs().front() * l);
    const mpz_class an = mpz_class(cur.coeffs().back() * l);
    std::set<mpq_class> candidates;
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        candidates.insert(mpq_class(num, den));
        candidates.insert(mpq_class(-num, den));
      }
    }
    for (auto c : candidates) {
      c.canonicalize();
      if (cur.degree() < 1) break;
      take_root(c);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  if (cur.degree() >= 1) {
    const mpq_class lead = cur.coeffs().back();
    std::vector<mpq_class> monic = cur.coeffs();
    for (auto& c : monic) c /= lead;
    cur = RationalPoly(std::move(monic));
  }
  out.residual = cur;
  return out;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ParseError("empty rational number");
  mpq_class r;
  const auto valid = s.find_first_not_of("+-0123456789/") == std::string::npos;
  if (!valid || r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) {
    throw ParseError("bad rational number \"" + std::string(text) + "\"");
  }
  if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  r.canonicalize();
  return r;
}

std::string to_string(const mpq_class& r) { return r.get_str(); }

std::string to_string(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const mpq_class c = p.coeff(k);
    if (sgn(c) == 0) continue;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const mpq_class mag = abs(c);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'x';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace krammer
