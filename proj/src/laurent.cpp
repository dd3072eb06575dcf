#include "krammer/laurent.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "krammer/errors.hpp"

namespace krammer {

// Dense accumulation over an exponent bounding box. Cells are indexed in lex
// order of (e_t, e_q), so scanning indices downward visits terms in the
// canonical descending order. The backing storage is a thread-local scratch
// buffer whose cells are all zero whenever no accumulator is alive.
class TermAccumulator {
 public:
  static constexpr long kMaxArea = 1L << 21;

  TermAccumulator(Exponent lo, Exponent hi)
      : lo_(lo), hi_(hi), wq_(hi.q - lo.q + 1), area_(static_cast<long>(hi.t - lo.t + 1) * wq_) {
    auto& s = scratch();
    if (static_cast<long>(s.size()) < area_) s.resize(static_cast<std::size_t>(area_));
    cells_ = s.data();
  }

  TermAccumulator(const TermAccumulator&) = delete;
  TermAccumulator& operator=(const TermAccumulator&) = delete;

  ~TermAccumulator() {
    if (dirty_) {
      for (long i = 0; i < area_; ++i) cells_[i] = 0;
    }
  }

  // Terms must already be strictly descending with non-zero coefficients.
  static LaurentPoly wrap(std::vector<Term> terms) {
    return LaurentPoly(LaurentPoly::sorted_tag{}, std::move(terms));
  }

  static bool fits(Exponent lo, Exponent hi, std::size_t work) {
    const long area = static_cast<long>(hi.t - lo.t + 1) * (hi.q - lo.q + 1);
    return area <= kMaxArea && area <= 64 * static_cast<long>(work) + 4096;
  }

  long index(Exponent e) const { return static_cast<long>(e.t - lo_.t) * wq_ + (e.q - lo_.q); }
  Exponent exponent(long idx) const {
    return {lo_.t + static_cast<int>(idx / wq_), lo_.q + static_cast<int>(idx % wq_)};
  }
  bool contains(Exponent e) const {
    return e.t >= lo_.t && e.t <= hi_.t && e.q >= lo_.q && e.q <= hi_.q;
  }

  // cells[a_i + b_j] += sign * a_i * b_j
  void add_product(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (a.is_zero() || b.is_zero()) return;
    dirty_ = true;
    const Exponent amin = a.min_exponent();
    const Exponent bmin = b.min_exponent();
    const Exponent base{amin.t + bmin.t, amin.q + bmin.q};
    const long base_idx = index(base);
    std::vector<long> boff;
    boff.reserve(b.size());
    for (const auto& tb : b.terms()) {
      boff.push_back(static_cast<long>(tb.exp.t - bmin.t) * wq_ + (tb.exp.q - bmin.q));
    }
    for (const auto& ta : a.terms()) {
      const long aoff = base_idx + static_cast<long>(ta.exp.t - amin.t) * wq_ + (ta.exp.q - amin.q);
      const mpz_srcptr ac = ta.coeff.get_mpz_t();
      for (std::size_t j = 0; j < boff.size(); ++j) {
        mpz_ptr cell = cells_[aoff + boff[j]].get_mpz_t();
        if (subtract) {
          mpz_submul(cell, ac, b.terms()[j].coeff.get_mpz_t());
        } else {
          mpz_addmul(cell, ac, b.terms()[j].coeff.get_mpz_t());
        }
      }
    }
  }

  void load(const LaurentPoly& a) {
    if (a.is_zero()) return;
    dirty_ = true;
    for (const auto& t : a.terms()) cells_[index(t.exp)] = t.coeff;
  }

  // Moves all non-zero cells out in descending order; leaves the buffer clean.
  std::vector<Term> extract() {
    std::vector<Term> out;
    if (!dirty_) return out;
    for (long i = area_ - 1; i >= 0; --i) {
      if (sgn(cells_[i]) != 0) {
        out.push_back(Term{exponent(i), mpz_class()});
        mpz_swap(out.back().coeff.get_mpz_t(), cells_[i].get_mpz_t());
      }
    }
    dirty_ = false;
    return out;
  }

  // Divides the accumulated dividend by `divisor` in place, returning the
  // quotient terms in descending order. Throws NotDivisible on any remainder.
  std::vector<Term> divide_by(const LaurentPoly& divisor) {
    std::vector<Term> quotient;
    if (!dirty_) return quotient;
    const Term& lead = divisor.leading();
    const Exponent dmin = divisor.min_exponent();
    const Exponent dmax = divisor.max_exponent();
    const Exponent qlo{lo_.t - dmin.t, lo_.q - dmin.q};
    const Exponent qhi{hi_.t - dmax.t, hi_.q - dmax.q};
    std::vector<std::pair<Exponent, long>> rest;  // offsets relative to the leading term
    for (std::size_t j = 1; j < divisor.size(); ++j) {
      const Exponent e = divisor.terms()[j].exp;
      rest.emplace_back(Exponent{e.t - lead.exp.t, e.q - lead.exp.q},
                        static_cast<long>(e.t - lead.exp.t) * wq_ + (e.q - lead.exp.q));
    }
    mpz_class c;
    for (long i = area_ - 1; i >= 0; --i) {
      mpz_ptr cell = cells_[i].get_mpz_t();
      if (mpz_sgn(cell) == 0) continue;
      const Exponent e = exponent(i);
      const Exponent qe{e.t - lead.exp.t, e.q - lead.exp.q};
      if (qe.t < qlo.t || qe.t > qhi.t || qe.q < qlo.q || qe.q > qhi.q) throw NotDivisible();
      if (!mpz_divisible_p(cell, lead.coeff.get_mpz_t())) throw NotDivisible();
      mpz_divexact(c.get_mpz_t(), cell, lead.coeff.get_mpz_t());
      mpz_set_ui(cell, 0);
      for (std::size_t j = 0; j < rest.size(); ++j) {
        mpz_submul(cells_[i + rest[j].second].get_mpz_t(), c.get_mpz_t(),
                   divisor.terms()[j + 1].coeff.get_mpz_t());
      }
      quotient.push_back(Term{qe, c});
    }
    dirty_ = false;
    return quotient;
  }

 private:
  static std::vector<mpz_class>& scratch() {
    thread_local std::vector<mpz_class> buffer;
    return buffer;
  }

  Exponent lo_;
  Exponent hi_;
  long wq_;
  long area_;
  mpz_class* cells_ = nullptr;
  bool dirty_ = false;
};

namespace {

using SparseMap = std::map<Exponent, mpz_class, std::greater<>>;

std::vector<Term> drain(SparseMap& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (auto& [e, c] : m) {
    if (sgn(c) != 0) out.push_back(Term{e, std::move(c)});
  }
  return out;
}

Exponent add(Exponent a, Exponent b) { return {a.t + b.t, a.q + b.q}; }
Exponent sub(Exponent a, Exponent b) { return {a.t - b.t, a.q - b.q}; }
Exponent lower(Exponent a, Exponent b) { return {std::min(a.t, b.t), std::min(a.q, b.q)}; }
Exponent upper(Exponent a, Exponent b) { return {std::max(a.t, b.t), std::max(a.q, b.q)}; }

std::vector<Term> sparse_product(const LaurentPoly& a, const LaurentPoly& b) {
  SparseMap acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      mpz_class& cell = acc[add(ta.exp, tb.exp)];
      mpz_addmul(cell.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
  }
  return drain(acc);
}

std::vector<Term> sparse_divide(const LaurentPoly& a, const LaurentPoly& b) {
  SparseMap rem;
  for (const auto& t : a.terms()) rem.emplace(t.exp, t.coeff);
  const Exponent qlo = sub(a.min_exponent(), b.min_exponent());
  const Exponent qhi = sub(a.max_exponent(), b.max_exponent());
  const Term& lead = b.leading();
  std::vector<Term> quotient;
  mpz_class c;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (sgn(it->second) == 0) {
      rem.erase(it);
      continue;
    }
    const Exponent qe = sub(it->first, lead.exp);
    if (qe.t < qlo.t || qe.t > qhi.t || qe.q < qlo.q || qe.q > qhi.q) throw NotDivisible();
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) throw NotDivisible();
    mpz_divexact(c.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    rem.erase(it);
    for (std::size_t j = 1; j < b.size(); ++j) {
      mpz_class& cell = rem[add(qe, b.terms()[j].exp)];
      mpz_submul(cell.get_mpz_t(), c.get_mpz_t(), b.terms()[j].coeff.get_mpz_t());
    }
    quotient.push_back(Term{qe, c});
  }
  return quotient;
}

// Quotient by a monomial divisor: exact iff every coefficient is divisible.
std::vector<Term> divide_by_monomial(const LaurentPoly& a, const Term& m) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), m.coeff.get_mpz_t())) throw NotDivisible();
    Term r{sub(t.exp, m.exp), mpz_class()};
    mpz_divexact(r.coeff.get_mpz_t(), t.coeff.get_mpz_t(), m.coeff.get_mpz_t());
    out.push_back(std::move(r));
  }
  return out;
}

template <class Op>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, Op op) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp > b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp > a[i].exp) {
      out.push_back(Term{b[j].exp, op(mpz_class(0), b[j].coeff)});
      ++j;
    } else {
      mpz_class c = op(a[i].coeff, b[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(mpz_class c, Exponent e) {
  if (sgn(c) != 0) terms_.push_back(Term{e, std::move(c)});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  SparseMap acc;
  for (auto& t : terms) acc[t.exp] += t.coeff;
  return LaurentPoly(sorted_tag{}, drain(acc));
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Exponent{} && terms_[0].coeff == 1;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

Exponent LaurentPoly::min_exponent() const {
  Exponent m = terms_.front().exp;
  for (const auto& t : terms_) m = lower(m, t.exp);
  return m;
}

Exponent LaurentPoly::max_exponent() const {
  Exponent m = terms_.front().exp;
  for (const auto& t : terms_) m = upper(m, t.exp);
  return m;
}

LaurentPoly LaurentPoly::shifted(Exponent e) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exp = add(t.exp, e);
  return LaurentPoly(sorted_tag{}, std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return LaurentPoly(sorted_tag{}, std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return LaurentPoly(LaurentPoly::sorted_tag{},
                     merge(a.terms_, b.terms_, [](const mpz_class& x, const mpz_class& y) -> mpz_class { return x + y; }));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return LaurentPoly(LaurentPoly::sorted_tag{},
                     merge(a.terms_, b.terms_, [](const mpz_class& x, const mpz_class& y) -> mpz_class { return x - y; }));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial() || b.is_monomial()) {
    const LaurentPoly& m = a.is_monomial() ? a : b;
    const LaurentPoly& p = a.is_monomial() ? b : a;
    std::vector<Term> out = p.terms_;
    for (auto& t : out) {
      t.exp = add(t.exp, m.terms_[0].exp);
      t.coeff *= m.terms_[0].coeff;
    }
    return LaurentPoly(LaurentPoly::sorted_tag{}, std::move(out));
  }
  const Exponent lo = add(a.min_exponent(), b.min_exponent());
  const Exponent hi = add(a.max_exponent(), b.max_exponent());
  if (!TermAccumulator::fits(lo, hi, a.size() * b.size())) {
    return LaurentPoly(LaurentPoly::sorted_tag{}, sparse_product(a, b));
  }
  TermAccumulator acc(lo, hi);
  acc.add_product(a, b, false);
  return LaurentPoly(LaurentPoly::sorted_tag{}, acc.extract());
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) { return *this = *this + b; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) { return *this = *this - b; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) { return *this = *this * b; }

LaurentPoly pow(const LaurentPoly& a, long k) {
  if (k < 0) {
    if (!a.is_unit()) throw NegativePowerOfNonUnit();
    const Term& m = a.leading();
    const long e = -k;
    const int sign = (m.coeff < 0 && (e % 2) == 1) ? -1 : 1;
    return LaurentPoly::monomial(sign, static_cast<int>(-m.exp.t * e), static_cast<int>(-m.exp.q * e));
  }
  LaurentPoly result(1);
  LaurentPoly base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NotDivisible();
  if (a.is_zero()) return {};
  if (b.is_monomial()) return TermAccumulator::wrap(divide_by_monomial(a, b.leading()));
  const Exponent lo = a.min_exponent();
  const Exponent hi = a.max_exponent();
  const Exponent bspan = sub(b.max_exponent(), b.min_exponent());
  if (hi.t - lo.t < bspan.t || hi.q - lo.q < bspan.q) throw NotDivisible();
  std::vector<Term> quotient;
  if (TermAccumulator::fits(lo, hi, a.size() * 4)) {
    TermAccumulator acc(lo, hi);
    acc.load(a);
    quotient = acc.divide_by(b);
  } else {
    quotient = sparse_divide(a, b);
  }
  return TermAccumulator::wrap(std::move(quotient));
}

LaurentPoly cross_div(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c,
                      const LaurentPoly& d, const LaurentPoly& p) {
  if (p.is_zero()) throw NotDivisible();
  const bool has_ab = !a.is_zero() && !b.is_zero();
  const bool has_cd = !c.is_zero() && !d.is_zero();
  if (!has_ab && !has_cd) return {};
  if (p.is_monomial() || !has_ab || !has_cd) return exact_div(a * b - c * d, p);
  const Exponent lo = lower(add(a.min_exponent(), b.min_exponent()), add(c.min_exponent(), d.min_exponent()));
  const Exponent hi = upper(add(a.max_exponent(), b.max_exponent()), add(c.max_exponent(), d.max_exponent()));
  if (!TermAccumulator::fits(lo, hi, a.size() * b.size() + c.size() * d.size())) {
    return exact_div(a * b - c * d, p);
  }
  TermAccumulator acc(lo, hi);
  acc.add_product(a, b, false);
  acc.add_product(c, d, true);
  return TermAccumulator::wrap(acc.divide_by(p));
}

LaurentPoly normalize(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  const Exponent m = a.min_exponent();
  LaurentPoly r = a.shifted({-m.t, -m.q});
  if (r.leading().coeff < 0) r = -r;
  return r;
}

bool divides(const LaurentPoly& divisor, const LaurentPoly& a) {
  try {
    (void)exact_div(a, divisor);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

}  // namespace krammer
