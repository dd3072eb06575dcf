#include "krammer/curves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "krammer/errors.hpp"

namespace krammer {

namespace {

struct PairRoots {
  int i;
  int j;
  RootFactorization roots;
};

std::vector<PairRoots> pairwise_roots(const CompletelyReducibleCurve& c) {
  std::vector<PairRoots> out;
  const auto& y = c.components();
  for (int i = 0; i < c.degree(); ++i) {
    for (int j = i + 1; j < c.degree(); ++j) {
      const RationalPoly diff = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)];
      out.push_back({i + 1, j + 1, rational_roots(diff)});
    }
  }
  return out;
}

SingularFiberInfo fiber_at(const CompletelyReducibleCurve& c, const mpq_class& x) {
  const auto& y = c.components();
  std::map<mpq_class, std::vector<int>> groups;
  for (int i = 0; i < c.degree(); ++i) groups[y[static_cast<std::size_t>(i)](x)].push_back(i + 1);
  SingularFiberInfo info{x, {}, std::nullopt};
  for (auto& [value, part] : groups) {
    if (part.size() >= 2) info.parts.push_back(part);
  }
  std::sort(info.parts.begin(), info.parts.end());

  std::set<int> orders;
  for (const auto& part : info.parts) {
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        const RationalPoly diff = y[static_cast<std::size_t>(part[a] - 1)] - y[static_cast<std::size_t>(part[b] - 1)];
        orders.insert(root_multiplicity(diff, x));
      }
    }
  }
  if (orders.size() == 1) info.local_degree = *orders.begin();
  return info;
}

FiberSurvey survey(const CompletelyReducibleCurve& c, bool strict) {
  FiberSurvey out;
  std::set<mpq_class> xs;
  for (auto& pr : pairwise_roots(c)) {
    if (pr.roots.residual.degree() >= 1) {
      if (strict) throw IrrationalCollisionUnresolved(pr.i, pr.j);
      out.unresolved.push_back({{pr.i, pr.j}, pr.roots.residual});
    }
    for (const auto& r : pr.roots.roots) xs.insert(r.value);
  }
  for (const auto& x : xs) out.fibers.push_back(fiber_at(c, x));
  return out;
}

void check_strands(int strands) {
  if (strands < 2) throw IndexOutOfRange("braid group needs at least 2 strands, got " + std::to_string(strands));
}

void check_power(int d) {
  if (d < 1) throw IndexOutOfRange("twist power must be positive, got " + std::to_string(d));
}

}  // namespace

CompletelyReducibleCurve::CompletelyReducibleCurve(std::vector<RationalPoly> components)
    : components_(std::move(components)) {
  if (components_.size() < 2) throw InvalidCurve("a curve needs at least 2 components");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      if (components_[i] == components_[j]) {
        throw InvalidCurve("components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are equal");
      }
    }
  }
}

FiberSurvey survey_fibers(const CompletelyReducibleCurve& c) { return survey(c, false); }

std::vector<SingularFiberInfo> singular_fibers(const CompletelyReducibleCurve& c) { return survey(c, true).fibers; }

BraidWord one_fiber_monodromy(int strands, int d) {
  check_strands(strands);
  check_power(d);
  return full_twist(strands).power(d);
}

BraidWord partial_fiber_monodromy(int strands, int a, int b, int d) {
  check_strands(strands);
  check_power(d);
  if (a < 1 || b > strands || a > b) {
    throw IndexOutOfRange("part [" + std::to_string(a) + ", " + std::to_string(b) + "] outside [1, " +
                          std::to_string(strands) + "]");
  }
  const int m = b - a + 1;
  if (m < 2) throw PartTooSmall();
  if (m >= strands) throw IndexOutOfRange("a partial fiber must leave at least one strand out");
  std::vector<int> twist;
  for (int r = 0; r < m; ++r) {
    for (int k = a; k < b; ++k) twist.push_back(k);
  }
  return BraidWord(strands, std::move(twist)).power(d);
}

std::optional<OneFiberFamily> detect_one_fiber_family(const CompletelyReducibleCurve& c) {
  const auto& y = c.components();
  const RationalPoly base = y[1] - y[0];
  const int d = base.degree();
  if (d < 1) return std::nullopt;
  // base = lc (x - p)^d forces the x^{d-1} coefficient to be -d p lc.
  const mpq_class lc = base.coeff(d);
  const mpq_class p = -base.coeff(d - 1) / (lc * d);
  const RationalPoly shape = RationalPoly::linear_power(p, d);

  OneFiberFamily fam{d, p, 0, {}};
  const RationalPoly shifted = y[0].shifted(p);
  for (int k = 1; k <= shifted.degree(); ++k) {
    if (k != d && sgn(shifted.coeff(k)) != 0) return std::nullopt;
  }
  fam.e = shifted.coeff(0);
  const mpq_class c0 = shifted.coeff(d);
  for (const auto& yi : y) {
    const RationalPoly diff = yi - y[0];
    const mpq_class ci = diff.coeff(d);
    if (!(diff == RationalPoly({ci}) * shape)) return std::nullopt;
    fam.c.push_back(c0 + ci);
  }
  return fam;
}

LaurentPoly one_fiber_formula(int strands, int d) {
  const LaurentPoly factor = LaurentPoly::monomial(1, 2 * d, 6 * d) - LaurentPoly(1);
  return normalize(pow(factor, static_cast<long>(strands) * (strands - 1) / 2));
}

CurveReport analyze(const CompletelyReducibleCurve& c, const std::optional<MonodromyList>& supplied) {
  const int n = c.degree();
  CurveReport report{n, std::nullopt, {}, {}, std::nullopt};
  FiberSurvey s = survey(c, false);
  report.unresolved = std::move(s.unresolved);

  if (auto fam = detect_one_fiber_family(c)) {
    const InvariantResult r = krammer_polynomial(MonodromyList(n, {one_fiber_monodromy(n, fam->d)}));
    const LaurentPoly formula = one_fiber_formula(n, fam->d);
    report.family = FamilyReport{*fam, r.polynomial, formula, r.polynomial == formula, n == 3};
  }

  for (auto& f : s.fibers) {
    FiberReport fr{std::move(f), std::nullopt, {}};
    std::size_t largest = 0;
    for (const auto& part : fr.fiber.parts) largest = std::max(largest, part.size());
    if (largest < static_cast<std::size_t>(n)) {
      fr.local_polynomial = LaurentPoly();
      fr.reason = "partial collision: local monodromy is an essential braid";
    } else if (report.family) {
      fr.local_polynomial = report.family->computed;
      fr.reason = "all components meet with common order " + std::to_string(report.family->family.d) +
                  ": local monodromy is a power of the full twist";
    } else {
      fr.reason = "all components meet: local monodromy must be supplied";
    }
    report.fibers.push_back(std::move(fr));
  }

  if (supplied) {
    if (supplied->strands() != n) {
      throw DimensionMismatch("supplied monodromy has " + std::to_string(supplied->strands()) +
                              " strands, curve has " + std::to_string(n) + " components");
    }
    report.supplied = krammer_polynomial(*supplied);
  }
  return report;
}

}  // namespace krammer
