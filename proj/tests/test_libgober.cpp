#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "krammer/errors.hpp"
#include "krammer/libgober.hpp"
#include "krammer/representations.hpp"
#include "support.hpp"

using namespace krammer;
using krammer::testing::P;

namespace {

BraidWord random_essential(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution neg(0.5);
  const int missing = gen(rng);
  std::vector<int> letters;
  while (static_cast<int>(letters.size()) < len) {
    const int g = gen(rng);
    if (g != missing) letters.push_back(neg(rng) ? -g : g);
  }
  return BraidWord(n, letters);
}

}  // namespace

TEST_CASE("monodromy list validation") {
  CHECK_THROWS_AS(MonodromyList(3, {}), DimensionMismatch);
  CHECK_THROWS_AS(MonodromyList(3, {BraidWord(4)}), DimensionMismatch);
  CHECK_THROWS_AS(MonodromyList(1, {}), IndexOutOfRange);
  CHECK(MonodromyList(3, {BraidWord(3), BraidWord(3, {1})}).fibers() == 2);
}

TEST_CASE("libgober matrix") {
  CHECK(libgober_matrix(MonodromyList(3, {BraidWord(3)})) == PolyMatrix::Constant(3, 3, LaurentPoly()));
  CHECK(libgober_matrix(MonodromyList(3, {BraidWord(3), BraidWord(3)})) == PolyMatrix::Constant(6, 3, LaurentPoly()));
  const BraidWord w = parse_braid(golden::worked_word(), 3);
  const PolyMatrix l = libgober_matrix(MonodromyList(3, {w, BraidWord(3, {1})}));
  CHECK(l.rows() == 6);
  CHECK(PolyMatrix(l.topRows(3)) == sub_identity(krammer_word(w)));
  CHECK(PolyMatrix(l.bottomRows(3)) == sub_identity(krammer_generator(3, 1)));
}

TEST_CASE("worked example") {
  const auto r = krammer_polynomial(MonodromyList(3, {parse_braid(golden::worked_word(), 3)}));
  CHECK(r.polynomial == normalize(P(golden::worked_polynomial())));
  CHECK(r.per_fiber.size() == 1);
  CHECK(r.per_fiber[0] == r.polynomial);
  CHECK(r.exact);
  CHECK(r.minors_enumerated == 1);
}

TEST_CASE("single fiber cases") {
  CHECK(krammer_polynomial(MonodromyList(3, {BraidWord(3, {2, 2, 2, 2, 2})})).polynomial.is_zero());
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> letters(static_cast<std::size_t>(k), 1);
    const auto r = krammer_polynomial(MonodromyList(2, {BraidWord(2, letters)}));
    CHECK(r.polynomial == normalize(pow(P("t*q^2"), k) - 1));
  }
  CHECK(krammer_polynomial(MonodromyList(3, {BraidWord(3)})).polynomial.is_zero());
}

TEST_CASE("several fibers") {
  const BraidWord w = parse_braid(golden::worked_word(), 3);
  const BraidWord u(3, {1, 2, 1, 2, 1, 2});
  const MonodromyList two(3, {w, u});
  const auto r = krammer_polynomial(two);
  CHECK(r.per_fiber.size() == 2);
  for (const auto& f : r.per_fiber) {
    if (!f.is_zero()) CHECK(divides(r.polynomial, f));
  }
  // gcd over all 20 minors, by brute force.
  const PolyMatrix l = libgober_matrix(two);
  LaurentPoly g;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) g = gcd(g, det_cofactor(select_rows(l, {a, b, c})));
    }
  }
  CHECK(r.polynomial == g);
  CHECK(krammer_polynomial(MonodromyList(3, {u, w})).polynomial == r.polynomial);
  CHECK(krammer_polynomial(MonodromyList(3, {w, u, BraidWord(3)})).polynomial == r.polynomial);
  CHECK(krammer_polynomial(MonodromyList(3, {w, BraidWord(3)})).polynomial ==
        krammer_polynomial(MonodromyList(3, {w})).polynomial);
}

TEST_CASE("minor cap") {
  const BraidWord a(3, {1, 1}), b(3, {2, 2});
  const MonodromyList m(3, {a, b, BraidWord(3, {1, 2, 1, 2, 1, 2})});
  const auto full = krammer_polynomial(m);
  const auto capped = krammer_polynomial(m, 1);
  CHECK(capped.minors_enumerated <= 1);
  if (!capped.exact) CHECK(divides(full.polynomial, capped.polynomial));
}

TEST_CASE("random essential words have polynomial 0") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> strands(4, 6);
  std::uniform_int_distribution<int> len(1, 12);
  for (int i = 0; i < 30; ++i) {
    const BraidWord w = random_essential(rng, strands(rng), len(rng));
    REQUIRE(is_essential(w));
    CHECK_MESSAGE(krammer_polynomial(MonodromyList(w.strands(), {w})).polynomial.is_zero(), to_string(w));
  }
}

TEST_CASE("Alexander polynomial") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> letters(static_cast<std::size_t>(2 * k), 1);
    const auto r = alexander_polynomial(MonodromyList(2, {BraidWord(2, letters)}));
    CHECK(r.polynomial == normalize(pow(P("t"), 2 * k) - 1));
    for (const auto& term : r.polynomial.terms()) CHECK(term.exp.q == 0);
  }
  CHECK(alexander_polynomial(MonodromyList(3, {BraidWord(3)})).polynomial.is_zero());
  const auto six = alexander_polynomial(MonodromyList(2, {BraidWord(2, {1, 1, 1, 1, 1, 1})}));
  CHECK(divides(P("t^2 - t + 1"), six.polynomial));
  const auto worked = alexander_polynomial(MonodromyList(3, {parse_braid(golden::worked_word(), 3)}));
  CHECK(worked.libgober_matrix.cols() == 2);
  for (const auto& term : worked.polynomial.terms()) CHECK(term.exp.q == 0);
}
