#include <doctest.h>

#include <random>

#include "krammer/braid.hpp"
#include "krammer/errors.hpp"

using namespace krammer;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters;
  const int l = len(rng);
  for (int i = 0; i < l; ++i) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return BraidWord(n, letters);
}

FreeGroupWord rho(int n) {
  FreeGroupWord w;
  for (int j = 1; j <= n; ++j) w.push_back(j);
  return w;
}

FreeGroupWord image_of_rho(const BraidWord& w) {
  return apply_automorphism(act_on_free_group(w), rho(w.strands()));
}

}  // namespace

TEST_CASE("parse") {
  CHECK(parse_braid("s1 s2 s1 s2^4 s1 s2 s1", 3).letters() == std::vector<int>{1, 2, 1, 2, 2, 2, 2, 1, 2, 1});
  CHECK(parse_braid("s1 s2 s4", 5).letters() == std::vector<int>{1, 2, 4});
  CHECK(parse_braid("s1^-1 s1", 2).letters() == std::vector<int>{-1, 1});
  CHECK(parse_braid("1 2 -1", 3).letters() == std::vector<int>{1, 2, -1});
  CHECK(parse_braid("  ", 3).empty());
  CHECK(parse_braid("s2^0", 3).empty());
  CHECK_THROWS_AS(parse_braid("s3", 3), IndexOutOfRange);
  CHECK_THROWS_AS(parse_braid("0", 3), IndexOutOfRange);
  CHECK_THROWS_AS(parse_braid("s-1", 3), IndexOutOfRange);
  CHECK_THROWS_AS(parse_braid("sx", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^2x", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("s1", 1), IndexOutOfRange);
  CHECK_THROWS_AS(BraidWord(3, {3}), IndexOutOfRange);
}

TEST_CASE("serialize") {
  CHECK(to_string(parse_braid("s1 s2 s1 s2^4 s1 s2 s1", 3)) == "s1 s2 s1 s2^4 s1 s2 s1");
  CHECK(to_string(BraidWord(3, {1, -1, -1, 2})) == "s1 s1^-2 s2");
  CHECK(to_string(BraidWord(3)).empty());
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto w = random_word(rng, 5, 12);
    CHECK(parse_braid(to_string(w), 5) == w);
  }
}

TEST_CASE("word algebra") {
  const BraidWord a(4, {1, 2}), b(4, {-3});
  CHECK((a * b).letters() == std::vector<int>{1, 2, -3});
  CHECK(a.inverse().letters() == std::vector<int>{-2, -1});
  CHECK(a.power(2).letters() == std::vector<int>{1, 2, 1, 2});
  CHECK(a.power(-1) == a.inverse());
  CHECK(a.power(0).empty());
  CHECK_THROWS_AS(a * BraidWord(3, {1}), IndexOutOfRange);
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(BraidWord(3, {1, -1})).empty());
  CHECK(free_reduce(BraidWord(3, {1, 2, -2, -1})).empty());
  CHECK(free_reduce(BraidWord(3, {1, 2, 1})).letters() == std::vector<int>{1, 2, 1});
  std::mt19937 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto w = random_word(rng, 4, 15);
    const auto r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    CHECK(act_on_free_group(r) == act_on_free_group(w));
  }
}

TEST_CASE("support and essentiality") {
  CHECK(generator_support(BraidWord(5, {1, 2, 4})) == std::set<int>{1, 2, 4});
  CHECK(generator_support(BraidWord(5)).empty());
  CHECK(generator_support(BraidWord(5, {2, -2, 3})) == std::set<int>{2, 3});
  CHECK(is_essential(BraidWord(5, {1, 2, 4})));
  CHECK(missing_generators(BraidWord(5, {1, 2, 4})) == std::vector<int>{3});
  CHECK_FALSE(is_essential(parse_braid("s1 s2 s1 s2^4 s1 s2 s1", 3)));
  CHECK(is_essential(BraidWord(2)));
  // Raw word: s3 s3^-1 still counts as containing s3.
  CHECK_FALSE(is_essential(BraidWord(4, {3, -3, 1, 2})));
  CHECK(is_essential(free_reduce(BraidWord(4, {3, -3, 1, 2}))));
}

TEST_CASE("full twist") {
  CHECK(full_twist(2).letters() == std::vector<int>{1, 1});
  CHECK(full_twist(3).letters() == std::vector<int>{1, 2, 1, 2, 1, 2});
  CHECK(full_twist(4).length() == 12);
}

TEST_CASE("free group action: generator case list") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      const auto img = act_on_free_group(BraidWord(n, {i}));
      for (int j = 1; j <= n; ++j) {
        const auto& a = img[static_cast<std::size_t>(j - 1)];
        if (j == i) {
          CHECK(a == FreeGroupWord{i, i + 1, -i});
        } else if (j == i + 1) {
          CHECK(a == FreeGroupWord{i});
        } else {
          CHECK(a == FreeGroupWord{j});
        }
      }
      const auto inv = act_on_free_group(BraidWord(n, {-i}));
      CHECK(inv[static_cast<std::size_t>(i - 1)] == FreeGroupWord{i + 1});
      CHECK(inv[static_cast<std::size_t>(i)] == FreeGroupWord{-(i + 1), i, i + 1});
    }
  }
  CHECK(act_on_free_group(BraidWord(4)) == std::vector<FreeGroupWord>{{1}, {2}, {3}, {4}});
}

TEST_CASE("free group action fixes rho and sends generators to conjugates") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> strands(2, 6);
  for (int i = 0; i < 200; ++i) {
    const auto w = random_word(rng, strands(rng), 15);
    REQUIRE(image_of_rho(w) == rho(w.strands()));
    std::multiset<int> cores;
    for (const auto& a : act_on_free_group(w)) {
      REQUIRE(is_conjugate_of_generator(a));
      cores.insert(a[a.size() / 2]);
    }
    // The conjugated generators form a permutation of alpha_1..alpha_n.
    REQUIRE(cores.size() == static_cast<std::size_t>(w.strands()));
    REQUIRE(std::set<int>(cores.begin(), cores.end()).size() == cores.size());
  }
}

TEST_CASE("free group action respects the Artin relations") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        CHECK(act_on_free_group(BraidWord(n, {i, j})) == act_on_free_group(BraidWord(n, {j, i})));
      }
      if (i + 1 < n) {
        CHECK(act_on_free_group(BraidWord(n, {i, i + 1, i})) == act_on_free_group(BraidWord(n, {i + 1, i, i + 1})));
      }
      CHECK(act_on_free_group(BraidWord(n, {i, -i})) == act_on_free_group(BraidWord(n)));
    }
  }
}

TEST_CASE("free group helpers") {
  CHECK(free_group_reduce({1, 2, -2, -1, 3}) == FreeGroupWord{3});
  CHECK(free_group_inverse({1, -2}) == FreeGroupWord{2, -1});
  CHECK(is_conjugate_of_generator({1, 2, -1}));
  CHECK(is_conjugate_of_generator({3}));
  CHECK_FALSE(is_conjugate_of_generator({1, 2}));
  CHECK_FALSE(is_conjugate_of_generator({1, -2, -1}));
  CHECK(to_string(FreeGroupWord{1, -2}) == "a1 a2^-1");
  CHECK(to_string(FreeGroupWord{}) == "1");
}
