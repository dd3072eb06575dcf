#include "krammer/representations.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "krammer/errors.hpp"

namespace krammer {

namespace {

const LaurentPoly kT = LaurentPoly::t();

LaurentPoly q_pow(int e) { return LaurentPoly::monomial(1, 0, e); }
LaurentPoly tq_pow(int e) { return LaurentPoly::monomial(1, 1, e); }

void check_generator(int strands, int k) {
  if (strands < 2) throw IndexOutOfRange("braid group needs at least 2 strands");
  if (k < 1 || k > strands - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(k) + " outside [1, " + std::to_string(strands - 1) + "]");
  }
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw IndexOutOfRange("generator sign must be +1 or -1");
}

PolyMatrix build_krammer_generator(const KrammerBasis& basis, int k) {
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly one(1);
  const LaurentPoly q_minus_1 = q - one;
  const int m = basis.dimension();
  PolyMatrix M = PolyMatrix::Constant(m, m, LaurentPoly());
  const int kk = basis.index(k, k + 1);
  for (const auto& [i, j] : basis.pairs()) {
    const int r = basis.index(i, j);
    if (i == k && j == k + 1) {
      M(r, kk) = tq_pow(2);
    } else if (j == k && i < k) {
      M(r, basis.index(i, k)) = one - q;
      M(r, basis.index(i, k + 1)) = q;
    } else if (j == k + 1 && i < k) {
      M(r, basis.index(i, k)) = one;
      M(r, kk) = tq_pow(k - i + 1) * q_minus_1;
    } else if (i == k && j > k + 1) {
      M(r, kk) = tq_pow(1) * q_minus_1;
      M(r, basis.index(k + 1, j)) = q;
    } else if (i == k + 1 && j > k + 1) {
      M(r, basis.index(k, j)) = one;
      M(r, basis.index(k + 1, j)) = one - q;
    } else if (j < k || i > k + 1) {
      M(r, r) = one;
    } else {
      // i < k < k + 1 < j
      M(r, r) = one;
      M(r, kk) = tq_pow(k - i) * q_minus_1 * q_minus_1;
    }
  }
  return M;
}

// Generator matrices of one B_n. Positive generators are built eagerly;
// inverses are computed on first use, once, under std::call_once.
class GeneratorSet {
 public:
  using Builder = PolyMatrix (*)(int strands, int k);

  GeneratorSet(int strands, Builder build)
      : once_(std::make_unique<std::once_flag[]>(static_cast<std::size_t>(strands - 1))),
        inverse_(static_cast<std::size_t>(strands - 1)) {
    for (int k = 1; k < strands; ++k) positive_.push_back(build(strands, k));
  }

  const PolyMatrix& get(int k, int sign) const {
    const auto idx = static_cast<std::size_t>(k - 1);
    if (sign > 0) return positive_[idx];
    std::call_once(once_[idx], [&] { inverse_[idx] = inverse_unit_det(positive_[idx]); });
    return inverse_[idx];
  }

 private:
  std::vector<PolyMatrix> positive_;
  std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<PolyMatrix> inverse_;
};

template <GeneratorSet::Builder build>
const GeneratorSet& cached_generators(int strands) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GeneratorSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[strands];
  if (!slot) slot = std::make_unique<GeneratorSet>(strands, build);
  return *slot;
}

PolyMatrix krammer_builder(int strands, int k) { return build_krammer_generator(KrammerBasis(strands), k); }

PolyMatrix burau_builder(int strands, int k) {
  const int d = strands - 1;
  PolyMatrix M = poly_identity(d);
  const int c = k - 1;
  M(c, c) = -kT;
  if (c - 1 >= 0) M(c - 1, c) = kT;
  if (c + 1 < d) M(c + 1, c) = LaurentPoly(1);
  return M;
}

template <class WordImage>
std::vector<RelationCheck> check_relations(int strands, WordImage image) {
  std::vector<RelationCheck> out;
  for (int i = 1; i < strands; ++i) {
    for (int j = i + 2; j < strands; ++j) {
      const BraidWord lhs(strands, {i, j});
      const BraidWord rhs(strands, {j, i});
      out.push_back({to_string(lhs) + " = " + to_string(rhs), image(lhs) == image(rhs)});
    }
    if (i + 1 < strands) {
      const BraidWord lhs(strands, {i, i + 1, i});
      const BraidWord rhs(strands, {i + 1, i, i + 1});
      out.push_back({to_string(lhs) + " = " + to_string(rhs), image(lhs) == image(rhs)});
    }
  }
  return out;
}

}  // namespace

KrammerBasis::KrammerBasis(int strands) : n_(strands) {
  if (strands < 2) throw IndexOutOfRange("braid group needs at least 2 strands");
  for (int i = 1; i <= strands; ++i) {
    for (int j = i + 1; j <= strands; ++j) pairs_.emplace_back(i, j);
  }
}

int KrammerBasis::index(int i, int j) const {
  if (i < 1 || j <= i || j > n_) {
    throw IndexOutOfRange("no basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ") for n=" +
                          std::to_string(n_));
  }
  // Pairs with first index a < i contribute n - a entries each.
  return (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
}

PolyMatrix krammer_generator(int strands, int k, int sign) {
  check_generator(strands, k);
  check_sign(sign);
  return cached_generators<krammer_builder>(strands).get(k, sign);
}

PolyMatrix krammer_word(const BraidWord& w) {
  const int m = w.strands() * (w.strands() - 1) / 2;
  const auto& gens = cached_generators<krammer_builder>(w.strands());
  PolyMatrix acc = poly_identity(m);
  for (int g : w.letters()) acc = matmul(acc, gens.get(std::abs(g), g > 0 ? 1 : -1));
  return acc;
}

PolyColVector nontrivial_column(int strands, int k) {
  check_generator(strands, k);
  const KrammerBasis basis(strands);
  return cached_generators<krammer_builder>(strands).get(k, 1).col(basis.index(k, k + 1));
}

std::string to_string(const EigenSlot& s) {
  std::string out;
  switch (s.kind) {
    case EigenSlot::Kind::X: out = "x"; break;
    case EigenSlot::Kind::Y: out = "y"; break;
    case EigenSlot::Kind::Const: break;
  }
  if (s.q_power == 0) return out.empty() ? "1" : out;
  out += 'q';
  if (s.q_power != 1) out += '^' + std::to_string(s.q_power);
  return out;
}

EssentialEigenvector essential_eigenvector(int strands, int missing) {
  if (strands < 4 || missing <= 1 || missing >= strands - 1) {
    throw IndexOutOfRange("essential eigenvector needs n >= 4 and 1 < i < n-1; got n=" + std::to_string(strands) +
                          ", i=" + std::to_string(missing));
  }
  const int n = strands;
  const int i = missing;
  const LaurentPoly one(1);
  const LaurentPoly den_x = tq_pow(i) - one;
  const LaurentPoly den_y = tq_pow(n - i) - one;
  // t q^a - 1 is irreducible, so the two denominators are coprime unless equal.
  const LaurentPoly scale = (i == n - i) ? den_x : den_x * den_y;

  EssentialEigenvector v{n, i, {}, {}, {}, scale, {}};
  v.x_numerator = tq_pow(1) * (one - q_pow(n - i)) * exact_div(scale, den_x);
  v.y_numerator = tq_pow(n - i + 1) * (one - q_pow(i)) * exact_div(scale, den_y);

  const KrammerBasis basis(n);
  v.entries.resize(basis.dimension());
  for (const auto& [a, b] : basis.pairs()) {
    EigenSlot slot{};
    if (a < i && b <= i) {
      slot = {EigenSlot::Kind::X, b - 2};
    } else if (a <= i) {
      slot = {EigenSlot::Kind::Const, b - i - 1};
    } else {
      slot = {EigenSlot::Kind::Y, b - i - 2};
    }
    v.pattern.push_back(slot);
    const LaurentPoly& base = slot.kind == EigenSlot::Kind::X   ? v.x_numerator
                              : slot.kind == EigenSlot::Kind::Y ? v.y_numerator
                                                                : v.scale;
    v.entries(basis.index(a, b)) = base * q_pow(slot.q_power);
  }
  return v;
}

PolyMatrix burau_reduced_generator(int strands, int k, int sign) {
  check_generator(strands, k);
  check_sign(sign);
  return cached_generators<burau_builder>(strands).get(k, sign);
}

PolyMatrix burau_word(const BraidWord& w) {
  const auto& gens = cached_generators<burau_builder>(w.strands());
  PolyMatrix acc = poly_identity(w.strands() - 1);
  for (int g : w.letters()) acc = matmul(acc, gens.get(std::abs(g), g > 0 ? 1 : -1));
  return acc;
}

std::vector<RelationCheck> check_krammer_relations(int strands) {
  return check_relations(strands, [](const BraidWord& w) { return krammer_word(w); });
}

std::vector<RelationCheck> check_burau_relations(int strands) {
  return check_relations(strands, [](const BraidWord& w) { return burau_word(w); });
}

}  // namespace krammer
