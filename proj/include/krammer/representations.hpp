#pragma once

// Krammer (Lawrence-Krammer) and reduced Burau representations of B_n as
// explicit matrices over Z[t^±1, q^±1].
//
// Convention: row action. The row of K(sigma_k) indexed by the basis pair
// (i, j) holds the coefficients of K(sigma_k)(e_{i,j}); vectors multiply on
// the left (v -> v * M), and the image of a word is the product of its
// generator matrices in letter order.

#include <string>
#include <utility>
#include <vector>

#include "krammer/braid.hpp"
#include "krammer/polymatrix.hpp"

namespace krammer {

// Basis pairs (i, j), 1 <= i < j <= n, in lexicographic order. Block delta_k
// is the run of pairs with first index k and has n - k entries.
class KrammerBasis {
 public:
  explicit KrammerBasis(int strands);

  int strands() const { return n_; }
  int dimension() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  // 0-based position of (i, j).
  int index(int i, int j) const;
  // 0-based position of the first pair of block delta_k.
  int block_start(int k) const { return index(k, k + 1); }
  int block_size(int k) const { return n_ - k; }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

// K(sigma_k) for sign = +1, its exact inverse for sign = -1. The inverse is
// adjugate / det, valid since det is a unit. Matrices are cached per n.
PolyMatrix krammer_generator(int strands, int k, int sign = +1);

// K(w): product of generator matrices in letter order; identity for the empty word.
PolyMatrix krammer_word(const BraidWord& w);

// Column of K(sigma_k) at basis position (k, k+1).
PolyColVector nontrivial_column(int strands, int k);

// One slot of the fixed-vector pattern before clearing denominators:
// x * q^e, q^e, or y * q^e.
struct EigenSlot {
  enum class Kind { X, Const, Y };
  Kind kind;
  int q_power;
};

std::string to_string(const EigenSlot& s);

// A common left fixed vector of K(sigma_k), k != missing, with entries in the
// Laurent ring. `scale` is the factor that cleared the denominators of x and y.
struct EssentialEigenvector {
  int strands;
  int missing;
  std::vector<EigenSlot> pattern;
  LaurentPoly x_numerator;  // x * scale
  LaurentPoly y_numerator;  // y * scale
  LaurentPoly scale;
  PolyRowVector entries;
};

// Requires n >= 4 and 1 < missing < n - 1. Throws IndexOutOfRange otherwise.
//   x = t q (1 - q^{n-i}) / (t q^i - 1)
//   y = t q^{n-i+1} (1 - q^i) / (t q^{n-i} - 1)
// scale = lcm(t q^i - 1, t q^{n-i} - 1).
EssentialEigenvector essential_eigenvector(int strands, int missing);

// Standard reduced Burau matrix of sigma_k, (n-1) x (n-1), in the variable t.
PolyMatrix burau_reduced_generator(int strands, int k, int sign = +1);
PolyMatrix burau_word(const BraidWord& w);

// Result of checking one Artin relation.
struct RelationCheck {
  std::string relation;  // e.g. "s1 s3 = s3 s1"
  bool holds;
};

// All commuting and braid relations of B_n in the given representation.
std::vector<RelationCheck> check_krammer_relations(int strands);
std::vector<RelationCheck> check_burau_relations(int strands);

}  // namespace krammer
