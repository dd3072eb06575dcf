#pragma once

// Libgober matrices of a global braid monodromy and the GCD-of-maximal-minors
// invariant extracted from them.

#include <optional>
#include <vector>

#include "krammer/braid.hpp"
#include "krammer/polymatrix.hpp"

namespace krammer {

// Local monodromies of the singular fibers, all in the same B_n.
class MonodromyList {
 public:
  MonodromyList(int strands, std::vector<BraidWord> words);

  int strands() const { return strands_; }
  const std::vector<BraidWord>& words() const { return words_; }
  std::size_t fibers() const { return words_.size(); }

 private:
  int strands_;
  std::vector<BraidWord> words_;
};

struct InvariantResult {
  PolyMatrix libgober_matrix;                // N x d, N = r * d
  LaurentPoly polynomial;                    // normalized GCD of the order-d minors
  std::vector<LaurentPoly> per_fiber;        // normalized det of each block
  bool exact = true;                         // false when the minor cap was hit
  std::size_t minors_enumerated = 0;
};

// Vertical stack of K(w_j) - I in list order.
PolyMatrix libgober_matrix(const MonodromyList& m);

// Krammer polynomial. `minor_cap` bounds how many maximal minors are
// enumerated; when it is hit before the GCD reaches a unit, the result is a
// multiple of the true invariant and `exact` is false.
InvariantResult krammer_polynomial(const MonodromyList& m, std::optional<std::size_t> minor_cap = std::nullopt);

// Same construction with the reduced Burau representation: GCD of the
// order-(n-1) minors, a polynomial in t alone.
InvariantResult alexander_polynomial(const MonodromyList& m, std::optional<std::size_t> minor_cap = std::nullopt);

}  // namespace krammer
