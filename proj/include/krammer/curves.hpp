#pragma once

// Completely reducible n-gonal curves (y - y_1(x)) ... (y - y_n(x)) with
// rational polynomial components, their singular fibers, and the braid
// monodromies of the families whose local monodromy is a power of a full twist.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krammer/braid.hpp"
#include "krammer/libgober.hpp"
#include "krammer/rational_poly.hpp"

namespace krammer {

class CompletelyReducibleCurve {
 public:
  // Throws InvalidCurve unless there are >= 2 pairwise distinct components.
  explicit CompletelyReducibleCurve(std::vector<RationalPoly> components);

  const std::vector<RationalPoly>& components() const { return components_; }
  int degree() const { return static_cast<int>(components_.size()); }

 private:
  std::vector<RationalPoly> components_;
};

struct SingularFiberInfo {
  mpq_class x;
  // Components (1-based) grouped by common y-value at x; parts of size >= 2 only,
  // each part ascending, parts ordered by their first index.
  std::vector<std::vector<int>> parts;
  // Common vanishing order of every pairwise difference inside the parts,
  // when there is one.
  std::optional<int> local_degree;
};

struct FiberSurvey {
  std::vector<SingularFiberInfo> fibers;
  // Pairs (1-based) whose difference keeps a factor without rational roots,
  // together with that factor.
  std::vector<std::pair<std::pair<int, int>, RationalPoly>> unresolved;
};

// Every collision at a rational x; pairs with irrational collisions are listed
// instead of raising.
FiberSurvey survey_fibers(const CompletelyReducibleCurve& c);

// Sorted ascending by x. Throws IrrationalCollisionUnresolved for the first
// pair (lexicographic) whose difference has non-rational roots.
std::vector<SingularFiberInfo> singular_fibers(const CompletelyReducibleCurve& c);

// (full twist)^d in B_n.
BraidWord one_fiber_monodromy(int strands, int d);

// Full twist on strands a..b, (sigma_a ... sigma_{b-1})^m with m = b - a + 1,
// raised to the d-th power. Requires 1 <= a <= b <= n, m < n, m >= 2, d >= 1.
BraidWord partial_fiber_monodromy(int strands, int a, int b, int d);

// Components y_i = c_i (x - p)^d + e with pairwise distinct c_i.
struct OneFiberFamily {
  int d;
  mpq_class p;
  mpq_class e;
  std::vector<mpq_class> c;
};

std::optional<OneFiberFamily> detect_one_fiber_family(const CompletelyReducibleCurve& c);

// Closed form (t^{2d} q^{6d} - 1)^{C(n,2)}, normalized.
LaurentPoly one_fiber_formula(int strands, int d);

struct FamilyReport {
  OneFiberFamily family;
  LaurentPoly computed;       // Krammer polynomial of one_fiber_monodromy(n, d)
  LaurentPoly formula;        // one_fiber_formula(n, d)
  bool formula_matches;
  bool formula_established;   // true only for n = 3
};

struct FiberReport {
  SingularFiberInfo fiber;
  // Set to 0 when every part has fewer than n components; unset when all
  // components meet and the local monodromy is not determined by the curve.
  std::optional<LaurentPoly> local_polynomial;
  std::string reason;
};

struct CurveReport {
  int strands;
  std::optional<FamilyReport> family;
  std::vector<FiberReport> fibers;
  std::vector<std::pair<std::pair<int, int>, RationalPoly>> unresolved;
  std::optional<InvariantResult> supplied;  // invariant of a user-supplied monodromy
};

CurveReport analyze(const CompletelyReducibleCurve& c, const std::optional<MonodromyList>& supplied = std::nullopt);

}  // namespace krammer
