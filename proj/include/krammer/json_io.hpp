#pragma once

// JSON forms of the library values (nlohmann::json).

#include <json.hpp>

#include "krammer/braid.hpp"
#include "krammer/curves.hpp"
#include "krammer/libgober.hpp"
#include "krammer/representations.hpp"

namespace krammer {

using Json = nlohmann::ordered_json;

// [[e_t, e_q, "coefficient"], ...] in descending lex order.
Json to_json(const LaurentPoly& a);
LaurentPoly laurent_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": [...]} row-major.
Json to_json(const PolyMatrix& a);
PolyMatrix matrix_from_json(const Json& j);

Json to_json(const BraidWord& w);
Json to_json(const InvariantResult& r, bool include_matrix = false);
Json to_json(const EssentialEigenvector& v);
Json to_json(const SingularFiberInfo& f);
Json to_json(const CurveReport& r);

// Coefficients may be integers or strings "p/q".
RationalPoly rational_poly_from_json(const Json& j);
// Either a list of coefficient lists, or {"components": [...], "n"?: ..., "words"?: [...]}.
CompletelyReducibleCurve curve_from_json(const Json& j);

}  // namespace krammer
