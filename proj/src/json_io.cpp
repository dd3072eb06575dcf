#include "krammer/json_io.hpp"

#include "krammer/errors.hpp"

namespace krammer {

namespace {

Json rational_json(const mpq_class& r) { return r.get_str(); }

Json pair_json(const std::pair<int, int>& p) { return Json::array({p.first, p.second}); }

}  // namespace

Json to_json(const LaurentPoly& a) {
  Json out = Json::array();
  for (const auto& term : a.terms()) out.push_back(Json::array({term.exp.t, term.exp.q, term.coeff.get_str()}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("laurent polynomial: expected an array of [e_t, e_q, coeff] triples");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
      throw ParseError("laurent polynomial: bad term " + t.dump());
    }
    mpz_class c;
    if (t[2].is_string()) {
      if (c.set_str(t[2].get<std::string>(), 10) != 0) throw ParseError("laurent polynomial: bad coefficient " + t[2].dump());
    } else if (t[2].is_number_integer()) {
      c = static_cast<long>(t[2].get<std::int64_t>());
    } else {
      throw ParseError("laurent polynomial: bad coefficient " + t[2].dump());
    }
    terms.push_back({{t[0].get<int>(), t[1].get<int>()}, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const PolyMatrix& a) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) entries.push_back(to_json(a(i, j)));
  }
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ParseError("matrix: expected {rows, cols, entries}");
  }
  const auto rows = j["rows"].get<Eigen::Index>();
  const auto cols = j["cols"].get<Eigen::Index>();
  const auto& entries = j["entries"];
  if (rows <= 0 || cols <= 0 || !entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows * cols) {
    throw ParseError("matrix: entries length does not match rows * cols");
  }
  PolyMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = laurent_from_json(entries[static_cast<std::size_t>(i * cols + c)]);
  }
  return m;
}

Json to_json(const BraidWord& w) {
  return Json{{"strands", w.strands()}, {"letters", w.letters()}, {"word", to_string(w)}};
}

Json to_json(const InvariantResult& r, bool include_matrix) {
  Json out{{"polynomial", to_json(r.polynomial)},
           {"polynomial_text", to_string(r.polynomial)},
           {"per_fiber", Json::array()},
           {"exact", r.exact},
           {"minors_enumerated", r.minors_enumerated}};
  for (const auto& p : r.per_fiber) out["per_fiber"].push_back(to_json(p));
  if (include_matrix) out["libgober_matrix"] = to_json(r.libgober_matrix);
  return out;
}

Json to_json(const EssentialEigenvector& v) {
  const KrammerBasis basis(v.strands);
  Json pattern = Json::array();
  Json pairs = Json::array();
  for (std::size_t k = 0; k < v.pattern.size(); ++k) {
    pattern.push_back(to_string(v.pattern[k]));
    pairs.push_back(pair_json(basis.pairs()[k]));
  }
  Json entries = Json::array();
  for (Eigen::Index k = 0; k < v.entries.size(); ++k) entries.push_back(to_json(v.entries(k)));
  return Json{{"n", v.strands},
              {"missing", v.missing},
              {"basis", std::move(pairs)},
              {"pattern", std::move(pattern)},
              {"x_numerator", to_json(v.x_numerator)},
              {"y_numerator", to_json(v.y_numerator)},
              {"scale", to_json(v.scale)},
              {"entries", std::move(entries)}};
}

Json to_json(const SingularFiberInfo& f) {
  Json out{{"x", rational_json(f.x)}, {"parts", f.parts}};
  out["local_degree"] = f.local_degree ? Json(*f.local_degree) : Json(nullptr);
  return out;
}

Json to_json(const CurveReport& r) {
  Json out{{"n", r.strands}};
  if (r.family) {
    const auto& f = *r.family;
    Json coeffs = Json::array();
    for (const auto& c : f.family.c) coeffs.push_back(rational_json(c));
    out["family"] = Json{{"kind", "one_fiber"},
                         {"d", f.family.d},
                         {"p", rational_json(f.family.p)},
                         {"e", rational_json(f.family.e)},
                         {"c", std::move(coeffs)},
                         {"computed", to_json(f.computed)},
                         {"computed_text", to_string(f.computed)},
                         {"formula", to_json(f.formula)},
                         {"formula_text", to_string(f.formula)},
                         {"formula_matches", f.formula_matches},
                         {"formula_established", f.formula_established}};
  } else {
    out["family"] = nullptr;
  }
  out["fibers"] = Json::array();
  for (const auto& fr : r.fibers) {
    Json j = to_json(fr.fiber);
    j["local_polynomial"] = fr.local_polynomial ? to_json(*fr.local_polynomial) : Json(nullptr);
    j["reason"] = fr.reason;
    out["fibers"].push_back(std::move(j));
  }
  out["unresolved"] = Json::array();
  for (const auto& [pair, residual] : r.unresolved) {
    out["unresolved"].push_back(Json{{"pair", pair_json(pair)}, {"residual", to_string(residual)}});
  }
  out["supplied"] = r.supplied ? to_json(*r.supplied) : Json(nullptr);
  return out;
}

RationalPoly rational_poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("curve component: expected a coefficient list");
  std::vector<mpq_class> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
    } else if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else {
      throw ParseError("curve component: bad coefficient " + c.dump());
    }
  }
  return RationalPoly(std::move(coeffs));
}

CompletelyReducibleCurve curve_from_json(const Json& j) {
  const Json& list = j.is_object() ? j.at("components") : j;
  if (!list.is_array()) throw ParseError("curve: expected a list of components");
  std::vector<RationalPoly> comps;
  for (const auto& c : list) comps.push_back(rational_poly_from_json(c));
  return CompletelyReducibleCurve(std::move(comps));
}

}  // namespace krammer
