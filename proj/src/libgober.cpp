#include "krammer/libgober.hpp"

#include "krammer/errors.hpp"
#include "krammer/representations.hpp"

namespace krammer {

namespace {

template <class Image>
PolyMatrix stack_blocks(const MonodromyList& m, Eigen::Index d, Image image) {
  PolyMatrix out(static_cast<Eigen::Index>(m.fibers()) * d, d);
  Eigen::Index row = 0;
  for (const auto& w : m.words()) {
    out.middleRows(row, d) = sub_identity(image(w));
    row += d;
  }
  return out;
}

InvariantResult evaluate(PolyMatrix stacked, Eigen::Index d, std::optional<std::size_t> cap) {
  InvariantResult r;
  for (Eigen::Index row = 0; row < stacked.rows(); row += d) {
    r.per_fiber.push_back(normalize(det(stacked.middleRows(row, d))));
  }
  if (r.per_fiber.size() == 1) {
    r.polynomial = r.per_fiber.front();
    r.minors_enumerated = 1;
  } else {
    MinorsGcd g = minors_gcd(stacked, d, cap);
    r.polynomial = std::move(g.gcd);
    r.exact = g.exact;
    r.minors_enumerated = g.minors_enumerated;
  }
  r.libgober_matrix = std::move(stacked);
  return r;
}

}  // namespace

MonodromyList::MonodromyList(int strands, std::vector<BraidWord> words) : strands_(strands), words_(std::move(words)) {
  if (strands < 2) throw IndexOutOfRange("monodromy needs at least 2 strands");
  if (words_.empty()) throw DimensionMismatch("monodromy list must contain at least one fiber");
  for (const auto& w : words_) {
    if (w.strands() != strands) throw DimensionMismatch("all monodromy words must lie in the same braid group");
  }
}

PolyMatrix libgober_matrix(const MonodromyList& m) {
  const Eigen::Index d = m.strands() * (m.strands() - 1) / 2;
  return stack_blocks(m, d, [](const BraidWord& w) { return krammer_word(w); });
}

InvariantResult krammer_polynomial(const MonodromyList& m, std::optional<std::size_t> minor_cap) {
  const Eigen::Index d = m.strands() * (m.strands() - 1) / 2;
  return evaluate(libgober_matrix(m), d, minor_cap);
}

InvariantResult alexander_polynomial(const MonodromyList& m, std::optional<std::size_t> minor_cap) {
  const Eigen::Index d = m.strands() - 1;
  return evaluate(stack_blocks(m, d, [](const BraidWord& w) { return burau_word(w); }), d, minor_cap);
}

}  // namespace krammer
