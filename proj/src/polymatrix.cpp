#include "krammer/polymatrix.hpp"

#include <algorithm>
#include <numeric>

namespace krammer {

PolyMatrix inverse_unit_det(const PolyMatrix& a) {
  const LaurentPoly d = det(a);
  if (!d.is_unit()) throw NotDivisible();
  const LaurentPoly inv = pow(d, -1);
  PolyMatrix adj = adjugate(a);
  for (Eigen::Index i = 0; i < adj.size(); ++i) adj(i) *= inv;
  return adj;
}

MinorsGcd minors_gcd(const PolyMatrix& a, Eigen::Index d, std::optional<std::size_t> cap) {
  if (d <= 0 || a.cols() != d || a.rows() < d) {
    throw DimensionMismatch("minors_gcd: need an N x d matrix with N >= d; got " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", d=" + std::to_string(d));
  }
  const Eigen::Index n = a.rows();
  std::vector<bool> zero_row(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    zero_row[static_cast<std::size_t>(i)] =
        std::all_of(a.row(i).begin(), a.row(i).end(), [](const LaurentPoly& x) { return x.is_zero(); });
  }

  MinorsGcd result;
  std::vector<Eigen::Index> rows(static_cast<std::size_t>(d));
  std::iota(rows.begin(), rows.end(), Eigen::Index{0});
  while (true) {
    if (cap && result.minors_enumerated >= *cap) {
      result.exact = false;
      return result;
    }
    ++result.minors_enumerated;
    const bool trivially_zero =
        std::any_of(rows.begin(), rows.end(), [&](Eigen::Index r) { return zero_row[static_cast<std::size_t>(r)]; });
    if (!trivially_zero) {
      result.gcd = gcd(result.gcd, det(select_rows(a, rows)));
      if (result.gcd.is_unit()) {
        result.gcd = LaurentPoly(1);
        return result;
      }
    }
    // Advance to the next subset in lexicographic order.
    Eigen::Index k = d - 1;
    while (k >= 0 && rows[static_cast<std::size_t>(k)] == n - d + k) --k;
    if (k < 0) break;
    ++rows[static_cast<std::size_t>(k)];
    for (Eigen::Index j = k + 1; j < d; ++j) rows[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(j - 1)] + 1;
  }
  return result;
}

std::string to_string(const PolyMatrix& a) {
  std::vector<std::string> cells(static_cast<std::size_t>(a.size()));
  std::vector<std::size_t> width(static_cast<std::size_t>(a.cols()), 0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      auto& c = cells[static_cast<std::size_t>(i * a.cols() + j)];
      c = to_string(a(i, j));
      width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], c.size());
    }
  }
  std::string out;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    out += "[ ";
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const auto& c = cells[static_cast<std::size_t>(i * a.cols() + j)];
      out += c;
      if (j + 1 < a.cols()) {
        out += std::string(width[static_cast<std::size_t>(j)] - c.size(), ' ');
        out += "  ";
      }
    }
    out += " ]\n";
  }
  return out;
}

}  // namespace krammer
