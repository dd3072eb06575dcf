#pragma once

// Dense matrices over exact rings.
//
// Storage is Eigen's dense Matrix with a ring element as the scalar. The
// algorithms here are written against Eigen::MatrixBase and a small
// ring_traits customization point, so the same determinant code runs over
// Z[t^±1, q^±1] and, in tests, over plain integers.

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "krammer/errors.hpp"
#include "krammer/laurent.hpp"

namespace Eigen {

template <>
struct NumTraits<krammer::LaurentPoly> : GenericNumTraits<krammer::LaurentPoly> {
  using Real = krammer::LaurentPoly;
  using NonInteger = krammer::LaurentPoly;
  using Literal = krammer::LaurentPoly;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 256
  };

  // Only consulted by Eigen's stream output.
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

}  // namespace Eigen

namespace krammer {

template <class Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using PolyMatrix = Dense<LaurentPoly>;
using PolyRowVector = Eigen::Matrix<LaurentPoly, 1, Eigen::Dynamic>;
using PolyColVector = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, 1>;

// Operations an exact integral domain must supply to the algorithms below.
template <class Scalar, class = void>
struct ring_traits;

template <>
struct ring_traits<LaurentPoly> {
  static bool is_zero(const LaurentPoly& a) { return a.is_zero(); }
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) { return krammer::exact_div(a, b); }
  static LaurentPoly cross_div(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c,
                               const LaurentPoly& d, const LaurentPoly& p) {
    return krammer::cross_div(a, b, c, d, p);
  }
};

template <class I>
struct ring_traits<I, std::enable_if_t<std::is_integral_v<I>>> {
  static bool is_zero(I a) { return a == 0; }
  static I exact_div(I a, I b) {
    if (b == 0 || a % b != 0) throw NotDivisible();
    return a / b;
  }
  static I cross_div(I a, I b, I c, I d, I p) { return exact_div(a * b - c * d, p); }
};

template <>
struct ring_traits<mpz_class> {
  static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
  static mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw NotDivisible();
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static mpz_class cross_div(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d,
                             const mpz_class& p) {
    return exact_div(a * b - c * d, p);
  }
};

template <class Derived>
void require_square(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) throw NotSquare();
}

// Product with dimension checking and zero-skipping; a.cols() must equal b.rows().
template <class DA, class DB>
Dense<typename DA::Scalar> matmul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Dense<Scalar> out = Dense<Scalar>::Constant(a.rows(), b.cols(), Scalar(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (ring_traits<Scalar>::is_zero(aik)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (ring_traits<Scalar>::is_zero(bkj)) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

template <class Scalar>
Dense<Scalar> identity(Eigen::Index m) {
  Dense<Scalar> id = Dense<Scalar>::Constant(m, m, Scalar(0));
  for (Eigen::Index i = 0; i < m; ++i) id(i, i) = Scalar(1);
  return id;
}

inline PolyMatrix poly_identity(Eigen::Index m) { return identity<LaurentPoly>(m); }

// a - I.
template <class Derived>
Dense<typename Derived::Scalar> sub_identity(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  require_square(a);
  Dense<Scalar> out = a;
  for (Eigen::Index i = 0; i < out.rows(); ++i) out(i, i) -= Scalar(1);
  return out;
}

// Laplace expansion along the first row. Exponential; used directly for
// small sizes and as the oracle for Bareiss elsewhere.
template <class Derived>
typename Derived::Scalar det_cofactor(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  require_square(a);
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Scalar acc(0);
  Dense<Scalar> minor(n - 1, n - 1);
  for (Eigen::Index c = 0; c < n; ++c) {
    if (ring_traits<Scalar>::is_zero(a(0, c))) continue;
    for (Eigen::Index i = 1; i < n; ++i) {
      for (Eigen::Index j = 0, mj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, mj++) = a(i, j);
      }
    }
    Scalar term = a(0, c) * det_cofactor(minor);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

// Fraction-free Gaussian elimination. The pivot is the first non-zero entry
// at or below the diagonal in the current column; an all-zero column means a
// zero determinant.
template <class Derived>
typename Derived::Scalar det_bareiss(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using R = ring_traits<Scalar>;
  require_square(a);
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Dense<Scalar> m = a;
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && R::is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = R::cross_div(m(k, k), m(i, j), m(i, k), m(k, j), prev);
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  Scalar result = m(n - 1, n - 1);
  if (negate) result = -result;
  return result;
}

template <class Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& a) {
  require_square(a);
  return a.rows() <= 3 ? det_cofactor(a) : det_bareiss(a);
}

// Transposed cofactor matrix: adjugate(a) * a == det(a) * I.
template <class Derived>
Dense<typename Derived::Scalar> adjugate(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  require_square(a);
  const Eigen::Index n = a.rows();
  Dense<Scalar> adj = Dense<Scalar>::Constant(n, n, Scalar(0));
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  Dense<Scalar> minor(n - 1, n - 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (Eigen::Index j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = a(i, j);
        }
        ++mi;
      }
      Scalar cof = det(minor);
      adj(c, r) = ((r + c) % 2 == 0) ? cof : Scalar(-cof);
    }
  }
  return adj;
}

// Rows of `a` selected by `rows`, in the given order.
template <class Derived>
Dense<typename Derived::Scalar> select_rows(const Eigen::MatrixBase<Derived>& a, const std::vector<Eigen::Index>& rows) {
  Dense<typename Derived::Scalar> out(static_cast<Eigen::Index>(rows.size()), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = a.row(rows[i]);
  return out;
}

template <class Derived>
bool is_scalar_matrix(const Eigen::MatrixBase<Derived>& a) {
  using R = ring_traits<typename Derived::Scalar>;
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i == j ? !(a(i, j) == a(0, 0)) : !R::is_zero(a(i, j))) return false;
    }
  }
  return true;
}

// Inverse of a matrix whose determinant is a unit of the Laurent ring.
PolyMatrix inverse_unit_det(const PolyMatrix& a);

struct MinorsGcd {
  LaurentPoly gcd;  // normalized; 0 when every enumerated minor vanished
  bool exact = true;
  std::size_t minors_enumerated = 0;
};

// GCD of all order-d minors of an N x d matrix, enumerating row subsets in
// lexicographic order and stopping early once the running GCD is a unit.
// With a cap, stops after `cap` minors; the result is then only known to be
// a multiple of the true GCD and `exact` is false.
MinorsGcd minors_gcd(const PolyMatrix& a, Eigen::Index d, std::optional<std::size_t> cap = std::nullopt);

// Pretty layout, one bracketed row per line with aligned columns.
std::string to_string(const PolyMatrix& a);

}  // namespace krammer
