#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "lgca/rational.hpp"

namespace Eigen {

// Rational plugs into Eigen as an exact scalar; only sums, products and
// comparisons are ever used, so the generic traits cover everything needed.
template <>
struct NumTraits<lgca::Rational> : GenericNumTraits<lgca::Rational> {
  using Real = lgca::Rational;
  using NonInteger = lgca::Rational;
  using Nested = lgca::Rational;
  using Literal = long long;

  static inline Real epsilon() { return {}; }
  static inline Real dummy_precision() { return {}; }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4,
  };
};

}  // namespace Eigen

namespace lgca {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<std::int64_t>;
using RatMatrix = DenseMatrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  return m.cast<Rational>();
}

// Exact entrywise comparison; Eigen's approximate comparisons have no place
// with integer or rational entries.
template <class Scalar>
bool exactly_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class Scalar>
bool exactly_zero(const DenseMatrix<Scalar>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == Scalar(0))) return false;
  return true;
}

template <class Scalar>
bool is_diagonal_01(const DenseMatrix<Scalar>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == j ? !(a(i, j) == Scalar(0)) && !(a(i, j) == Scalar(1))
                 : !(a(i, j) == Scalar(0)))
        return false;
    }
  return true;
}

}  // namespace lgca
