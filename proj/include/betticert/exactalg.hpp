#ifndef BETTICERT_EXACTALG_HPP
#define BETTICERT_EXACTALG_HPP

// Exact linear algebra over the rationals.
//
// Dense storage is Eigen's, the scalar is an unbounded-precision rational
// (GMP backed). The echelon routines are templated on the scalar but assume
// an exact field: pivots are chosen by `!= 0`, never by magnitude.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace betticert {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator. The result is always reduced.
Rational parse_rational(std::string_view text);

/// -1, 0 or +1.
int sign(const Rational& q);

Rational power(const Rational& base, unsigned exponent);

template <typename Scalar>
struct EchelonForm {
  Matrix<Scalar> reduced;              // reduced row echelon form
  std::vector<Eigen::Index> pivots;    // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <typename Derived>
EchelonForm<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  EchelonForm<Scalar> out{m, {}};
  Matrix<Scalar>& r = out.reduced;
  const Scalar zero(0);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Eigen::Index p = row;
    while (p < r.rows() && r(p, col) == zero) ++p;
    if (p == r.rows()) continue;
    if (p != row) r.row(p).swap(r.row(row));
    const Scalar pivot = r(row, col);
    for (Eigen::Index j = col; j < r.cols(); ++j) r(row, j) /= pivot;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == zero) continue;
      const Scalar factor = r(i, col);
      for (Eigen::Index j = col; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(row_echelon(m).pivots.size());
}

/// Basis of the right null space.
///
/// One vector per free column, in ascending column order: the free variable
/// is set to 1, the other free variables to 0, and the pivot variables are
/// solved for. Each vector is then sign-normalized so that its first nonzero
/// entry is positive. The result is deterministic for a given matrix.
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto echelon = row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : echelon.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Constant(cols, Scalar(0));
    v(free) = Scalar(1);
    for (std::size_t i = 0; i < echelon.pivots.size(); ++i)
      v(echelon.pivots[i]) = -echelon.reduced(static_cast<Eigen::Index>(i), free);
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (v(j) == Scalar(0)) continue;
      if (v(j) < Scalar(0)) v = -v;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Stacks vectors of equal length as the columns of a matrix.
RationalMatrix columns_to_matrix(const std::vector<RationalVector>& columns, Eigen::Index rows);

/// True when `v` lies in the column span of `columns`.
bool in_span(const std::vector<RationalVector>& columns, const RationalVector& v);

}  // namespace betticert

#endif  // BETTICERT_EXACTALG_HPP
