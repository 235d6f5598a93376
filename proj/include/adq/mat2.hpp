#pragma once
//
// Exact 2x2 matrices and Smith normal form with transform certificates,
// in the convention P * A * Q = diag(alpha1, alpha2).
//
#include "adq/ring.hpp"

#include <array>
#include <optional>

namespace adq {

class Mat2 {
 public:
  Mat2() = default;
  Mat2(RingElement a11, RingElement a12, RingElement a21, RingElement a22);

  static Mat2 identity(const Domain& d);
  static Mat2 diag(RingElement a, RingElement b);

  const RingElement& at(int i, int j) const { return e_[static_cast<std::size_t>(2 * i + j)]; }
  const Domain& domain() const { return e_[0].domain(); }

  Mat2 transpose() const;
  std::string str() const;

  friend Mat2 operator*(const Mat2&, const Mat2&);
  friend bool operator==(const Mat2&, const Mat2&);
  friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

 private:
  std::array<RingElement, 4> e_{};
};

RingElement det(const Mat2& x);
Mat2 adjugate(const Mat2& x);
bool is_unimodular(const Mat2& x);

/// Exact inverse of a matrix with unit determinant.
Mat2 inverse_unimodular(const Mat2& x);

/// X^{-1} * Y when it is integral, absent otherwise; X nonsingular.
std::optional<Mat2> exact_left_quotient(const Mat2& x, const Mat2& y);

struct SmithDecomposition {
  Mat2 P;
  RingElement alpha1, alpha2;
  Mat2 Q;
  Mat2 source;  // the decomposed matrix A, with P*A*Q = diag(alpha1, alpha2)

  Mat2 diag_matrix() const { return Mat2::diag(alpha1, alpha2); }
  void check() const;  // throws CheckError when the certificate is invalid
};

/// Smith normal form of a nonsingular matrix via gcd-driven elimination.
/// Row operations accumulate into P on the left, column operations into Q
/// on the right, so P*A*Q = current holds at every step.
SmithDecomposition snf(const Mat2& a);

/// A unimodular matrix with second row (u, v); requires gcd(u, v) a unit.
/// The completion picks the Bezout pair with minimal canonical top-left
/// entry (least nonnegative integer, least degree polynomial).
Mat2 unimodular_complete_row(const RingElement& u, const RingElement& v);

}  // namespace adq
