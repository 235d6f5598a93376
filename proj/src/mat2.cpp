#include "adq/mat2.hpp"

#include <sstream>

namespace adq {

Mat2::Mat2(RingElement a11, RingElement a12, RingElement a21, RingElement a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
  for (int i = 1; i < 4; ++i)
    if (!(e_[static_cast<std::size_t>(i)].domain() == e_[0].domain()))
      throw RingError("matrix entries from different domains");
}

Mat2 Mat2::identity(const Domain& d) {
  return {RingElement::one(d), RingElement::zero(d), RingElement::zero(d), RingElement::one(d)};
}

Mat2 Mat2::diag(RingElement a, RingElement b) {
  const Domain d = a.domain();
  return {std::move(a), RingElement::zero(d), RingElement::zero(d), std::move(b)};
}

Mat2 Mat2::transpose() const { return {e_[0], e_[2], e_[1], e_[3]}; }

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << e_[0].str() << ", " << e_[1].str() << "], [" << e_[2].str() << ", "
     << e_[3].str() << "]]";
  return os.str();
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  if (!(x.domain() == y.domain())) throw RingError("domain mismatch in matrix product");
  return {x.at(0, 0) * y.at(0, 0) + x.at(0, 1) * y.at(1, 0),
          x.at(0, 0) * y.at(0, 1) + x.at(0, 1) * y.at(1, 1),
          x.at(1, 0) * y.at(0, 0) + x.at(1, 1) * y.at(1, 0),
          x.at(1, 0) * y.at(0, 1) + x.at(1, 1) * y.at(1, 1)};
}

bool operator==(const Mat2& x, const Mat2& y) { return x.e_ == y.e_; }

RingElement det(const Mat2& x) { return x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0); }

Mat2 adjugate(const Mat2& x) { return {x.at(1, 1), -x.at(0, 1), -x.at(1, 0), x.at(0, 0)}; }

bool is_unimodular(const Mat2& x) { return is_unit(det(x)); }

Mat2 inverse_unimodular(const Mat2& x) {
  RingElement d = det(x);
  if (!is_unit(d)) throw RingError("non-unit determinant");
  RingElement di = unit_inverse(d);
  Mat2 adj = adjugate(x);
  return {di * adj.at(0, 0), di * adj.at(0, 1), di * adj.at(1, 0), di * adj.at(1, 1)};
}

std::optional<Mat2> exact_left_quotient(const Mat2& x, const Mat2& y) {
  RingElement d = det(x);
  if (d.is_zero()) throw RingError("singular left factor");
  Mat2 n = adjugate(x) * y;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!divides(d, n.at(i, j))) return std::nullopt;
  return Mat2{exact_div(n.at(0, 0), d), exact_div(n.at(0, 1), d), exact_div(n.at(1, 0), d),
              exact_div(n.at(1, 1), d)};
}

void SmithDecomposition::check() const {
  if (!is_unimodular(P) || !is_unimodular(Q)) throw CheckError("SNF transform not unimodular");
  if (P * source * Q != diag_matrix()) throw CheckError("SNF certificate product mismatch");
  if (alpha1 != canonical_part(alpha1) || alpha2 != canonical_part(alpha2))
    throw CheckError("SNF diagonal not canonical");
  if (!divides(alpha1, alpha2)) throw CheckError("SNF divisibility chain broken");
  if (canonical_part(alpha1 * alpha2) != canonical_part(det(source)))
    throw CheckError("SNF determinant mismatch");
}

SmithDecomposition snf(const Mat2& a) {
  if (det(a).is_zero()) throw RingError("singular matrix has no nonsingular Smith form");
  const Domain dom = a.domain();
  Mat2 m = a;
  Mat2 p = Mat2::identity(dom), q = Mat2::identity(dom);

  auto row_transform = [&](const Mat2& u) {
    m = u * m;
    p = u * p;
  };
  auto col_transform = [&](const Mat2& v) {
    m = m * v;
    q = q * v;
  };

  const RingElement zero = RingElement::zero(dom), one = RingElement::one(dom);
  while (true) {
    if (!m.at(1, 0).is_zero()) {
      // Plain shear when the corner already divides the entry; the general
      // egcd transform would pollute row one and need not terminate.
      if (!m.at(0, 0).is_zero() && divides(m.at(0, 0), m.at(1, 0))) {
        row_transform({one, zero, -exact_div(m.at(1, 0), m.at(0, 0)), one});
      } else {
        auto [g, x, y] = egcd(m.at(0, 0), m.at(1, 0));
        row_transform({x, y, -exact_div(m.at(1, 0), g), exact_div(m.at(0, 0), g)});
      }
      continue;
    }
    if (!m.at(0, 1).is_zero()) {
      if (!m.at(0, 0).is_zero() && divides(m.at(0, 0), m.at(0, 1))) {
        col_transform({one, -exact_div(m.at(0, 1), m.at(0, 0)), zero, one});
      } else {
        auto [g, x, y] = egcd(m.at(0, 0), m.at(0, 1));
        col_transform({x, -exact_div(m.at(0, 1), g), y, exact_div(m.at(0, 0), g)});
      }
      continue;
    }
    if (divides(m.at(0, 0), m.at(1, 1))) break;
    // fold the second diagonal entry into row one and restart elimination
    row_transform({RingElement::one(dom), RingElement::one(dom), RingElement::zero(dom),
                   RingElement::one(dom)});
  }

  auto [u1, c1] = canonical(m.at(0, 0));
  auto [u2, c2] = canonical(m.at(1, 1));
  row_transform(Mat2::diag(unit_inverse(u1), unit_inverse(u2)));

  SmithDecomposition res{p, c1, c2, q, a};
  res.check();
  return res;
}

Mat2 unimodular_complete_row(const RingElement& u, const RingElement& v) {
  const Domain dom = u.domain();
  if (u.is_zero() && v.is_zero()) throw RingError("cannot complete the zero row");
  if (!is_unit(gcd(u, v))) throw RingError("row entries not coprime");
  if (u.is_zero()) return {RingElement::one(dom), RingElement::zero(dom), u, v};
  auto bez = egcd(v, u);  // bez.g is a unit
  RingElement gi = unit_inverse(bez.g);
  RingElement x = gi * bez.x;  // x*v = 1 (mod u)
  x = rem(x, u);
  RingElement y = exact_div(x * v - RingElement::one(dom), u);
  Mat2 c{x, y, u, v};
  if (!is_unimodular(c)) throw CheckError("row completion not unimodular");
  return c;
}

}  // namespace adq
