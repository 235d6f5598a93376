#include "adq/divisor.hpp"

namespace adq {

TransferMatrix transfer(const SmithDecomposition& db, const SmithDecomposition& da) {
  if (!(db.source.domain() == da.source.domain()))
    throw RingError("transfer requires matrices from the same domain");
  TransferMatrix t{db.P * inverse_unimodular(da.P)};
  if (!is_unimodular(t.tau)) throw CheckError("transfer matrix not unimodular");
  return t;
}

DiagonalPair leftgcd_snf(const SmithDecomposition& da, const SmithDecomposition& db) {
  const Domain dom = da.source.domain();
  RingElement tau21 = transfer(db, da).tau.at(1, 0);
  RingElement d1 = gcd(da.alpha1, db.alpha1);
  RingElement third = lcm(da.alpha1, db.alpha1) * tau21;
  RingElement d2 = gcd(gcd(da.alpha2, db.alpha2), third);
  d1 = canonical_part(d1);
  d2 = canonical_part(d2);
  if (!divides(d1, d2)) throw CheckError("left gcd diagonal violates d1 | d2");
  (void)dom;
  return {d1, d2};
}

bool left_coprime(const SmithDecomposition& da, const SmithDecomposition& db) {
  return leftgcd_snf(da, db).d2.is_one();
}

std::optional<Mat2> left_divides_direct(const Mat2& b, const Mat2& a) {
  if (det(b).is_zero()) throw RingError("left divisor must be nonsingular");
  return exact_left_quotient(b, a);
}

bool left_divides_structural(const SmithDecomposition& db, const SmithDecomposition& da) {
  if (!divides(db.alpha1, da.alpha1) || !divides(db.alpha2, da.alpha2)) return false;
  RingElement tau21 = transfer(db, da).tau.at(1, 0);
  RingElement need = exact_div(db.alpha2, gcd(db.alpha2, da.alpha1));
  return divides(need, tau21);
}

std::optional<Mat2> left_divides(const Mat2& b, const Mat2& a) {
  auto direct = left_divides_direct(b, a);
  bool structural = left_divides_structural(snf(b), snf(a));
  if (direct.has_value() != structural)
    throw CheckError("left-divisibility routes disagree");
  return direct;
}

Mat2 divisor_from_params(const SmithDecomposition& da, const RingElement& beta1,
                         const RingElement& beta2, const Mat2& l) {
  if (!divides(beta1, beta2)) throw RingError("beta1 does not divide beta2");
  if (!divides(beta1, da.alpha1)) throw RingError("beta1 does not divide alpha1");
  if (!divides(beta2, da.alpha2)) throw RingError("beta2 does not divide alpha2");
  if (!is_unimodular(l)) throw RingError("parameter matrix not unimodular");
  RingElement need = exact_div(beta2, gcd(beta2, da.alpha1));
  if (!divides(need, l.at(1, 0)))
    throw RingError("parameter matrix outside the divisor set shape");
  Mat2 d = inverse_unimodular(l * da.P) * Mat2::diag(beta1, beta2);
  if (!left_divides(d, da.source).has_value())
    throw CheckError("constructed divisor does not divide A");
  SmithDecomposition dd = snf(d);
  if (dd.alpha1 != canonical_part(beta1) || dd.alpha2 != canonical_part(beta2))
    throw CheckError("constructed divisor has wrong Smith form");
  return d;
}

std::optional<Mat2> absorb_prime_divisor(const Mat2& a, const Mat2& b) {
  if (!is_prime(det(b))) throw RingError("det(B) is not indecomposable");
  SmithDecomposition da = snf(a), db = snf(b);
  if (left_coprime(da, db)) return std::nullopt;
  auto c = left_divides(b, a);
  if (!c) throw CheckError("prime-determinant divisor failed to absorb");
  return c;
}

}  // namespace adq
