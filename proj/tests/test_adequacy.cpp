#include "adq/adequacy.hpp"

#include "adq/oracle.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace adq;
using namespace adq::testutil;

namespace {

// Worked example data (integer instantiations).
const Mat2 kA2 = Mat2::diag(Z(2), Z(210));
const Mat2 kB2 = m2i(450, 0, -1350, 67500);

// Parametric family instantiated at 2, 3, 5, 7, 11, 13.
const Mat2 kA1 = Mat2::diag(Z(6), Z(6930));
const Mat2 kB1 = m2i(45, 0, -315, 122850);

}  // namespace

TEST_CASE("build_sigmas on the worked examples") {
  SmithDecomposition da = snf(kA2), db = snf(kB2);
  TransferMatrix tau = transfer(db, da);
  SpectrumPartition part = build_sigmas(da, db, tau);
  CHECK(part.sigma1 == Z(2));
  CHECK(part.sigma2 == Z(2700));
  CHECK(part.q_shared == std::vector{Z(3)});
  CHECK(part.q_free == std::vector{Z(5)});
  CHECK(part.p_primes == std::vector{Z(2)});

  SmithDecomposition da1 = snf(kA1), db1 = snf(kB1);
  SpectrumPartition p1 = build_sigmas(da1, db1, transfer(db1, da1));
  CHECK(p1.sigma1 == Z(9));
  CHECK(p1.sigma2 == Z(1890));

  // left-coprime pair: empty partition
  SmithDecomposition dc = snf(m2i(1, 0, 1, 225));
  SmithDecomposition da3 = snf(Mat2::diag(Z(2), Z(60)));
  SpectrumPartition pc = build_sigmas(da3, dc, transfer(dc, da3));
  CHECK(pc.empty());
  CHECK(pc.sigma1 == Z(1));
  CHECK(pc.sigma2 == Z(1));
}

TEST_CASE("split_transform golden cases") {
  // shape from the parametric instance: [[1,0],[7,1]] = [[1,0],[42y,1]] * [[1,0],[35x,1]]
  TransformSplit s = split_transform(m2i(1, 0, 7, 1), Z(42), Z(35));
  CHECK(s.F * s.L == m2i(1, 0, 7, 1));
  CHECK(divides(Z(42), s.F.at(1, 0)));
  CHECK(divides(Z(35), s.L.at(1, 0)));

  // unit v: F = I carries the u divisibility vacuously
  Mat2 m = m2i(1, 0, 3, 1);
  TransformSplit sv = split_transform(m, Z(6), Z(1));
  CHECK(sv.F == Mat2::identity(kIntDomain));
  CHECK(sv.L == m);

  TransformSplit s2 = split_transform(m, Z(6), Z(15));
  CHECK(s2.F * s2.L == m);
  CHECK(divides(Z(6), s2.F.at(1, 0)));
  CHECK(divides(Z(15), s2.L.at(1, 0)));

  CHECK_THROWS_AS(split_transform(m, Z(4), Z(4)), RingError);  // v not squarefree
}

TEST_CASE("split_transform postconditions on random input") {
  std::mt19937_64 rng(47);
  long long squarefree[] = {1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 30, 35, 42, 70, 105};
  int cases = 0;
  while (cases < 300) {
    Mat2 m = random_unimodular(rng, kIntDomain);
    RingElement u = random_int(rng, 1, 60);
    RingElement v = Z(squarefree[rng() % 15]);
    if (!divides(gcd(u, v), m.at(1, 0))) continue;
    TransformSplit s = split_transform(m, u, v);
    CHECK(s.F * s.L == m);
    CHECK(is_unimodular(s.F));
    CHECK(is_unimodular(s.L));
    CHECK(divides(u, s.F.at(1, 0)));
    CHECK(divides(v, s.L.at(1, 0)));
    ++cases;
  }
}

TEST_CASE("split_transform over F_5[x]") {
  std::mt19937_64 rng(53);
  int cases = 0;
  while (cases < 50) {
    Mat2 m = random_unimodular(rng, kF5Domain, 3);
    RingElement u = random_poly(rng, 5, 2);
    // v squarefree: product of distinct monic linear factors
    RingElement v = P5({1});
    for (std::uint64_t r = 0; r < 5; ++r)
      if (rng() % 3 == 0) v = v * P5({r, 1});
    if (u.is_zero() || !divides(gcd(u, v), m.at(1, 0))) continue;
    TransformSplit s = split_transform(m, u, v);
    CHECK(s.F * s.L == m);
    CHECK(divides(u, s.F.at(1, 0)));
    CHECK(divides(v, s.L.at(1, 0)));
    ++cases;
  }
}

TEST_CASE("theorem2_check golden cases") {
  // small instance with A = diag(2, 60)
  Mat2 a3 = Mat2::diag(Z(2), Z(60));
  CHECK(theorem2_check(a3, m2i(1, 0, 30, 27)).ok);
  CHECK_FALSE(theorem2_check(a3, m2i(0, 5, 1, 0)).ok);

  // case (i): spectrum of sigma2 inside Sigma(alpha1)
  Mat2 a = Mat2::diag(Z(2), Z(420));
  CHECK(theorem2_check(a, Mat2::diag(Z(1), Z(4))).ok);

  // unimodular S is vacuously true
  Theorem2Witness w = theorem2_check(a, m2i(1, 0, 5, 1));
  CHECK(w.ok);
  CHECK(w.trivial);
}

TEST_CASE("theorem2_check matches the exhaustive oracle") {
  std::mt19937_64 rng(59);
  int cases = 0;
  while (cases < 200) {
    Mat2 a = random_bounded_det(rng, 12, 600);
    Mat2 s;
    if (cases % 2 == 0) {
      s = random_bounded_det(rng, 8, 200);
    } else {
      // engineered: S built from A's certificate so the criterion can hold
      SmithDecomposition da = snf(a);
      RingElement s1 = gcd(da.alpha1, random_int(rng, 1, 12));
      RingElement s2 = s1 * gcd(exact_div(da.alpha2, da.alpha1), random_int(rng, 1, 20));
      Mat2 l = random_unimodular(rng, kIntDomain, 2);
      s = inverse_unimodular(l * da.P) * Mat2::diag(s1, s2);
      using boost::multiprecision::abs;
      if (abs(det(s).int_value()) > 200) continue;
    }
    bool structural = theorem2_check(a, s).ok;
    bool exhaustive = oracle::theorem2_oracle(a, s);
    CHECK(structural == exhaustive);
    ++cases;
  }
}

TEST_CASE("theorem2_check is certificate-choice independent") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    Mat2 a = random_bounded_det(rng, 12, 600);
    Mat2 s = random_bounded_det(rng, 8, 200);
    SmithDecomposition da = snf(a), ds = snf(s);
    bool base = theorem2_check(da, ds).ok;
    CHECK(theorem2_check(recertify(da, rng), recertify(ds, rng)).ok == base);
  }
}

TEST_CASE("lemma3_check golden cases") {
  // composite instance: S with SNF diag(2, 2700); gcd(6, 15) = 3 divides tau21 = 3
  Mat2 s = m2i(2, 0, -30, 2700);
  Theorem2Witness w = lemma3_check(kA2, kB2, s);
  CHECK(w.ok);

  // unimodular left divisor is vacuously fine
  CHECK(lemma3_check(kA2, kB2, m2i(1, 0, 4, 1)).ok);

  CHECK_THROWS_AS(lemma3_check(kA2, kB2, Mat2::diag(Z(7), Z(7))), RingError);
}

TEST_CASE("lemma3_check rejects a divisor failing the criterion") {
  // S = [[3,1],[0,1]] has SNF diag(1,3) with transfer entry -1 against
  // A = diag(1,6), so the q = 3 divisibility fails already at the
  // criterion stage; S still left-divides B = S * diag(1,3).
  Mat2 a = Mat2::diag(Z(1), Z(6));
  Mat2 s = m2i(3, 1, 0, 1);
  Mat2 b = s * Mat2::diag(Z(1), Z(3));
  REQUIRE(left_divides(s, b).has_value());
  CHECK_FALSE(theorem2_check(a, s).ok);
  CHECK_FALSE(lemma3_check(a, b, s).ok);

  // spectrum escape: sigma2 = 3 outside Sigma(alpha2) = {2}
  CHECK_FALSE(lemma3_check(Mat2::diag(Z(1), Z(2)), Mat2::diag(Z(1), Z(6)),
                           Mat2::diag(Z(1), Z(3)))
                  .ok);
}

TEST_CASE("criterion implies the refinement for genuine left divisors") {
  // For an actual left divisor S of B, passing the criterion forces the
  // extra gcd divisibility; exercise that implication on random splits.
  std::mt19937_64 rng(73);
  int cases = 0;
  while (cases < 100) {
    Mat2 s = random_bounded_det(rng, 8, 300);
    Mat2 t = random_bounded_det(rng, 8, 300);
    Mat2 a = random_bounded_det(rng, 10, 600);
    Mat2 b = s * t;
    if (!theorem2_check(a, s).ok) continue;
    CHECK(lemma3_check(a, b, s).ok);
    ++cases;
  }
}

TEST_CASE("adequate_part on the worked examples") {
  AdequateMatrixSplit sp2 = adequate_part(kB2, kA2);
  CHECK(sp2.S * sp2.T == kB2);
  CHECK_FALSE(sp2.trivial_flag);
  SmithDecomposition ds = snf(sp2.S);
  CHECK(ds.alpha1 == Z(2));
  CHECK(ds.alpha2 == Z(2700));

  AdequateMatrixSplit sp1 = adequate_part(kB1, kA1);
  CHECK(sp1.S * sp1.T == kB1);
  SmithDecomposition ds1 = snf(sp1.S);
  CHECK(ds1.alpha1 == Z(9));
  CHECK(ds1.alpha2 == Z(1890));

  // a hand-computed explicit pair for the parametric instance
  CHECK(m2i(9, 0, 315, 1890) * m2i(5, 0, -1, 65) == kB1);

  // left-coprime pair: trivial flag, S unimodular
  Mat2 a3 = Mat2::diag(Z(2), Z(60));
  Mat2 t3 = m2i(1, 0, 1, 225);
  AdequateMatrixSplit spc = adequate_part(t3, a3);
  CHECK(spc.trivial_flag);
  CHECK(is_unimodular(spc.S));
  CHECK(spc.S * spc.T == t3);
}

TEST_CASE("adequate_part output passes the literal definition") {
  std::mt19937_64 rng(67);
  int cases = 0;
  while (cases < 40) {
    Mat2 a = random_bounded_det(rng, 10, 400);
    Mat2 b = random_bounded_det(rng, 10, 1000);
    AdequateMatrixSplit sp = adequate_part(b, a);
    CHECK(sp.S * sp.T == b);
    SmithDecomposition ds = snf(sp.S);
    CHECK(ds.alpha1 == canonical_part(sp.partition.sigma1));
    CHECK(ds.alpha2 == canonical_part(sp.partition.sigma2));
    if (sp.trivial_flag) {
      CHECK(left_coprime(snf(a), snf(b)));
    } else {
      auto check = oracle::definition_check(b, sp.S, sp.T, a);
      CHECK(check.clause_i);
      CHECK(check.clause_ii);
    }
    ++cases;
  }
}

TEST_CASE("adequate_part over F_5[x]") {
  std::mt19937_64 rng(71);
  int cases = 0;
  while (cases < 30) {
    Mat2 a = random_nonsingular(rng, kF5Domain, 2);
    Mat2 b = random_nonsingular(rng, kF5Domain, 2);
    AdequateMatrixSplit sp = adequate_part(b, a);
    CHECK(sp.S * sp.T == b);
    SmithDecomposition ds = snf(sp.S);
    CHECK(ds.alpha1 == canonical_part(sp.partition.sigma1));
    CHECK(ds.alpha2 == canonical_part(sp.partition.sigma2));
    ++cases;
  }
}
