#pragma once
//
// Left-divisor calculus for nonsingular 2x2 matrices: transfer matrices,
// left GCD Smith forms, left divisibility, divisor parametrization, and
// absorption of prime-determinant divisors.
//
#include "adq/mat2.hpp"

namespace adq {

struct TransferMatrix {
  Mat2 tau;  // P_B * P_A^{-1}, unimodular
};

/// Transfer matrix between two Smith certificates over the same domain.
TransferMatrix transfer(const SmithDecomposition& db, const SmithDecomposition& da);

struct DiagonalPair {
  RingElement d1, d2;
};

/// SNF diagonal of the left GCD (A, B)_l:
///   d1 = (alpha1, beta1),  d2 = (alpha2, beta2, [alpha1, beta1] * tau21).
/// The result does not depend on the certificate choice.
DiagonalPair leftgcd_snf(const SmithDecomposition& da, const SmithDecomposition& db);

/// (A, B)_l = I, i.e. leftgcd_snf = (1, 1).
bool left_coprime(const SmithDecomposition& da, const SmithDecomposition& db);

/// Direct divisibility route: det(B) divides every entry of adj(B) * A.
std::optional<Mat2> left_divides_direct(const Mat2& b, const Mat2& a);

/// Structural route: beta_i | alpha_i and the transfer matrix P_B * P_A^{-1}
/// has bottom-left entry divisible by beta2 / (beta2, alpha1).
bool left_divides_structural(const SmithDecomposition& db, const SmithDecomposition& da);

/// Does B left-divide A?  Both routes are evaluated and must agree; the
/// unique quotient C with B * C = A is returned when it exists.
std::optional<Mat2> left_divides(const Mat2& b, const Mat2& a);

/// The left divisor of A with SNF diag(beta1, beta2) parametrized by a
/// unimodular L whose bottom-left entry is divisible by beta2/(beta2, alpha1):
/// D = (L * P_A)^{-1} * diag(beta1, beta2).
Mat2 divisor_from_params(const SmithDecomposition& da, const RingElement& beta1,
                         const RingElement& beta2, const Mat2& l);

/// When det(B) is prime and (A, B)_l != I, B left-divides A; returns the
/// quotient C with B * C = A, absent when the pair is left coprime.
std::optional<Mat2> absorb_prime_divisor(const Mat2& a, const Mat2& b);

// Full left GCD certificate over the integers; produced by the oracle's
// Hermite construction (see oracle.hpp).
struct LeftGcdResult {
  RingElement d1, d2;  // SNF diagonal of gcd_matrix
  Mat2 gcd_matrix;
  Mat2 cofactorA;  // gcd_matrix * cofactorA = A
  Mat2 cofactorB;  // gcd_matrix * cofactorB = B
};

}  // namespace adq
