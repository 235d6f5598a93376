#pragma once
//
// Adequate-part factorization of nonsingular 2x2 matrices: the spectrum
// partition and sigma construction, the transfer-matrix split, the
// structural adequacy criterion, and its refinement for left divisors.
//
#include "adq/divisor.hpp"

namespace adq {

// Classification of the primes of omega2 = second invariant factor of
// (A, B)_l, together with the exponents carried by beta1 and beta2 and the
// assembled sigma pair.
struct SpectrumPartition {
  std::vector<RingElement> p_primes;  // primes of omega2 inside Sigma(alpha1)
  std::vector<RingElement> q_shared;  // primes of omega2 outside Sigma(alpha1), dividing tau21
  std::vector<RingElement> q_free;    // ditto, not dividing tau21
  std::vector<int> p_exp_b1, p_exp_b2;              // aligned with p_primes
  std::vector<int> q_shared_exp_b1, q_shared_exp_b2;  // aligned with q_shared
  std::vector<int> q_free_exp_b1, q_free_exp_b2;      // aligned with q_free
  RingElement residual;  // part of beta1 coprime to alpha2
  RingElement sigma1, sigma2;

  bool empty() const { return p_primes.empty() && q_shared.empty() && q_free.empty(); }
  RingElement q_product() const;  // product of all q primes (shared then free)
};

/// Sigma construction from the Smith certificates of A and B and their
/// transfer matrix.  All partition invariants are verified internally.
SpectrumPartition build_sigmas(const SmithDecomposition& da, const SmithDecomposition& db,
                               const TransferMatrix& tau);

struct TransformSplit {
  Mat2 F, L;        // F * L equals the split matrix
  RingElement u, v;  // u | F(1,0) and v | L(1,0)
};

/// Split a unimodular M as F * L with the bottom-left entry of F divisible
/// by u and that of L divisible by v.  Requires v squarefree and
/// gcd(u, v) | M(1,0).
TransformSplit split_transform(const Mat2& m, const RingElement& u, const RingElement& v);

struct Theorem2Witness {
  bool ok = false;
  bool trivial = false;  // S unimodular: vacuously true
  std::string detail;
  std::optional<RingElement> q_product;     // set when the q-divisibility branch ran
  std::optional<RingElement> tested_entry;  // bottom-left of P_S * P_A^{-1}

  explicit operator bool() const { return ok; }
};

/// Structural criterion: every nonunit left divisor of S has a nontrivial
/// left common divisor with A.  Certificate-choice independent.
Theorem2Witness theorem2_check(const Mat2& a, const Mat2& s);
Theorem2Witness theorem2_check(const SmithDecomposition& da, const SmithDecomposition& ds);

/// Refinement for a left divisor S of B: the theorem2 conditions plus
/// (sigma2/(sigma2, beta1), q1...qk) | tau21 with tau = P_B * P_A^{-1}.
Theorem2Witness lemma3_check(const Mat2& a, const Mat2& b, const Mat2& s);

struct AdequateMatrixSplit {
  Mat2 S, T;  // B = S * T exactly; SNF(S) = diag(sigma1, sigma2)
  SpectrumPartition partition;
  TransformSplit split;
  bool trivial_flag = false;  // S unimodular, equivalently (A, B)_l = I
};

/// Constructive adequate-part factorization of B with respect to A.
AdequateMatrixSplit adequate_part(const Mat2& b, const Mat2& a);

}  // namespace adq
