#pragma once
//
// Shared test fixtures: shorthand constructors, seeded random matrices,
// and certificate re-randomization.
//
#include "adq/divisor.hpp"

#include <random>

namespace adq::testutil {

inline RingElement Z(long long v) { return RingElement::integer(v); }

inline RingElement P5(std::vector<std::uint64_t> ascending) {
  return RingElement::poly(5, std::move(ascending));
}

inline Mat2 m2i(long long a, long long b, long long c, long long d) {
  return {Z(a), Z(b), Z(c), Z(d)};
}

inline const Domain kIntDomain{DomainKind::Integers, 0};
inline const Domain kF5Domain{DomainKind::PolyFp, 5};

inline RingElement random_int(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Z(d(rng));
}

inline RingElement random_poly(std::mt19937_64& rng, std::uint64_t p, int max_deg) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<std::uint64_t> dc(0, p - 1);
  int deg = dd(rng);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = dc(rng);
  return RingElement::poly(p, std::move(c));
}

inline RingElement random_element(std::mt19937_64& rng, const Domain& dom, int size) {
  if (dom.kind == DomainKind::Integers) return random_int(rng, -size, size);
  return random_poly(rng, dom.p, std::min(size, 3));
}

inline Mat2 random_nonsingular(std::mt19937_64& rng, const Domain& dom, int size) {
  while (true) {
    Mat2 m{random_element(rng, dom, size), random_element(rng, dom, size),
           random_element(rng, dom, size), random_element(rng, dom, size)};
    if (!det(m).is_zero()) return m;
  }
}

inline Mat2 random_nonsingular_int(std::mt19937_64& rng, int size) {
  return random_nonsingular(rng, kIntDomain, size);
}

/// Nonsingular integer matrix with |det| in [1, bound].
inline Mat2 random_bounded_det(std::mt19937_64& rng, int size, long long bound) {
  using boost::multiprecision::abs;
  while (true) {
    Mat2 m = random_nonsingular_int(rng, size);
    if (abs(det(m).int_value()) <= bound) return m;
  }
}

inline Mat2 random_unimodular(std::mt19937_64& rng, const Domain& dom, int steps = 4) {
  Mat2 u = Mat2::identity(dom);
  std::uniform_int_distribution<int> side(0, 1);
  for (int i = 0; i < steps; ++i) {
    RingElement k = random_element(rng, dom, 5);
    Mat2 shear = side(rng) ? Mat2{RingElement::one(dom), k, RingElement::zero(dom),
                                  RingElement::one(dom)}
                           : Mat2{RingElement::one(dom), RingElement::zero(dom), k,
                                  RingElement::one(dom)};
    u = u * shear;
  }
  return u;
}

/// A different valid Smith certificate for the same matrix: P' = H*P with
/// the bottom-left of H a multiple of alpha2/alpha1, and the matching Q'.
inline SmithDecomposition recertify(const SmithDecomposition& d, std::mt19937_64& rng) {
  const Domain dom = d.source.domain();
  RingElement step = exact_div(d.alpha2, d.alpha1);
  Mat2 h = Mat2::identity(dom);
  for (int i = 0; i < 3; ++i) {
    RingElement k = random_element(rng, dom, 5);
    h = h * Mat2{RingElement::one(dom), k, RingElement::zero(dom), RingElement::one(dom)};
    RingElement k2 = random_element(rng, dom, 5);
    h = h * Mat2{RingElement::one(dom), RingElement::zero(dom), step * k2,
                 RingElement::one(dom)};
  }
  // W = diag^{-1} * H^{-1} * diag, integral because of the shape of H
  Mat2 hinv = inverse_unimodular(h);
  Mat2 w{hinv.at(0, 0), exact_div(hinv.at(0, 1) * d.alpha2, d.alpha1),
         exact_div(hinv.at(1, 0) * d.alpha1, d.alpha2), hinv.at(1, 1)};
  SmithDecomposition out{h * d.P, d.alpha1, d.alpha2, d.Q * w, d.source};
  out.check();
  return out;
}

}  // namespace adq::testutil
