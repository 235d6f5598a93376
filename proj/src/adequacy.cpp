#include "adq/adequacy.hpp"

#include <sstream>

namespace adq {
namespace {

// k-th ring element in a fixed enumeration, used to search lift offsets:
// integers 0, 1, -1, 2, -2, ...; polynomials in graded coefficient order.
RingElement nth_element(const Domain& d, std::uint64_t k) {
  if (d.kind == DomainKind::Integers) {
    if (k == 0) return RingElement::integer(0);
    long long half = static_cast<long long>((k + 1) / 2);
    return RingElement::integer(k % 2 == 1 ? half : -half);
  }
  std::vector<std::uint64_t> c;
  while (k > 0) {
    c.push_back(k % d.p);
    k /= d.p;
  }
  return RingElement::poly(d.p, c);
}

RingElement pow_elem(const RingElement& base, int e) {
  RingElement r = RingElement::one(base.domain());
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

// x = a (mod m), x = b (mod q), gcd(m, q) = 1; result reduced mod m*q.
RingElement crt_pair(const RingElement& a, const RingElement& m, const RingElement& b,
                     const RingElement& q) {
  RingElement mi = inv_mod(m, q);
  RingElement k = rem((b - a) * mi, q);
  return a + m * k;
}

}  // namespace

RingElement SpectrumPartition::q_product() const {
  RingElement r = sigma1.is_zero() ? RingElement::integer(1) : RingElement::one(sigma1.domain());
  for (const auto& q : q_shared) r = r * q;
  for (const auto& q : q_free) r = r * q;
  return r;
}

SpectrumPartition build_sigmas(const SmithDecomposition& da, const SmithDecomposition& db,
                               const TransferMatrix& tau) {
  const Domain dom = da.source.domain();
  DiagonalPair omega = leftgcd_snf(da, db);
  RingElement tau21 = tau.tau.at(1, 0);

  Spectrum sw1 = spectrum(omega.d1);
  Spectrum sw2 = spectrum(omega.d2);
  Spectrum sa1 = spectrum(da.alpha1);

  Factorization fb1 = factor(db.alpha1);
  Factorization fb2 = factor(db.alpha2);

  SpectrumPartition part;
  part.sigma1 = RingElement::one(dom);
  part.sigma2 = RingElement::one(dom);

  for (const auto& p : sw2.primes) {
    if (sa1.contains(p)) {
      part.p_primes.push_back(p);
      part.p_exp_b1.push_back(fb1.valuation(p));
      part.p_exp_b2.push_back(fb2.valuation(p));
      part.sigma2 = part.sigma2 * pow_elem(p, fb2.valuation(p));
    } else if (divides(p, tau21)) {
      part.q_shared.push_back(p);
      part.q_shared_exp_b1.push_back(fb1.valuation(p));
      part.q_shared_exp_b2.push_back(fb2.valuation(p));
      part.sigma2 = part.sigma2 * pow_elem(p, fb2.valuation(p));
    } else {
      part.q_free.push_back(p);
      part.q_free_exp_b1.push_back(fb1.valuation(p));
      part.q_free_exp_b2.push_back(fb2.valuation(p));
      part.sigma2 = part.sigma2 * pow_elem(p, fb1.valuation(p));
    }
  }
  for (const auto& p : sw1.primes)
    part.sigma1 = part.sigma1 * pow_elem(p, fb1.valuation(p));

  // residual of beta1 after removing the partitioned prime parts
  RingElement b1rest = canonical_part(db.alpha1);
  for (const auto& p : sw2.primes)
    b1rest = exact_div(b1rest, pow_elem(p, fb1.valuation(p)));
  part.residual = b1rest;

  // partition invariants
  if (!is_unit(gcd(part.residual, da.alpha2)))
    throw CheckError("sigma residual shares a prime with alpha2");
  for (std::size_t i = 0; i < part.p_primes.size(); ++i)
    if (part.p_exp_b2[i] < part.p_exp_b1[i])
      throw CheckError("p-prime exponent decreases from beta1 to beta2");
  for (std::size_t i = 0; i < part.q_shared.size(); ++i)
    if (part.q_shared_exp_b2[i] < part.q_shared_exp_b1[i])
      throw CheckError("shared q-prime exponent decreases from beta1 to beta2");
  for (std::size_t i = 0; i < part.q_free.size(); ++i)
    if (part.q_free_exp_b2[i] < part.q_free_exp_b1[i] || part.q_free_exp_b1[i] < 1)
      throw CheckError("free q-prime exponents inconsistent");
  if (!divides(part.sigma1, part.sigma2)) throw CheckError("sigma1 does not divide sigma2");
  {  // beta1 = sigma1 * (q-parts of beta1) * residual
    RingElement q1part = RingElement::one(dom);
    for (std::size_t i = 0; i < part.q_shared.size(); ++i)
      q1part = q1part * pow_elem(part.q_shared[i], part.q_shared_exp_b1[i]);
    for (std::size_t i = 0; i < part.q_free.size(); ++i)
      q1part = q1part * pow_elem(part.q_free[i], part.q_free_exp_b1[i]);
    if (part.sigma1 * q1part * part.residual != canonical_part(db.alpha1))
      throw CheckError("beta1 split does not reconstruct");
  }
  if (!divides(part.sigma2, db.alpha2)) throw CheckError("sigma2 does not divide beta2");
  return part;
}

TransformSplit split_transform(const Mat2& m, const RingElement& u, const RingElement& v) {
  const Domain dom = m.domain();
  if (!is_unimodular(m)) throw RingError("split requires a unimodular matrix");
  if (v.is_zero()) throw RingError("split modulus v must be nonzero");
  if (!divides(gcd(u, v), m.at(1, 0)))
    throw RingError("gcd(u, v) does not divide the bottom-left entry");

  // Unit modulus: the congruence is vacuous, so the identity left factor
  // already satisfies u | F(1,0).
  if (is_unit(canonical_part(v))) return {Mat2::identity(dom), m, u, v};

  Factorization fv = factor(v);
  for (const auto& [q, e] : fv.factors)
    if (e != 1) throw RingError("split modulus v must be squarefree");

  const RingElement m11 = m.at(0, 0), m21 = m.at(1, 0);

  // Bottom row (u*c21, c22) with u*c21*m11 + c22*m21 = 0 (mod v), prime by prime.
  RingElement c21 = RingElement::zero(dom), c22 = RingElement::zero(dom);
  RingElement mod = RingElement::one(dom);
  for (const auto& [q, e] : fv.factors) {
    RingElement r21, r22;
    if (divides(q, m21)) {
      r21 = RingElement::zero(dom);
      r22 = RingElement::one(dom);
    } else {
      r21 = RingElement::one(dom);
      r22 = rem(-(u * m11 * inv_mod(m21, q)), q);
    }
    if (mod.is_one()) {
      c21 = r21;
      c22 = r22;
    } else {
      c21 = crt_pair(c21, mod, r21, q);
      c22 = crt_pair(c22, mod, r22, q);
    }
    mod = mod * q;
  }
  c21 = rem(c21, mod);
  c22 = rem(c22, mod);

  // Lift c22 by multiples of v until the bottom row is completable.
  RingElement w = u * c21;
  RingElement c22_final = c22;
  bool found = false;
  for (std::uint64_t k = 0; k < 100000; ++k) {
    RingElement cand = c22 + nth_element(dom, k) * mod;
    if (w.is_zero() && cand.is_zero()) continue;
    if (is_unit(gcd(w, cand))) {
      c22_final = cand;
      found = true;
      break;
    }
  }
  if (!found) throw CheckError("no coprime lift for the split bottom row");

  Mat2 c = unimodular_complete_row(w, c22_final);
  TransformSplit res{inverse_unimodular(c), c * m, u, v};
  if (res.F * res.L != m) throw CheckError("transform split product mismatch");
  if (!u.is_zero() && !divides(u, res.F.at(1, 0)))
    throw CheckError("split left factor misses the u divisibility");
  if (!divides(v, res.L.at(1, 0)))
    throw CheckError("split right factor misses the v divisibility");
  return res;
}

Theorem2Witness theorem2_check(const SmithDecomposition& da, const SmithDecomposition& ds) {
  Theorem2Witness w;
  if (is_unit(ds.alpha1 * ds.alpha2)) {
    w.ok = true;
    w.trivial = true;
    w.detail = "S is unimodular; the criterion holds vacuously";
    return w;
  }
  Spectrum ss1 = spectrum(ds.alpha1), ss2 = spectrum(ds.alpha2);
  Spectrum sa1 = spectrum(da.alpha1), sa2 = spectrum(da.alpha2);
  if (!ss1.subset_of(sa1)) {
    w.detail = "Sigma(sigma1) " + ss1.difference(sa1).str() + " escapes Sigma(alpha1)";
    return w;
  }
  if (!ss2.subset_of(sa2)) {
    w.detail = "Sigma(sigma2) " + ss2.difference(sa2).str() + " escapes Sigma(alpha2)";
    return w;
  }
  Spectrum qset = ss2.difference(sa1);
  if (qset.empty()) {
    w.ok = true;
    w.detail = "Sigma(sigma2) lies inside Sigma(alpha1); P_S is unconstrained";
    return w;
  }
  RingElement qprod = RingElement::one(da.source.domain());
  for (const auto& q : qset.primes) qprod = qprod * q;
  RingElement entry = transfer(ds, da).tau.at(1, 0);
  w.q_product = qprod;
  w.tested_entry = entry;
  w.ok = divides(qprod, entry);
  std::ostringstream os;
  os << "q-product " << qprod.str() << (w.ok ? " divides " : " does not divide ")
     << "transfer entry " << entry.str();
  w.detail = os.str();
  return w;
}

Theorem2Witness theorem2_check(const Mat2& a, const Mat2& s) {
  return theorem2_check(snf(a), snf(s));
}

Theorem2Witness lemma3_check(const Mat2& a, const Mat2& b, const Mat2& s) {
  SmithDecomposition da = snf(a), db = snf(b), ds = snf(s);
  if (!left_divides(s, b).has_value()) throw RingError("S does not left-divide B");
  Theorem2Witness w = theorem2_check(da, ds);
  if (!w.ok || w.trivial) return w;
  Spectrum qset = spectrum(ds.alpha2).difference(spectrum(da.alpha1));
  RingElement qprod = RingElement::one(a.domain());
  for (const auto& q : qset.primes) qprod = qprod * q;
  RingElement u = exact_div(ds.alpha2, gcd(ds.alpha2, db.alpha1));
  RingElement tau21 = transfer(db, da).tau.at(1, 0);
  RingElement g = qprod.is_one() && u.is_one() ? RingElement::one(a.domain()) : gcd(u, qprod);
  w.ok = divides(g, tau21);
  std::ostringstream os;
  os << "(sigma2/(sigma2, beta1), q-product) = " << g.str()
     << (w.ok ? " divides " : " does not divide ") << "tau21 = " << tau21.str();
  w.detail = os.str();
  return w;
}

AdequateMatrixSplit adequate_part(const Mat2& b, const Mat2& a) {
  SmithDecomposition da = snf(a), db = snf(b);
  TransferMatrix tau = transfer(db, da);

  AdequateMatrixSplit out;
  out.partition = build_sigmas(da, db, tau);
  const RingElement& s1 = out.partition.sigma1;
  const RingElement& s2 = out.partition.sigma2;

  RingElement u = exact_div(s2, gcd(s2, db.alpha1));
  RingElement v = out.partition.q_product();
  out.split = split_transform(tau.tau, u, v);

  // S = (F^{-1} P_B)^{-1} diag(sigma1, sigma2) = P_B^{-1} F diag(sigma1, sigma2)
  out.S = inverse_unimodular(db.P) * out.split.F * Mat2::diag(s1, s2);
  auto t = exact_left_quotient(out.S, b);
  if (!t) throw CheckError("adequate part does not left-divide B");
  out.T = *t;
  out.trivial_flag = is_unimodular(out.S);

  if (out.S * out.T != b) throw CheckError("adequate split product mismatch");
  SmithDecomposition dss = snf(out.S);
  if (dss.alpha1 != canonical_part(s1) || dss.alpha2 != canonical_part(s2))
    throw CheckError("adequate part has unexpected Smith form");
  return out;
}

}  // namespace adq
