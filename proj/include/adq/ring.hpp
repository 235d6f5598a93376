#pragma once
//
// Exact arithmetic over two concrete principal ideal domains:
// arbitrary-precision integers and univariate polynomials over F_p.
// Every element is immutable after construction; all operations are pure.
//
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adq {

using Int = boost::multiprecision::cpp_int;

/// Violated operation precondition (bad input, recoverable).
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failed internal certificate self-check (a bug, never expected).
class CheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class DomainKind { Integers, PolyFp };

struct Domain {
  DomainKind kind = DomainKind::Integers;
  std::uint64_t p = 0;  // modulus, PolyFp only

  friend bool operator==(const Domain&, const Domain&) = default;
};

// An exact ring element.  Integers are cpp_int; polynomials are ascending
// coefficient lists with entries in [0, p) and no trailing zeros (the zero
// polynomial has an empty list).
class RingElement {
 public:
  RingElement() = default;  // integer zero

  static RingElement integer(Int v);
  static RingElement integer(long long v);
  static RingElement poly(std::uint64_t p, std::vector<std::uint64_t> ascending);
  static RingElement zero(const Domain& d);
  static RingElement one(const Domain& d);
  static RingElement constant(const Domain& d, long long v);

  const Domain& domain() const { return dom_; }
  bool is_zero() const;
  bool is_one() const;

  const Int& int_value() const;                      // Integers only
  const std::vector<std::uint64_t>& coeffs() const;  // PolyFp only
  int degree() const;                                // PolyFp only; zero -> -1

  std::string str() const;

  friend RingElement operator+(const RingElement&, const RingElement&);
  friend RingElement operator-(const RingElement&, const RingElement&);
  friend RingElement operator*(const RingElement&, const RingElement&);
  RingElement operator-() const;
  friend bool operator==(const RingElement&, const RingElement&);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

 private:
  Domain dom_{};
  Int n_{};
  std::vector<std::uint64_t> c_{};
};

/// Total order within one domain: integers by value; polynomials by degree,
/// then coefficients from the leading one down.  Used to sort primes.
bool ring_less(const RingElement& a, const RingElement& b);

struct CanonicalParts {
  RingElement unit;
  RingElement canon;
};

/// a = unit * canon with canon the canonical associate
/// (integers: nonnegative; polynomials: monic or zero).
CanonicalParts canonical(const RingElement& a);
RingElement canonical_part(const RingElement& a);
bool is_unit(const RingElement& a);
RingElement unit_inverse(const RingElement& u);
bool strong_associates(const RingElement& a, const RingElement& b);

/// Canonical generator of the ideal (a, b); a, b not both zero.
RingElement gcd(const RingElement& a, const RingElement& b);

struct Bezout {
  RingElement g, x, y;  // a*x + b*y = g = gcd(a, b)
};
Bezout egcd(const RingElement& a, const RingElement& b);

RingElement lcm(const RingElement& a, const RingElement& b);

/// b | a ("b divides a"); divides(b, 0) is true for every nonzero b.
bool divides(const RingElement& b, const RingElement& a);

/// Exact quotient q with q*b = a; throws RingError when b is zero or b does
/// not divide a (the two cases carry distinct messages).
RingElement exact_div(const RingElement& a, const RingElement& b);

/// Canonical remainder of a modulo m (m nonzero): integers in [0, |m|);
/// polynomials of degree below deg m.
RingElement rem(const RingElement& a, const RingElement& m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
RingElement inv_mod(const RingElement& a, const RingElement& m);

struct Factorization {
  RingElement unit;
  std::vector<std::pair<RingElement, int>> factors;  // (canonical prime, exponent)

  RingElement reconstruct() const;
  int valuation(const RingElement& prime) const;
};

/// Prime factorization of a nonzero element.  Integer prime factors are
/// bounded by 10^9; inputs beyond that are rejected.
Factorization factor(const RingElement& a);
bool is_prime(const RingElement& a);

// The set of canonical primes dividing an element.  The convention that 1
// belongs to every spectrum is implicit: the stored set holds primes only
// and subset tests treat 1 as always present.
struct Spectrum {
  std::vector<RingElement> primes;  // sorted by ring_less, distinct

  bool empty() const { return primes.empty(); }
  bool contains(const RingElement& q) const;
  bool subset_of(const Spectrum& other) const;
  Spectrum intersect(const Spectrum& other) const;
  Spectrum difference(const Spectrum& other) const;
  std::string str() const;
};
Spectrum spectrum(const RingElement& a);

struct AdequateElementSplit {
  RingElement s, t;  // b = s*t, gcd(t, a) = 1, every prime of s divides a
};

/// Helmer's decomposition of b with respect to a.
AdequateElementSplit rp_split(const RingElement& b, const RingElement& a);

}  // namespace adq
