#include "adq/ring.hpp"

#include <algorithm>
#include <sstream>

namespace adq {
namespace {

using Poly = std::vector<std::uint64_t>;

constexpr std::uint64_t kMaxModulus = 1ull << 31;

void trim(Poly& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t coeff_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid in F_p; a nonzero mod p
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw RingError("coefficient not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Poly padd(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s % p;
  }
  trim(r);
  return r;
}

Poly psub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0);
    r[i] = s % p;
  }
  trim(r);
  return r;
}

Poly pmul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

Poly pscale(const Poly& a, std::uint64_t s, std::uint64_t p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * (s % p) % p;
  trim(r);
  return r;
}

void pdivmod(const Poly& a, const Poly& b, Poly& q, Poly& r, std::uint64_t p) {
  if (b.empty()) throw RingError("polynomial division by zero");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::uint64_t lead_inv = coeff_inv(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    std::uint64_t c = r.back() * lead_inv % p;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      r[shift + i] = (r[shift + i] + p - b[i] * c % p) % p;
    trim(r);
    if (r.size() + b.size() <= a.size() && r.size() >= b.size() && r.size() == a.size())
      throw CheckError("polynomial division failed to reduce");
  }
  trim(q);
}

Int int_gcd(Int a, Int b) {
  using boost::multiprecision::abs;
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

RingElement RingElement::integer(Int v) {
  RingElement e;
  e.dom_ = Domain{DomainKind::Integers, 0};
  e.n_ = std::move(v);
  return e;
}

RingElement RingElement::integer(long long v) { return integer(Int(v)); }

RingElement RingElement::poly(std::uint64_t p, std::vector<std::uint64_t> ascending) {
  if (p < 2 || p >= kMaxModulus) throw RingError("polynomial modulus out of range");
  RingElement e;
  e.dom_ = Domain{DomainKind::PolyFp, p};
  for (auto& c : ascending) c %= p;
  trim(ascending);
  e.c_ = std::move(ascending);
  return e;
}

RingElement RingElement::zero(const Domain& d) {
  return d.kind == DomainKind::Integers ? integer(0) : poly(d.p, {});
}

RingElement RingElement::one(const Domain& d) {
  return d.kind == DomainKind::Integers ? integer(1) : poly(d.p, {1});
}

RingElement RingElement::constant(const Domain& d, long long v) {
  if (d.kind == DomainKind::Integers) return integer(v);
  long long m = v % static_cast<long long>(d.p);
  if (m < 0) m += static_cast<long long>(d.p);
  return poly(d.p, {static_cast<std::uint64_t>(m)});
}

bool RingElement::is_zero() const {
  return dom_.kind == DomainKind::Integers ? n_ == 0 : c_.empty();
}

bool RingElement::is_one() const {
  return dom_.kind == DomainKind::Integers ? n_ == 1 : (c_.size() == 1 && c_[0] == 1);
}

const Int& RingElement::int_value() const {
  if (dom_.kind != DomainKind::Integers) throw RingError("not an integer element");
  return n_;
}

const std::vector<std::uint64_t>& RingElement::coeffs() const {
  if (dom_.kind != DomainKind::PolyFp) throw RingError("not a polynomial element");
  return c_;
}

int RingElement::degree() const {
  if (dom_.kind != DomainKind::PolyFp) throw RingError("not a polynomial element");
  return static_cast<int>(c_.size()) - 1;
}

std::string RingElement::str() const {
  if (dom_.kind == DomainKind::Integers) return n_.str();
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) {
      if (c_[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {
void require_same_domain(const RingElement& a, const RingElement& b) {
  if (!(a.domain() == b.domain())) throw RingError("domain mismatch");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_domain(a, b);
  if (a.domain().kind == DomainKind::Integers) return RingElement::integer(a.int_value() + b.int_value());
  return RingElement::poly(a.domain().p, padd(a.coeffs(), b.coeffs(), a.domain().p));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_domain(a, b);
  if (a.domain().kind == DomainKind::Integers) return RingElement::integer(a.int_value() - b.int_value());
  return RingElement::poly(a.domain().p, psub(a.coeffs(), b.coeffs(), a.domain().p));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_domain(a, b);
  if (a.domain().kind == DomainKind::Integers) return RingElement::integer(a.int_value() * b.int_value());
  return RingElement::poly(a.domain().p, pmul(a.coeffs(), b.coeffs(), a.domain().p));
}

RingElement RingElement::operator-() const {
  if (dom_.kind == DomainKind::Integers) return integer(-n_);
  return poly(dom_.p, psub({}, c_, dom_.p));
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.dom_ == b.dom_ && a.n_ == b.n_ && a.c_ == b.c_;
}

bool ring_less(const RingElement& a, const RingElement& b) {
  require_same_domain(a, b);
  if (a.domain().kind == DomainKind::Integers) return a.int_value() < b.int_value();
  const auto &ca = a.coeffs(), &cb = b.coeffs();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

CanonicalParts canonical(const RingElement& a) {
  const Domain& d = a.domain();
  if (a.is_zero()) return {RingElement::one(d), a};
  if (d.kind == DomainKind::Integers) {
    if (a.int_value() < 0) return {RingElement::integer(-1), -a};
    return {RingElement::integer(1), a};
  }
  std::uint64_t lead = a.coeffs().back();
  if (lead == 1) return {RingElement::one(d), a};
  return {RingElement::poly(d.p, {lead}),
          RingElement::poly(d.p, pscale(a.coeffs(), coeff_inv(lead, d.p), d.p))};
}

RingElement canonical_part(const RingElement& a) { return canonical(a).canon; }

bool is_unit(const RingElement& a) {
  if (a.domain().kind == DomainKind::Integers) return a.int_value() == 1 || a.int_value() == -1;
  return a.coeffs().size() == 1;
}

RingElement unit_inverse(const RingElement& u) {
  if (!is_unit(u)) throw RingError("not a unit");
  if (u.domain().kind == DomainKind::Integers) return u;
  return RingElement::poly(u.domain().p, {coeff_inv(u.coeffs()[0], u.domain().p)});
}

bool strong_associates(const RingElement& a, const RingElement& b) {
  return canonical_part(a) == canonical_part(b);
}

RingElement gcd(const RingElement& a, const RingElement& b) {
  require_same_domain(a, b);
  if (a.is_zero() && b.is_zero()) throw RingError("gcd(0, 0) is undefined");
  if (a.domain().kind == DomainKind::Integers)
    return RingElement::integer(int_gcd(a.int_value(), b.int_value()));
  Poly x = a.coeffs(), y = b.coeffs();
  std::uint64_t p = a.domain().p;
  while (!y.empty()) {
    Poly q, r;
    pdivmod(x, y, q, r, p);
    x = y;
    y = r;
  }
  return canonical_part(RingElement::poly(p, x));
}

Bezout egcd(const RingElement& a, const RingElement& b) {
  require_same_domain(a, b);
  if (a.is_zero() && b.is_zero()) throw RingError("egcd(0, 0) is undefined");
  const Domain& d = a.domain();
  RingElement r0 = a, r1 = b;
  RingElement x0 = RingElement::one(d), x1 = RingElement::zero(d);
  RingElement y0 = RingElement::zero(d), y1 = RingElement::one(d);
  while (!r1.is_zero()) {
    RingElement q, r;
    if (d.kind == DomainKind::Integers) {
      q = RingElement::integer(r0.int_value() / r1.int_value());
      r = RingElement::integer(r0.int_value() % r1.int_value());
    } else {
      Poly pq, pr;
      pdivmod(r0.coeffs(), r1.coeffs(), pq, pr, d.p);
      q = RingElement::poly(d.p, pq);
      r = RingElement::poly(d.p, pr);
    }
    RingElement nx = x0 - q * x1, ny = y0 - q * y1;
    r0 = r1; r1 = r;
    x0 = x1; x1 = nx;
    y0 = y1; y1 = ny;
  }
  // normalize so g is canonical
  auto [u, g] = canonical(r0);
  RingElement ui = unit_inverse(u);
  Bezout res{g, ui * x0, ui * y0};
  if (a * res.x + b * res.y != res.g) throw CheckError("Bezout identity failed");
  return res;
}

RingElement lcm(const RingElement& a, const RingElement& b) {
  if (a.is_zero() || b.is_zero()) throw RingError("lcm of zero is undefined");
  return canonical_part(exact_div(a * b, gcd(a, b)));
}

bool divides(const RingElement& b, const RingElement& a) {
  require_same_domain(b, a);
  if (b.is_zero()) return a.is_zero();
  if (b.domain().kind == DomainKind::Integers) return a.int_value() % b.int_value() == 0;
  Poly q, r;
  pdivmod(a.coeffs(), b.coeffs(), q, r, b.domain().p);
  return r.empty();
}

RingElement exact_div(const RingElement& a, const RingElement& b) {
  require_same_domain(a, b);
  if (b.is_zero()) throw RingError("division by zero");
  if (b.domain().kind == DomainKind::Integers) {
    if (a.int_value() % b.int_value() != 0) throw RingError("not divisible");
    return RingElement::integer(a.int_value() / b.int_value());
  }
  Poly q, r;
  pdivmod(a.coeffs(), b.coeffs(), q, r, b.domain().p);
  if (!r.empty()) throw RingError("not divisible");
  return RingElement::poly(b.domain().p, q);
}

RingElement rem(const RingElement& a, const RingElement& m) {
  require_same_domain(a, m);
  if (m.is_zero()) throw RingError("remainder modulo zero");
  if (m.domain().kind == DomainKind::Integers) {
    using boost::multiprecision::abs;
    Int mm = abs(m.int_value());
    Int r = a.int_value() % mm;
    if (r < 0) r += mm;
    return RingElement::integer(r);
  }
  Poly q, r;
  pdivmod(a.coeffs(), m.coeffs(), q, r, m.domain().p);
  return RingElement::poly(m.domain().p, r);
}

RingElement inv_mod(const RingElement& a, const RingElement& m) {
  auto bez = egcd(a, m);
  if (!is_unit(bez.g)) throw RingError("element not invertible modulo m");
  return rem(unit_inverse(bez.g) * bez.x, m);
}

RingElement Factorization::reconstruct() const {
  RingElement r = unit;
  for (const auto& [prime, e] : factors)
    for (int i = 0; i < e; ++i) r = r * prime;
  return r;
}

int Factorization::valuation(const RingElement& prime) const {
  for (const auto& [q, e] : factors)
    if (q == prime) return e;
  return 0;
}

namespace {

constexpr std::uint64_t kPrimeBound = 1000000000ull;

Factorization factor_int(const RingElement& a) {
  Factorization f;
  auto [u, c] = canonical(a);
  f.unit = u;
  Int n = c.int_value();
  std::uint64_t d = 2;
  while (n > 1) {
    if (Int(d) * d > n) {
      // remaining cofactor is prime
      if (n > Int(kPrimeBound)) throw RingError("prime factor exceeds the 10^9 bound");
      int e = 0;
      Int q = n;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      f.factors.emplace_back(RingElement::integer(q), e);
      break;
    }
    if (d > kPrimeBound) throw RingError("prime factor exceeds the 10^9 bound");
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      f.factors.emplace_back(RingElement::integer(Int(d)), e);
    }
    d = (d == 2) ? 3 : (d == 3 ? 5 : d + ((d % 6 == 1) ? 4 : 2));
  }
  return f;
}

// Enumerate monic polynomials of the given degree in ring_less order.
Poly monic_from_index(std::uint64_t idx, int deg, std::uint64_t p) {
  Poly c(static_cast<std::size_t>(deg) + 1, 0);
  c[deg] = 1;
  for (int i = 0; i < deg; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

Factorization factor_poly(const RingElement& a) {
  Factorization f;
  auto [u, c] = canonical(a);
  f.unit = u;
  std::uint64_t p = a.domain().p;
  Poly n = c.coeffs();
  // trial division by monic polynomials of degree <= deg/2
  double work = 0;
  for (int deg = 1; 2 * deg <= static_cast<int>(n.size()) - 1; ++deg) {
    double count = 1;
    for (int i = 0; i < deg; ++i) count *= static_cast<double>(p);
    work += count;
    if (work > 2e7) throw RingError("polynomial factorization too large for trial division");
    std::uint64_t total = 1;
    for (int i = 0; i < deg; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Poly cand = monic_from_index(idx, deg, p);
      Poly q, r;
      pdivmod(n, cand, q, r, p);
      if (!r.empty()) continue;
      int e = 0;
      while (r.empty()) {
        n = q;
        ++e;
        if (static_cast<int>(n.size()) - 1 < deg) break;
        pdivmod(n, cand, q, r, p);
      }
      f.factors.emplace_back(RingElement::poly(p, cand), e);
      if (2 * deg > static_cast<int>(n.size()) - 1) break;
    }
  }
  if (n.size() > 1) f.factors.emplace_back(RingElement::poly(p, n), 1);
  return f;
}

}  // namespace

Factorization factor(const RingElement& a) {
  if (a.is_zero()) throw RingError("cannot factor zero");
  Factorization f =
      a.domain().kind == DomainKind::Integers ? factor_int(a) : factor_poly(a);
  std::sort(f.factors.begin(), f.factors.end(),
            [](const auto& x, const auto& y) { return ring_less(x.first, y.first); });
  if (f.reconstruct() != a) throw CheckError("factorization reconstruction failed");
  return f;
}

bool is_prime(const RingElement& a) {
  if (a.is_zero() || is_unit(a)) return false;
  Factorization f = factor(a);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

bool Spectrum::contains(const RingElement& q) const {
  return std::any_of(primes.begin(), primes.end(), [&](const RingElement& r) { return r == q; });
}

bool Spectrum::subset_of(const Spectrum& other) const {
  return std::all_of(primes.begin(), primes.end(),
                     [&](const RingElement& q) { return other.contains(q); });
}

Spectrum Spectrum::intersect(const Spectrum& other) const {
  Spectrum r;
  for (const auto& q : primes)
    if (other.contains(q)) r.primes.push_back(q);
  return r;
}

Spectrum Spectrum::difference(const Spectrum& other) const {
  Spectrum r;
  for (const auto& q : primes)
    if (!other.contains(q)) r.primes.push_back(q);
  return r;
}

std::string Spectrum::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) s += ", ";
    s += primes[i].str();
  }
  return s + "}";
}

Spectrum spectrum(const RingElement& a) {
  Factorization f = factor(a);
  Spectrum s;
  for (const auto& [q, e] : f.factors) s.primes.push_back(q);
  return s;
}

AdequateElementSplit rp_split(const RingElement& b, const RingElement& a) {
  if (b.is_zero()) throw RingError("rp_split requires b nonzero");
  RingElement t = b;
  if (a.is_zero()) {
    // every prime of b divides 0, so s = b, t = 1
    return {b, RingElement::one(b.domain())};
  }
  while (true) {
    RingElement g = gcd(t, a);
    if (is_unit(g)) break;
    t = exact_div(t, g);
  }
  return {exact_div(b, t), t};
}

}  // namespace adq
