#include "mendel/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mendel/numbers.hpp"

namespace mendel {

namespace {

// Dense polynomials over F_p, coefficients low degree first, trailing zeros
// trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, long long p) {
  trim(a);
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int da = static_cast<int>(a.size()) - 1;
    long long lead = a[da];  // m is monic
    for (int i = 0; i <= dm; ++i) {
      long long v = (a[da - dm + i] - lead * m[i]) % p;
      a[da - dm + i] = static_cast<int>(v < 0 ? v + p : v);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<int>((c[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& m, long long p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    long long lead = b.back();
    long long inv = 1;
    for (long long t = 1; t < p; ++t)
      if (lead * t % p == 1) {
        inv = t;
        break;
      }
    for (auto& v : b) v = static_cast<int>(v * inv % p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin test: f (monic, degree d) is irreducible over F_p iff x^(p^d) = x
// mod f and gcd(x^(p^(d/r)) - x, f) is constant for every prime r | d.
bool is_irreducible(const Poly& f, long long p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d == 1) return true;
  Poly x{0, 1};
  long long pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  Poly xq = poly_powmod(x, pd, f, p);
  Poly diff = xq;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] - 1 + static_cast<int>(p)) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (auto [r, e] : factorize(d)) {
    long long pk = 1;
    for (int i = 0; i < d / r; ++i) pk *= p;
    Poly h = poly_powmod(x, pk, f, p);
    h.resize(std::max<size_t>(h.size(), 2), 0);
    h[1] = (h[1] - 1 + static_cast<int>(p)) % p;
    trim(h);
    Poly g = poly_gcd(f, h, p);
    if (static_cast<int>(g.size()) - 1 > 0) return false;
  }
  return true;
}

}  // namespace

FieldElement FieldSpec::one() const {
  FieldElement e = zero();
  e.c[0] = 1 % static_cast<int>(p);
  return e;
}

FieldElement FieldSpec::from_index(long long i) const {
  FieldElement e = zero();
  for (int k = 0; k < d; ++k) {
    e.c[k] = static_cast<int>(i % p);
    i /= p;
  }
  return e;
}

long long FieldSpec::to_index(const FieldElement& x) const {
  long long idx = 0;
  for (int k = d; k-- > 0;) idx = idx * p + x.c[k];
  return idx;
}

FieldElement FieldSpec::add(const FieldElement& x, const FieldElement& y) const {
  FieldElement z = zero();
  for (int k = 0; k < d; ++k) z.c[k] = static_cast<int>((x.c[k] + y.c[k]) % p);
  return z;
}

FieldElement FieldSpec::sub(const FieldElement& x, const FieldElement& y) const {
  FieldElement z = zero();
  for (int k = 0; k < d; ++k) z.c[k] = static_cast<int>(((x.c[k] - y.c[k]) % p + p) % p);
  return z;
}

FieldElement FieldSpec::mul(const FieldElement& x, const FieldElement& y) const {
  if (d == 1)
    return FieldElement{{static_cast<int>(static_cast<long long>(x.c[0]) * y.c[0] % p)}};
  Poly prod = poly_mulmod(x.c, y.c, modulus, p);
  prod.resize(d, 0);
  return FieldElement{std::move(prod)};
}

FieldElement FieldSpec::pow(const FieldElement& x, long long e) const {
  FieldElement r = one();
  FieldElement b = x;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldElement FieldSpec::inv(const FieldElement& x) const {
  if (x == zero()) throw std::invalid_argument("field inverse of zero");
  return pow(x, q - 2);
}

FieldSpec make_field(long long p, int d) {
  if (!is_prime(p) || d < 1) throw std::invalid_argument("make_field: need p prime and d >= 1");
  FieldSpec f;
  f.p = p;
  f.d = d;
  f.q = checked_pow(p, d);

  if (d > 1) {
    // Lexicographically least monic irreducible, comparing c0 first.
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    bool found = false;
    for (long long idx = 0; idx < count && !found; ++idx) {
      Poly cand(d + 1, 0);
      cand[d] = 1;
      long long t = idx;
      for (int k = d - 1; k >= 0; --k) {  // last coefficient varies fastest
        cand[k] = static_cast<int>(t % p);
        t /= p;
      }
      if (is_irreducible(cand, p)) {
        f.modulus = cand;
        found = true;
      }
    }
    if (!found) fail(errc::consistency_failure, "no irreducible polynomial found");
  }

  // Least primitive element, comparing c0 first.
  auto divisors = factorize(f.q - 1);
  bool found = false;
  long long scan = 1;
  for (int i = 0; i < d; ++i) scan *= p;
  for (long long idx = 1; idx < scan && !found; ++idx) {
    FieldElement cand = f.zero();
    long long t = idx;
    for (int k = d - 1; k >= 0; --k) {
      cand.c[k] = static_cast<int>(t % p);
      t /= p;
    }
    bool primitive = true;
    for (auto [r, e] : divisors)
      if (f.pow(cand, (f.q - 1) / r) == f.one()) {
        primitive = false;
        break;
      }
    if (primitive && f.pow(cand, f.q - 1) == f.one()) {
      f.omega = cand;
      found = true;
    }
  }
  if (!found) fail(errc::consistency_failure, "no primitive element found");
  return f;
}

}  // namespace mendel
