#include "mendel/numbers.hpp"

#include <algorithm>
#include <stdexcept>

#include "mendel/errors.hpp"

namespace mendel {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime_power(long long n, long long* prime, int* exponent) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (prime) *prime = f[0].first;
  if (exponent) *exponent = f[0].second;
  return true;
}

long long checked_pow(long long base, int exp, long long limit) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > limit)
      fail(errc::bound_exceeded,
           "power " + std::to_string(base) + "^" + std::to_string(exp) + " exceeds cap " +
               std::to_string(limit));
  }
  return r;
}

std::vector<long long> roots_of_f(long long p, int d) {
  if (!is_prime(p) || d < 1) throw std::invalid_argument("roots_of_f: need p prime and d >= 1");
  long long target = checked_pow(p, d);

  std::vector<long long> roots;
  for (long long k = 0; k < p; ++k)
    if ((k * k - k + 1) % p == 0) roots.push_back(k);

  long long mod = p;
  while (mod < target) {
    long long next = mod * p;
    std::vector<long long> lifted;
    for (long long r : roots)
      for (long long t = 0; t < p; ++t) {
        long long c = r + t * mod;
        if ((c * c - c + 1) % next == 0) lifted.push_back(c);
      }
    roots = std::move(lifted);
    mod = next;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace mendel
