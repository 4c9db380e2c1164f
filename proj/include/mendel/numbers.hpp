#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mendel {

// All orders handled by the library stay below this; 64-bit intermediates
// then never overflow.
inline constexpr long long kOrderCap = 1LL << 16;

bool is_prime(long long n);

// Trial-division factorization, primes ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

bool is_prime_power(long long n, long long* prime = nullptr, int* exponent = nullptr);

// base^exp, failing with bound_exceeded above `limit`.
long long checked_pow(long long base, int exp, long long limit = kOrderCap);

// All k in [0, p^d) with k^2 - k + 1 = 0 (mod p^d), ascending. Roots mod p
// are found by trial and lifted one prime power at a time.
std::vector<long long> roots_of_f(long long p, int d);

}  // namespace mendel
