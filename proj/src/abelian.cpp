#include "mendel/abelian.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "mendel/numbers.hpp"

namespace mendel {

Elem AbelianGroup::element(long long index) const {
  Elem x(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    x[i] = static_cast<int>(index % factors[i]);
    index /= factors[i];
  }
  return x;
}

long long AbelianGroup::index_of(const Elem& x) const {
  long long idx = 0;
  for (size_t i = factors.size(); i-- > 0;) idx = idx * factors[i] + x[i];
  return idx;
}

Elem AbelianGroup::add(const Elem& x, const Elem& y) const {
  Elem z(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) z[i] = (x[i] + y[i]) % factors[i];
  return z;
}

Elem AbelianGroup::neg(const Elem& x) const {
  Elem z(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) z[i] = (factors[i] - x[i]) % factors[i];
  return z;
}

Elem AbelianGroup::smul(long long c, const Elem& x) const {
  Elem z(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    long long r = (c % factors[i]) * x[i] % factors[i];
    if (r < 0) r += factors[i];
    z[i] = static_cast<int>(r);
  }
  return z;
}

long long AbelianGroup::element_order(const Elem& x) const {
  long long ord = 1;
  for (size_t i = 0; i < factors.size(); ++i) {
    long long o = factors[i] / std::gcd<long long>(factors[i], x[i]);
    ord = std::lcm(ord, o);
  }
  return ord;
}

AbelianGroup make_abelian_group(const std::vector<int>& orders) {
  AbelianGroup g;
  g.factors = orders;
  for (int d : orders) {
    if (d < 2 || !is_prime_power(d))
      fail(errc::non_prime_power_factor, "factor " + std::to_string(d) + " is not a prime power >= 2");
    g.order *= d;
    if (g.order > kOrderCap) fail(errc::bound_exceeded, "group order exceeds cap");
  }
  return g;
}

Elem GroupAutomorphism::apply(const Elem& x) const { return apply_matrix(group, matrix, x); }

Elem apply_matrix(const AbelianGroup& g, const Matrix& a, const Elem& x) {
  int m = g.rank();
  Elem y(m);
  for (int i = 0; i < m; ++i) {
    long long s = 0;
    for (int j = 0; j < m; ++j) s += static_cast<long long>(a[i][j]) * x[j];
    y[i] = static_cast<int>(s % g.factors[i]);
  }
  return y;
}

Matrix identity_matrix(const AbelianGroup& g) {
  int m = g.rank();
  Matrix a(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) a[i][i] = 1 % g.factors[i];
  return a;
}

Matrix reduce_matrix(const AbelianGroup& g, Matrix a) {
  int m = g.rank();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int r = a[i][j] % g.factors[i];
      a[i][j] = r < 0 ? r + g.factors[i] : r;
    }
  return a;
}

Matrix matmul(const AbelianGroup& g, const Matrix& a, const Matrix& b) {
  int m = g.rank();
  Matrix c(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      long long s = 0;
      for (int k = 0; k < m; ++k) s += static_cast<long long>(a[i][k]) * b[k][j];
      c[i][j] = static_cast<int>(s % g.factors[i]);
    }
  return c;
}

Matrix matsub(const AbelianGroup& g, const Matrix& a, const Matrix& b) {
  int m = g.rank();
  Matrix c(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int r = (a[i][j] - b[i][j]) % g.factors[i];
      c[i][j] = r < 0 ? r + g.factors[i] : r;
    }
  return c;
}

bool is_valid_hom(const AbelianGroup& g, const Matrix& a) {
  int m = g.rank();
  if (static_cast<int>(a.size()) != m) return false;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != m) return false;
    for (int j = 0; j < m; ++j)
      if (static_cast<long long>(a[i][j]) * g.factors[j] % g.factors[i] != 0) return false;
  }
  return true;
}

bool is_bijective_hom(const AbelianGroup& g, const Matrix& a) {
  std::vector<char> seen(g.order, 0);
  for (long long idx = 0; idx < g.order; ++idx) {
    long long im = g.index_of(apply_matrix(g, a, g.element(idx)));
    if (seen[im]) return false;
    seen[im] = 1;
  }
  return true;
}

GroupAutomorphism check_automorphism(const AbelianGroup& g, const Matrix& a) {
  int m = g.rank();
  if (static_cast<int>(a.size()) != m)
    throw std::invalid_argument("check_automorphism: matrix rank mismatch");
  Matrix r = reduce_matrix(g, a);
  if (!is_valid_hom(g, r))
    fail(errc::not_homomorphism, "column image violates the divisibility condition");
  if (!is_bijective_hom(g, r)) fail(errc::not_bijective, "induced map is not a permutation");
  return GroupAutomorphism{g, std::move(r)};
}

}  // namespace mendel
