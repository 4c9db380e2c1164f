#pragma once

#include <vector>

#include "mendel/errors.hpp"

namespace mendel {

// Element of a finite abelian group, one residue per cyclic factor.
using Elem = std::vector<int>;

// Integer matrix acting on generator columns: matrix[i][j] is component i of
// the image of the j-th canonical generator, reduced mod factors[i].
using Matrix = std::vector<std::vector<int>>;

// Product of cyclic groups of prime-power order. Elements are enumerated
// canonically by mixed-radix counting with the first factor fastest.
struct AbelianGroup {
  std::vector<int> factors;
  long long order = 1;

  int rank() const { return static_cast<int>(factors.size()); }
  Elem identity() const { return Elem(factors.size(), 0); }
  Elem element(long long index) const;
  long long index_of(const Elem& x) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem smul(long long c, const Elem& x) const;
  long long element_order(const Elem& x) const;

  bool operator==(const AbelianGroup&) const = default;
};

// Validates every factor is a prime power >= 2 (callers wanting Z6-like
// factors must split them first) and that the order fits the cap.
AbelianGroup make_abelian_group(const std::vector<int>& orders);

struct GroupAutomorphism {
  AbelianGroup group;
  Matrix matrix;

  Elem apply(const Elem& x) const;
  bool operator==(const GroupAutomorphism&) const = default;
};

// Validates the divisibility condition entry*d_j = 0 (mod d_i) and
// bijectivity on all elements.
GroupAutomorphism check_automorphism(const AbelianGroup& g, const Matrix& a);

Matrix identity_matrix(const AbelianGroup& g);
Matrix reduce_matrix(const AbelianGroup& g, Matrix a);
Matrix matmul(const AbelianGroup& g, const Matrix& a, const Matrix& b);
Matrix matsub(const AbelianGroup& g, const Matrix& a, const Matrix& b);
Elem apply_matrix(const AbelianGroup& g, const Matrix& a, const Elem& x);
bool is_valid_hom(const AbelianGroup& g, const Matrix& a);
bool is_bijective_hom(const AbelianGroup& g, const Matrix& a);

}  // namespace mendel
