#pragma once

#include <vector>

#include "mendel/errors.hpp"

namespace mendel {

// Element of GF(p^d): d residues mod p, coefficients of the representative
// polynomial in increasing degree.
struct FieldElement {
  std::vector<int> c;
  bool operator==(const FieldElement&) const = default;
};

// GF(p^d) with a fixed monic irreducible modulus and primitive element.
// Both are deterministic: the lexicographically least choices, comparing
// coefficient vectors low degree first. For d = 1 the modulus is empty and
// arithmetic short-circuits to Z_p.
struct FieldSpec {
  long long p = 0;
  int d = 0;
  long long q = 0;                // p^d
  std::vector<int> modulus;       // size d+1, monic; empty when d == 1
  FieldElement omega;

  FieldElement zero() const { return FieldElement{std::vector<int>(d, 0)}; }
  FieldElement one() const;
  FieldElement from_index(long long i) const;  // i = sum c_k p^k
  long long to_index(const FieldElement& x) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement pow(const FieldElement& x, long long e) const;
  FieldElement inv(const FieldElement& x) const;
};

FieldSpec make_field(long long p, int d);

}  // namespace mendel
