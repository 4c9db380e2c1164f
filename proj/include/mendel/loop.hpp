#pragma once

#include <cstdint>
#include <vector>

#include "mendel/abelian.hpp"
#include "mendel/cayley.hpp"

namespace mendel {

// Finite loop given by its Cayley table and identity element.
struct LoopTable {
  int n = 0;
  int identity = 0;
  std::vector<uint8_t> t;

  int at(int x, int y) const { return t[static_cast<size_t>(x) * n + y]; }
  bool operator==(const LoopTable&) const = default;
};

// Validates the Latin property and the identity row/column.
LoopTable make_loop(int n, std::vector<uint8_t> table, int identity);

LoopTable loop_from_group(const AbelianGroup& g);

bool is_associative(const LoopTable& l);

// Commutative plus (x+x)+(y+z) = (x+y)+(x+z) over all triples.
bool is_commutative_moufang(const LoopTable& l);

// Elements associating with all pairs (all three bracket positions checked).
std::vector<int> nucleus(const LoopTable& l);

int loop_inverse(const LoopTable& l, int x);
int loop_sub(const LoopTable& l, int x, int y);  // x + (-y)

bool is_loop_automorphism(const LoopTable& l, const std::vector<int>& k);

// Automorphism with x + k(x) in the nucleus for every x.
bool is_nuclear_automorphism(const LoopTable& l, const std::vector<int>& k);

// Aff(L,k): table of (x - k(x)) + k(y). Requires a commutative Moufang loop,
// a nuclear automorphism and bijective x - k(x); the result is idempotent but
// semisymmetry is up to the chosen k.
CayleyTable affine_over_loop(const LoopTable& l, const std::vector<int>& k);

// All nuclear automorphisms k with k(x) - k(k(x)) = x for every x (the
// pointwise Mendelsohn condition), found by backtracking over images.
std::vector<std::vector<int>> find_mendelsohn_automorphisms(const LoopTable& l,
                                                            long long budget = kDefaultBudget);

}  // namespace mendel
