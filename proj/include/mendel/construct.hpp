#pragma once

#include <optional>
#include <utility>

#include "mendel/abelian.hpp"
#include "mendel/cayley.hpp"
#include "mendel/design.hpp"

namespace mendel {

// Aff(G,k) under canonical element indexing. Requires the Mendelsohn
// condition k^2 - k + I = 0, verified pointwise on all elements.
CayleyTable affine_mendelsohn(const AbelianGroup& g, const GroupAutomorphism& k);

// Aff over the additive group of GF(p^d) with k a primitive sixth root of
// unity; needs p^d = 1 (mod 6).
CayleyTable field_mendelsohn(long long p, int d);

// Aff over the additive group of GF(2^(2d)) with k a primitive third root of
// unity.
CayleyTable char2_mendelsohn(int d);

// The Steiner quasigroup x o y = -x - y over (Z_3)^d.
CayleyTable steiner_affine(int d);

// True iff every prime q = 2 (mod 3) occurs in v to an even power.
bool spectrum_member(long long v);

// The first violating (prime, exponent), if any.
std::optional<std::pair<long long, int>> spectrum_offender(long long v);

// A medial Mendelsohn quasigroup of order v, built as a direct product of
// one factor per prime power, prime powers taken in increasing order.
CayleyTable spectrum_construct(long long v);

// PG(n-1,2): points are the nonzero vectors of F_2^n labeled by binary value
// minus one; blocks are {x, y, x xor y}.
UnorderedTripleSystem projective_sts(int n);

// Netto system of order p^d = 7 (mod 12).
UnorderedTripleSystem netto_sts(long long p, int d);

// The doubling construction: a proper MTS(2u+1) from an STS(u). Base blocks
// {a,b,c} are oriented <a,b,c> with a<b<c unless an explicit orientation is
// supplied; points map a_j -> 2a+j, infinity -> 2u.
OrientedTripleSystem anti_double(const UnorderedTripleSystem& c,
                                 const std::vector<std::array<int, 3>>* orientation = nullptr);

}  // namespace mendel
