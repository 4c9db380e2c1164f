#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mendel/abelian.hpp"
#include "mendel/cayley.hpp"
#include "mendel/loop.hpp"

namespace mendel {

struct SolveOptions {
  bool brute_force = false;      // force the column-scan cross-check path
  long long budget = kDefaultBudget;
  int max_prime_power = 256;     // cap on prime-power parts in count_affine
};

// All automorphisms k of G with k^2 - k + I = 0 (then k is automatically
// invertible with inverse I - k). Elementary abelian primary parts are
// generated structurally from the canonical forms of f and conjugation
// orbits; mixed parts are scanned column by column.
std::vector<GroupAutomorphism> solutions_of_f(const AbelianGroup& g, const SolveOptions& opt = {});

// Partition of ks into Aut(G)-conjugacy classes. Classes and their members
// are sorted; the representative is the lexicographically least matrix.
std::vector<std::vector<GroupAutomorphism>> conjugacy_classes(
    const AbelianGroup& g, const std::vector<GroupAutomorphism>& ks,
    long long budget = kDefaultBudget);

// Is there psi in Aut(G) with psi a psi^-1 = b?
bool conjugate_in_aut(const AbelianGroup& g, const Matrix& a, const Matrix& b,
                      long long budget = kDefaultBudget);

// Aff(G1,k1) iso Aff(G2,k2) iff G1 iso G2 and the parameters are conjugate
// under that isomorphism.
bool kepka_nemec_iso(const AbelianGroup& g1, const GroupAutomorphism& k1, const AbelianGroup& g2,
                     const GroupAutomorphism& k2, long long budget = kDefaultBudget);

// Conjugacy of k with I - k.
bool is_self_converse(const AbelianGroup& g, const GroupAutomorphism& k,
                      long long budget = kDefaultBudget);

struct GroupClasses {
  AbelianGroup group;
  std::vector<GroupAutomorphism> representatives;  // one per class
};

struct EnumerationReport {
  long long v = 0;
  std::vector<GroupClasses> per_group;  // every abelian group of order v
  long long a = 0;
  std::optional<long long> b;  // only from imported loop tables
  std::optional<long long> d;
};

// a(v) over all abelian groups of order v, one per partition type per prime;
// class counts multiply across coprime parts.
EnumerationReport count_affine(long long v, const SolveOptions& opt = {});

std::string report_to_text(const EnumerationReport& report);

// Canonical factor lists (descending) of all abelian groups of order v.
std::vector<std::vector<int>> abelian_groups_of_order(long long v);

struct LoopEnumeration {
  long long b = 0;                          // non-medial classes found
  std::vector<CayleyTable> representatives;
};

// Distributive Mendelsohn quasigroups affine over the supplied loops: every
// nuclear automorphism satisfying the pointwise Mendelsohn condition yields
// one; the non-medial ones are classified up to isomorphism.
LoopEnumeration distributive_from_loops(const std::vector<LoopTable>& loops,
                                        long long budget = kDefaultBudget);

}  // namespace mendel
