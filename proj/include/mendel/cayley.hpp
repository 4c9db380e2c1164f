#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mendel/errors.hpp"

namespace mendel {

inline constexpr long long kDefaultBudget = 100'000'000;  // backtracking nodes

// Finite quasigroup as an n x n Latin square on labels 0..n-1.
struct CayleyTable {
  int n = 0;
  std::vector<uint8_t> t;  // row-major, t[x*n+y] = x o y

  int at(int x, int y) const { return t[static_cast<size_t>(x) * n + y]; }
  void set(int x, int y, int v) { t[static_cast<size_t>(x) * n + y] = static_cast<uint8_t>(v); }

  bool operator==(const CayleyTable&) const = default;
};

// Validates both the row and column Latin conditions. Orders above 255 are
// out of scope and rejected.
CayleyTable make_cayley(int n, std::vector<uint8_t> table);

struct PropertyReport {
  bool idempotent = false;
  bool commutative = false;
  bool semisymmetric = false;
  bool totally_symmetric = false;
  bool medial = false;
  bool left_distributive = false;
  bool right_distributive = false;
  bool distributive = false;
  // Lexicographically least counterexample for each failed identity.
  std::optional<int> idempotent_witness;
  std::optional<std::array<int, 2>> commutative_witness;
  std::optional<std::array<int, 2>> semisymmetric_witness;
  std::optional<std::array<int, 4>> medial_witness;
  std::optional<std::array<int, 3>> left_distributive_witness;
  std::optional<std::array<int, 3>> right_distributive_witness;
};

// Exhaustive identity checks; the semisymmetric and commutative verdicts are
// recomputed from the translation maps (LxRx = I, Lx = Rx) as a cross-check.
PropertyReport predicate_suite(const CayleyTable& q, int threads = 1);

struct AntiDistributivity {
  bool antidistributive = false;
  // A triple of distinct non-block points satisfying one distributive law.
  std::optional<std::array<int, 3>> witness;
};

// Requires an idempotent semisymmetric table. The default mode scans right
// distributivity only: when every eligible triple violates it, the left
// violations follow for Mendelsohn quasigroups. Strict mode scans both laws.
AntiDistributivity is_antidistributive(const CayleyTable& q, bool strict = false, int threads = 1);

CayleyTable converse(const CayleyTable& q);

// Componentwise operation on pairs, indexed i1*n2+i2.
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

// Smallest subset containing gens closed under the operation and both
// divisions, sorted ascending.
std::vector<int> generated_sub(const CayleyTable& q, const std::vector<int>& gens);

// Table of a closed subset, relabeled 0..k-1 in the order given.
CayleyTable subtable(const CayleyTable& q, const std::vector<int>& elems);

CayleyTable relabel(const CayleyTable& q, const std::vector<int>& perm);

// Backtracking search for a bijection phi with phi(x o y) = phi(x) o' phi(y),
// pruned by translation cycle-type invariants. Budget counts candidate
// assignments; exceeding it raises search_budget_exceeded rather than
// returning a wrong answer.
std::optional<std::vector<int>> is_isomorphic(const CayleyTable& a, const CayleyTable& b,
                                              long long budget = kDefaultBudget);

}  // namespace mendel
