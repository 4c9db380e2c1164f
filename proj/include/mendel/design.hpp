#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mendel/cayley.hpp"

namespace mendel {

// Mendelsohn triple system: cyclic blocks in canonical rotation (least point
// first), sorted; every ordered pair of distinct points in exactly one block.
struct OrientedTripleSystem {
  int v = 0;
  std::vector<std::array<int, 3>> blocks;
  bool operator==(const OrientedTripleSystem&) const = default;
};

// Steiner triple system: 3-subsets sorted ascending, list sorted; every
// unordered pair in exactly one block.
struct UnorderedTripleSystem {
  int v = 0;
  std::vector<std::array<int, 3>> blocks;
  bool operator==(const UnorderedTripleSystem&) const = default;
};

std::array<int, 3> canonical_rotation(std::array<int, 3> b);

// allow_any_order suppresses the v = 0,1 (mod 3), v != 6 sanity check so
// deliberately invalid inputs can be probed.
OrientedTripleSystem validate_mts(int v, std::vector<std::array<int, 3>> blocks,
                                  bool allow_any_order = false);

// Order sanity here is v = 1 or 3 (mod 6).
UnorderedTripleSystem validate_sts(int v, std::vector<std::array<int, 3>> blocks,
                                   bool allow_any_order = false);

CayleyTable mts_to_quasigroup(const OrientedTripleSystem& s);
OrientedTripleSystem quasigroup_to_mts(const CayleyTable& q);

CayleyTable sts_to_quasigroup(const UnorderedTripleSystem& s);

// Inverse of sts_to_quasigroup; requires a totally symmetric idempotent table.
UnorderedTripleSystem quasigroup_to_sts(const CayleyTable& q);

// Every block written in both cyclic orders.
OrientedTripleSystem doubled_orientation(const UnorderedTripleSystem& s);

// True iff some block's reversal is missing.
bool is_proper(const OrientedTripleSystem& s);

struct Mitre {
  std::array<int, 3> triple;                 // (x,y,z) satisfying the right law
  std::array<std::array<int, 3>, 5> blocks;  // the five-block configuration
};

// Scans ordered non-block triples for a satisfied distributive instance in
// the Steiner quasigroup; none found means the system is anti-mitre.
std::optional<Mitre> find_mitre(const UnorderedTripleSystem& s, int threads = 1);

}  // namespace mendel
