#include "mendel/design.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <thread>

namespace mendel {

std::array<int, 3> canonical_rotation(std::array<int, 3> b) {
  int m = std::min({b[0], b[1], b[2]});
  while (b[0] != m) b = {b[1], b[2], b[0]};
  return b;
}

namespace {

void check_points(int v, const std::array<int, 3>& b) {
  for (int p : b)
    if (p < 0 || p >= v) fail(errc::parse_error, "point " + std::to_string(p) + " out of range");
  if (b[0] == b[1] || b[1] == b[2] || b[0] == b[2])
    fail(errc::pair_covered, "block with a repeated point");
}

}  // namespace

OrientedTripleSystem validate_mts(int v, std::vector<std::array<int, 3>> blocks,
                                  bool allow_any_order) {
  if (v < 1) fail(errc::bad_order, "order must be positive");
  if (!allow_any_order && (v % 3 == 2 || v == 6))
    fail(errc::bad_order, "no MTS of order " + std::to_string(v) + " exists");

  std::vector<char> covered(static_cast<size_t>(v) * v, 0);
  auto cover = [&](int a, int b) {
    char& c = covered[static_cast<size_t>(a) * v + b];
    if (c)
      fail(errc::pair_covered,
           "ordered pair (" + std::to_string(a) + "," + std::to_string(b) + ") covered twice");
    c = 1;
  };
  for (auto& b : blocks) {
    check_points(v, b);
    cover(b[0], b[1]);
    cover(b[1], b[2]);
    cover(b[2], b[0]);
  }
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      if (a != b && !covered[static_cast<size_t>(a) * v + b])
        fail(errc::pair_covered,
             "ordered pair (" + std::to_string(a) + "," + std::to_string(b) + ") never covered");

  for (auto& b : blocks) b = canonical_rotation(b);
  std::sort(blocks.begin(), blocks.end());
  return OrientedTripleSystem{v, std::move(blocks)};
}

UnorderedTripleSystem validate_sts(int v, std::vector<std::array<int, 3>> blocks,
                                   bool allow_any_order) {
  if (v < 1) fail(errc::bad_order, "order must be positive");
  if (!allow_any_order && v % 6 != 1 && v % 6 != 3)
    fail(errc::bad_order, "no STS of order " + std::to_string(v) + " exists");

  std::vector<char> covered(static_cast<size_t>(v) * v, 0);
  auto cover = [&](int a, int b) {
    char& c = covered[static_cast<size_t>(std::min(a, b)) * v + std::max(a, b)];
    if (c)
      fail(errc::pair_covered,
           "pair {" + std::to_string(a) + "," + std::to_string(b) + "} covered twice");
    c = 1;
  };
  for (auto& b : blocks) {
    check_points(v, b);
    cover(b[0], b[1]);
    cover(b[1], b[2]);
    cover(b[0], b[2]);
    std::sort(b.begin(), b.end());
  }
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (!covered[static_cast<size_t>(a) * v + b])
        fail(errc::pair_covered,
             "pair {" + std::to_string(a) + "," + std::to_string(b) + "} never covered");

  std::sort(blocks.begin(), blocks.end());
  return UnorderedTripleSystem{v, std::move(blocks)};
}

CayleyTable mts_to_quasigroup(const OrientedTripleSystem& s) {
  int n = s.v;
  std::vector<uint8_t> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) t[static_cast<size_t>(x) * n + x] = static_cast<uint8_t>(x);
  for (auto& b : s.blocks) {
    t[static_cast<size_t>(b[0]) * n + b[1]] = static_cast<uint8_t>(b[2]);
    t[static_cast<size_t>(b[1]) * n + b[2]] = static_cast<uint8_t>(b[0]);
    t[static_cast<size_t>(b[2]) * n + b[0]] = static_cast<uint8_t>(b[1]);
  }
  return make_cayley(n, std::move(t));
}

OrientedTripleSystem quasigroup_to_mts(const CayleyTable& q) {
  for (int x = 0; x < q.n; ++x)
    if (q.at(x, x) != x)
      fail(errc::not_mendelsohn_quasigroup, "table is not idempotent");
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (q.at(x, q.at(y, x)) != y)
        fail(errc::not_mendelsohn_quasigroup, "table is not semisymmetric");

  std::set<std::array<int, 3>> blocks;
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (x != y) blocks.insert(canonical_rotation({x, y, q.at(x, y)}));
  return validate_mts(q.n, {blocks.begin(), blocks.end()}, true);
}

CayleyTable sts_to_quasigroup(const UnorderedTripleSystem& s) {
  int n = s.v;
  std::vector<uint8_t> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) t[static_cast<size_t>(x) * n + x] = static_cast<uint8_t>(x);
  for (auto& b : s.blocks) {
    int a = b[0], c = b[1], d = b[2];
    t[static_cast<size_t>(a) * n + c] = t[static_cast<size_t>(c) * n + a] = static_cast<uint8_t>(d);
    t[static_cast<size_t>(c) * n + d] = t[static_cast<size_t>(d) * n + c] = static_cast<uint8_t>(a);
    t[static_cast<size_t>(a) * n + d] = t[static_cast<size_t>(d) * n + a] = static_cast<uint8_t>(c);
  }
  return make_cayley(n, std::move(t));
}

UnorderedTripleSystem quasigroup_to_sts(const CayleyTable& q) {
  for (int x = 0; x < q.n; ++x)
    if (q.at(x, x) != x)
      fail(errc::not_mendelsohn_quasigroup, "table is not idempotent");
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (q.at(x, y) != q.at(y, x) || q.at(x, q.at(y, x)) != y)
        fail(errc::not_mendelsohn_quasigroup, "table is not totally symmetric");

  std::set<std::array<int, 3>> blocks;
  for (int x = 0; x < q.n; ++x)
    for (int y = x + 1; y < q.n; ++y) {
      std::array<int, 3> b{x, y, q.at(x, y)};
      std::sort(b.begin(), b.end());
      blocks.insert(b);
    }
  return validate_sts(q.n, {blocks.begin(), blocks.end()}, true);
}

OrientedTripleSystem doubled_orientation(const UnorderedTripleSystem& s) {
  std::vector<std::array<int, 3>> blocks;
  blocks.reserve(s.blocks.size() * 2);
  for (auto& b : s.blocks) {
    blocks.push_back({b[0], b[1], b[2]});
    blocks.push_back({b[0], b[2], b[1]});
  }
  return validate_mts(s.v, std::move(blocks), true);
}

bool is_proper(const OrientedTripleSystem& s) {
  std::set<std::array<int, 3>> have(s.blocks.begin(), s.blocks.end());
  for (auto& b : s.blocks)
    if (!have.count(canonical_rotation({b[0], b[2], b[1]}))) return true;
  return false;
}

std::optional<Mitre> find_mitre(const UnorderedTripleSystem& s, int threads) {
  CayleyTable q = sts_to_quasigroup(s);
  const int n = q.n;

  std::vector<std::optional<std::array<int, 3>>> local(std::max(1, threads));
  auto worker = [&](int t, int b, int e) {
    for (int x = b; x < e; ++x)
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        int c = q.at(x, y);
        for (int z = 0; z < n; ++z) {
          if (z == x || z == y || z == c) continue;  // skip degenerate and block triples
          if (q.at(c, z) == q.at(q.at(x, z), q.at(y, z))) {
            local[t] = {x, y, z};
            return;
          }
        }
      }
  };
  {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
      worker(0, 0, n);
    } else {
      std::vector<std::thread> pool;
      int chunk = (n + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        int b = t * chunk, e = std::min(n, b + chunk);
        if (b < e) pool.emplace_back(worker, t, b, e);
      }
      for (auto& th : pool) th.join();
    }
  }

  std::optional<std::array<int, 3>> best;
  for (auto& w : local)
    if (w && (!best || *w < *best)) best = w;
  if (!best) return std::nullopt;

  auto [x, y, z] = *best;
  int c = q.at(x, y), b = q.at(x, z), a = q.at(y, z), g = q.at(c, z);
  auto sorted = [](std::array<int, 3> t3) {
    std::sort(t3.begin(), t3.end());
    return t3;
  };
  Mitre m;
  m.triple = {x, y, z};
  m.blocks = {sorted({z, b, x}), sorted({z, g, c}), sorted({z, a, y}), sorted({b, g, a}),
              sorted({x, c, y})};
  return m;
}

}  // namespace mendel
