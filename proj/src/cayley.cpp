#include "mendel/cayley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <thread>

namespace mendel {

CayleyTable make_cayley(int n, std::vector<uint8_t> table) {
  if (n < 1 || n > 255) fail(errc::bound_exceeded, "quasigroup order must be in 1..255");
  if (table.size() != static_cast<size_t>(n) * n)
    fail(errc::not_latin, "table size does not match order");
  CayleyTable q{n, std::move(table)};
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      int v = q.at(x, y);
      if (v >= n || seen[v]) fail(errc::not_latin, "row " + std::to_string(x) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) {
      int v = q.at(x, y);
      if (seen[v]) fail(errc::not_latin, "column " + std::to_string(y) + " is not a permutation");
      seen[v] = 1;
    }
  }
  return q;
}

namespace {

// Covers [0,n) with `threads` workers; fn(t, begin, end).
void run_chunked(int n, int threads, const std::function<void(int, int, int)>& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int b = t * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back(fn, t, b, e);
  }
  for (auto& th : pool) th.join();
}

}  // namespace

PropertyReport predicate_suite(const CayleyTable& q, int threads) {
  const int n = q.n;
  PropertyReport r;

  r.idempotent = true;
  for (int x = 0; x < n && r.idempotent; ++x)
    if (q.at(x, x) != x) {
      r.idempotent = false;
      r.idempotent_witness = x;
    }

  r.commutative = true;
  for (int x = 0; x < n && r.commutative; ++x)
    for (int y = 0; y < n; ++y)
      if (q.at(x, y) != q.at(y, x)) {
        r.commutative = false;
        r.commutative_witness = {x, y};
        break;
      }

  r.semisymmetric = true;
  for (int x = 0; x < n && r.semisymmetric; ++x)
    for (int y = 0; y < n; ++y)
      if (q.at(x, q.at(y, x)) != y) {
        r.semisymmetric = false;
        r.semisymmetric_witness = {x, y};
        break;
      }

  // Cross-check via translations: Lx = Rx and LxRx = I.
  bool lr_equal = true, lxrx_id = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (q.at(x, y) != q.at(y, x)) lr_equal = false;
      if (q.at(x, q.at(y, x)) != y) lxrx_id = false;
    }
  if (lr_equal != r.commutative || lxrx_id != r.semisymmetric)
    fail(errc::consistency_failure, "translation cross-check disagrees with identity scan");

  r.totally_symmetric = r.commutative && r.semisymmetric;

  r.left_distributive = true;
  for (int x = 0; x < n && r.left_distributive; ++x)
    for (int y = 0; y < n && r.left_distributive; ++y)
      for (int z = 0; z < n; ++z)
        if (q.at(x, q.at(y, z)) != q.at(q.at(x, y), q.at(x, z))) {
          r.left_distributive = false;
          r.left_distributive_witness = {x, y, z};
          break;
        }

  r.right_distributive = true;
  for (int x = 0; x < n && r.right_distributive; ++x)
    for (int y = 0; y < n && r.right_distributive; ++y)
      for (int z = 0; z < n; ++z)
        if (q.at(q.at(x, y), z) != q.at(q.at(x, z), q.at(y, z))) {
          r.right_distributive = false;
          r.right_distributive_witness = {x, y, z};
          break;
        }

  r.distributive = r.left_distributive && r.right_distributive;

  // Medial scan is the O(n^4) part; parallel over the outer index with the
  // lexicographically least witness kept.
  std::vector<std::optional<std::array<int, 4>>> local(std::max(1, threads));
  run_chunked(n, threads, [&](int t, int b, int e) {
    const uint8_t* tab = q.t.data();
    for (int x = b; x < e; ++x)
      for (int y = 0; y < n; ++y) {
        int xy = tab[x * n + y];
        for (int u = 0; u < n; ++u) {
          int xu = tab[x * n + u];
          const uint8_t* rowxy = tab + xy * n;
          const uint8_t* rowxu = tab + xu * n;
          for (int v = 0; v < n; ++v)
            if (rowxy[tab[u * n + v]] != rowxu[tab[y * n + v]]) {
              local[t] = {x, y, u, v};
              return;
            }
        }
      }
  });
  r.medial = true;
  for (auto& w : local)
    if (w && (!r.medial_witness || *w < *r.medial_witness)) {
      r.medial = false;
      r.medial_witness = w;
    }

  return r;
}

AntiDistributivity is_antidistributive(const CayleyTable& q, bool strict, int threads) {
  const int n = q.n;
  {
    bool idem = true, semi = true;
    for (int x = 0; x < n && idem; ++x) idem = q.at(x, x) == x;
    for (int x = 0; x < n && semi; ++x)
      for (int y = 0; y < n; ++y)
        if (q.at(x, q.at(y, x)) != y) {
          semi = false;
          break;
        }
    if (!idem || !semi) fail(errc::not_mendelsohn, "table is not idempotent semisymmetric");
  }

  // Eligible triples: distinct x,y,z with <x,y,z> not a block, i.e. z != x o y.
  std::vector<std::optional<std::array<int, 3>>> local(std::max(1, threads));
  run_chunked(n, threads, [&](int t, int b, int e) {
    for (int x = b; x < e; ++x)
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        int xy = q.at(x, y);
        for (int z = 0; z < n; ++z) {
          if (z == x || z == y || z == xy) continue;
          bool right = q.at(xy, z) == q.at(q.at(x, z), q.at(y, z));
          bool left = strict && q.at(x, q.at(y, z)) == q.at(xy, q.at(x, z));
          if (right || left) {
            local[t] = {x, y, z};
            return;
          }
        }
      }
  });
  AntiDistributivity out;
  out.antidistributive = true;
  for (auto& w : local)
    if (w && (!out.witness || *w < *out.witness)) {
      out.antidistributive = false;
      out.witness = w;
    }
  return out;
}

CayleyTable converse(const CayleyTable& q) {
  CayleyTable c{q.n, std::vector<uint8_t>(q.t.size())};
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y) c.set(x, y, q.at(y, x));
  return c;
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  long long n = static_cast<long long>(a.n) * b.n;
  if (n > 255) fail(errc::bound_exceeded, "product order exceeds 255");
  CayleyTable c{static_cast<int>(n), std::vector<uint8_t>(n * n)};
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int x2 = 0; x2 < b.n; ++x2)
      for (int y1 = 0; y1 < a.n; ++y1)
        for (int y2 = 0; y2 < b.n; ++y2)
          c.set(x1 * b.n + x2, y1 * b.n + y2, a.at(x1, y1) * b.n + b.at(x2, y2));
  return c;
}

std::vector<int> generated_sub(const CayleyTable& q, const std::vector<int>& gens) {
  if (gens.empty()) throw std::invalid_argument("generated_sub: empty generator set");
  std::vector<char> in(q.n, 0);
  std::vector<int> members;
  auto push = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  };
  for (int g : gens) push(g);

  auto restriction_is_latin = [&]() {
    std::vector<char> seen(q.n);
    for (int x : members) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int y : members) {
        int v = q.at(x, y);
        if (!in[v] || seen[v]) return false;
        seen[v] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (int y : members) {
        int v = q.at(y, x);
        if (!in[v] || seen[v]) return false;
        seen[v] = 1;
      }
    }
    return true;
  };

  for (;;) {
    // Close under the operation (members grows while we scan it).
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) push(q.at(members[i], members[j]));

    // In a finite quasigroup a closed subset is already a subquasigroup;
    // the division pass below only runs if that ever fails to hold.
    if (restriction_is_latin()) break;

    size_t before = members.size();
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) {
        int x = members[i], y = members[j];
        for (int z = 0; z < q.n; ++z) {
          if (q.at(x, z) == y) push(z);  // left division
          if (q.at(z, x) == y) push(z);  // right division
        }
      }
    if (members.size() == before)
      fail(errc::consistency_failure, "division closure did not reach a subquasigroup");
  }
  std::sort(members.begin(), members.end());
  return members;
}

CayleyTable subtable(const CayleyTable& q, const std::vector<int>& elems) {
  int k = static_cast<int>(elems.size());
  std::vector<int> pos(q.n, -1);
  for (int i = 0; i < k; ++i) pos[elems[i]] = i;
  std::vector<uint8_t> t(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int v = pos[q.at(elems[i], elems[j])];
      if (v < 0) fail(errc::consistency_failure, "subtable of a non-closed subset");
      t[static_cast<size_t>(i) * k + j] = static_cast<uint8_t>(v);
    }
  return make_cayley(k, std::move(t));
}

CayleyTable relabel(const CayleyTable& q, const std::vector<int>& perm) {
  CayleyTable c{q.n, std::vector<uint8_t>(q.t.size())};
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y) c.set(perm[x], perm[y], perm[q.at(x, y)]);
  return c;
}

namespace {

std::vector<int> cycle_type(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::vector<int> type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = perm[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

// Per-element invariant: cycle types of the left and right translations.
std::string element_invariant(const CayleyTable& q, int x) {
  std::vector<int> lx(q.n), rx(q.n);
  for (int y = 0; y < q.n; ++y) {
    lx[y] = q.at(x, y);
    rx[y] = q.at(y, x);
  }
  std::string key = "L";
  for (int c : cycle_type(lx)) key += std::to_string(c) + ",";
  key += "R";
  for (int c : cycle_type(rx)) key += std::to_string(c) + ",";
  return key;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const CayleyTable& a, const CayleyTable& b,
                                              long long budget) {
  if (a.n != b.n) return std::nullopt;
  const int n = a.n;

  std::vector<std::string> inva(n), invb(n);
  for (int x = 0; x < n; ++x) {
    inva[x] = element_invariant(a, x);
    invb[x] = element_invariant(b, x);
  }
  std::map<std::string, int> count;
  for (int x = 0; x < n; ++x) {
    ++count[inva[x]];
    --count[invb[x]];
  }
  for (auto& [k, v] : count)
    if (v != 0) return std::nullopt;

  std::vector<std::vector<int>> candidates(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (inva[x] == invb[y]) candidates[x].push_back(y);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    if (candidates[u].size() != candidates[v].size())
      return candidates[u].size() < candidates[v].size();
    return u < v;
  });

  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  std::vector<int> assigned;  // trail of domain elements, in assignment order
  long long nodes = 0;

  // Assign phi[x]=y and propagate all forced images; on failure the trail
  // from `mark` is undone by the caller.
  auto do_assign = [&](int x0, int y0) -> bool {
    if (used[y0] || inva[x0] != invb[y0]) return false;
    phi[x0] = y0;
    used[y0] = 1;
    assigned.push_back(x0);
    for (size_t head = assigned.size() - 1; head < assigned.size(); ++head) {
      int x = assigned[head];
      for (size_t i = 0; i < assigned.size(); ++i) {
        int z = assigned[i];
        int c1 = a.at(x, z), d1 = b.at(phi[x], phi[z]);
        if (phi[c1] == -1) {
          if (used[d1] || inva[c1] != invb[d1]) return false;
          phi[c1] = d1;
          used[d1] = 1;
          assigned.push_back(c1);
        } else if (phi[c1] != d1) {
          return false;
        }
        int c2 = a.at(z, x), d2 = b.at(phi[z], phi[x]);
        if (phi[c2] == -1) {
          if (used[d2] || inva[c2] != invb[d2]) return false;
          phi[c2] = d2;
          used[d2] = 1;
          assigned.push_back(c2);
        } else if (phi[c2] != d2) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool()> dfs = [&]() -> bool {
    int x = -1;
    for (int i = 0; i < n; ++i)
      if (phi[order[i]] == -1) {
        x = order[i];
        break;
      }
    if (x == -1) return true;
    size_t mark = assigned.size();
    for (int y : candidates[x]) {
      if (used[y]) continue;
      if (++nodes > budget)
        fail(errc::search_budget_exceeded, "isomorphism search exceeded node budget");
      if (do_assign(x, y) && dfs()) return true;
      while (assigned.size() > mark) {
        int z = assigned.back();
        assigned.pop_back();
        used[phi[z]] = 0;
        phi[z] = -1;
      }
    }
    return false;
  };

  if (!dfs()) return std::nullopt;

  // Final sanity pass.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (phi[a.at(x, y)] != b.at(phi[x], phi[y]))
        fail(errc::consistency_failure, "isomorphism search returned a non-homomorphism");
  return phi;
}

}  // namespace mendel
