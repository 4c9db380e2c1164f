#include "mendel/loop.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mendel {

LoopTable make_loop(int n, std::vector<uint8_t> table, int identity) {
  if (n < 1 || n > 255) fail(errc::bound_exceeded, "loop order must be in 1..255");
  if (identity < 0 || identity >= n) throw std::invalid_argument("make_loop: identity out of range");
  if (table.size() != static_cast<size_t>(n) * n) fail(errc::not_latin, "table size mismatch");
  LoopTable l{n, identity, std::move(table)};
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      int v = l.at(x, y);
      if (v >= n || seen[v]) fail(errc::not_latin, "row " + std::to_string(x) + " not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      int v = l.at(y, x);
      if (seen[v]) fail(errc::not_latin, "column " + std::to_string(x) + " not a permutation");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    if (l.at(identity, x) != x || l.at(x, identity) != x)
      fail(errc::not_latin, "identity row/column violated at " + std::to_string(x));
  return l;
}

LoopTable loop_from_group(const AbelianGroup& g) {
  int n = static_cast<int>(g.order);
  if (n > 255) fail(errc::bound_exceeded, "loop order must be in 1..255");
  std::vector<uint8_t> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<size_t>(x) * n + y] =
          static_cast<uint8_t>(g.index_of(g.add(g.element(x), g.element(y))));
  return make_loop(n, std::move(t), 0);
}

bool is_associative(const LoopTable& l) {
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      for (int z = 0; z < l.n; ++z)
        if (l.at(l.at(x, y), z) != l.at(x, l.at(y, z))) return false;
  return true;
}

bool is_commutative_moufang(const LoopTable& l) {
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      if (l.at(x, y) != l.at(y, x)) return false;
  for (int x = 0; x < l.n; ++x) {
    int xx = l.at(x, x);
    for (int y = 0; y < l.n; ++y) {
      int xy = l.at(x, y);
      for (int z = 0; z < l.n; ++z)
        if (l.at(xx, l.at(y, z)) != l.at(xy, l.at(x, z))) return false;
    }
  }
  return true;
}

std::vector<int> nucleus(const LoopTable& l) {
  std::vector<int> nuc;
  for (int a = 0; a < l.n; ++a) {
    bool ok = true;
    for (int x = 0; x < l.n && ok; ++x)
      for (int y = 0; y < l.n; ++y) {
        if (l.at(l.at(a, x), y) != l.at(a, l.at(x, y)) ||
            l.at(l.at(x, a), y) != l.at(x, l.at(a, y)) ||
            l.at(l.at(x, y), a) != l.at(x, l.at(y, a))) {
          ok = false;
          break;
        }
      }
    if (ok) nuc.push_back(a);
  }
  return nuc;
}

int loop_inverse(const LoopTable& l, int x) {
  for (int y = 0; y < l.n; ++y)
    if (l.at(x, y) == l.identity) return y;
  fail(errc::consistency_failure, "no inverse found in a Latin table");
}

int loop_sub(const LoopTable& l, int x, int y) { return l.at(x, loop_inverse(l, y)); }

bool is_loop_automorphism(const LoopTable& l, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != l.n) return false;
  std::vector<char> seen(l.n, 0);
  for (int v : k) {
    if (v < 0 || v >= l.n || seen[v]) return false;
    seen[v] = 1;
  }
  if (k[l.identity] != l.identity) return false;
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      if (k[l.at(x, y)] != l.at(k[x], k[y])) return false;
  return true;
}

bool is_nuclear_automorphism(const LoopTable& l, const std::vector<int>& k) {
  if (!is_loop_automorphism(l, k)) return false;
  auto nuc = nucleus(l);
  std::vector<char> in(l.n, 0);
  for (int a : nuc) in[a] = 1;
  for (int x = 0; x < l.n; ++x)
    if (!in[l.at(x, k[x])]) return false;
  return true;
}

CayleyTable affine_over_loop(const LoopTable& l, const std::vector<int>& k) {
  if (!is_commutative_moufang(l)) fail(errc::not_cml, "loop is not a commutative Moufang loop");
  if (!is_nuclear_automorphism(l, k)) fail(errc::not_nuclear, "map is not a nuclear automorphism");

  std::vector<int> inv(l.n), ik(l.n);
  for (int x = 0; x < l.n; ++x) inv[x] = loop_inverse(l, x);
  std::vector<char> seen(l.n, 0);
  for (int x = 0; x < l.n; ++x) {
    ik[x] = l.at(x, inv[k[x]]);  // x - k(x)
    if (seen[ik[x]]) fail(errc::i_minus_k_not_bijective, "x - k(x) is not a bijection");
    seen[ik[x]] = 1;
  }

  std::vector<uint8_t> t(static_cast<size_t>(l.n) * l.n);
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      t[static_cast<size_t>(x) * l.n + y] = static_cast<uint8_t>(l.at(ik[x], k[y]));
  return make_cayley(l.n, std::move(t));
}

std::vector<std::vector<int>> find_mendelsohn_automorphisms(const LoopTable& l, long long budget) {
  const int n = l.n;
  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[x] = loop_inverse(l, x);
  auto nuc = nucleus(l);
  std::vector<char> in_nuc(n, 0);
  for (int a : nuc) in_nuc[a] = 1;

  // Order of the cyclic subloop generated by x (well defined: commutative
  // Moufang loops are diassociative).
  std::vector<int> elt_order(n);
  for (int x = 0; x < n; ++x) {
    int v = x, ord = 1;
    while (v != l.identity) {
      v = l.at(v, x);
      ++ord;
    }
    elt_order[x] = ord;
  }

  std::vector<std::vector<int>> found;
  std::vector<int> k(n, -1);
  std::vector<char> used(n, 0);
  std::vector<int> trail;
  long long nodes = 0;

  // Assign k[x]=y and propagate: the Mendelsohn condition forces
  // k[y] = y - x, and homomorphy forces k on all sums of known points.
  auto assign = [&](int x0, int y0) -> bool {
    if (k[x0] != -1) return k[x0] == y0;
    if (used[y0] || elt_order[x0] != elt_order[y0] || !in_nuc[l.at(x0, y0)]) return false;
    k[x0] = y0;
    used[y0] = 1;
    trail.push_back(x0);
    for (size_t head = trail.size() - 1; head < trail.size(); ++head) {
      int x = trail[head], y = k[x];
      // k(k(x)) = k(x) - x
      int forced = l.at(y, inv[x]);
      if (k[y] == -1) {
        if (used[forced] || elt_order[y] != elt_order[forced] || !in_nuc[l.at(y, forced)])
          return false;
        k[y] = forced;
        used[forced] = 1;
        trail.push_back(y);
      } else if (k[y] != forced) {
        return false;
      }
      for (size_t i = 0; i < trail.size(); ++i) {
        int z = trail[i];
        int s = l.at(x, z), ks = l.at(k[x], k[z]);
        if (k[s] == -1) {
          if (used[ks] || elt_order[s] != elt_order[ks] || !in_nuc[l.at(s, ks)]) return false;
          k[s] = ks;
          used[ks] = 1;
          trail.push_back(s);
        } else if (k[s] != ks) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<void()> dfs = [&]() {
    int x = -1;
    for (int i = 0; i < n; ++i)
      if (k[i] == -1) {
        x = i;
        break;
      }
    if (x == -1) {
      if (!is_nuclear_automorphism(l, k)) return;
      // x - k(x) bijective
      std::vector<char> seen(n, 0);
      for (int v = 0; v < n; ++v) {
        int d = l.at(v, inv[k[v]]);
        if (seen[d]) return;
        seen[d] = 1;
      }
      // pointwise k - k^2 = I
      for (int v = 0; v < n; ++v)
        if (loop_sub(l, k[v], k[k[v]]) != v) return;
      found.push_back(k);
      return;
    }
    size_t mark = trail.size();
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (++nodes > budget)
        fail(errc::search_budget_exceeded, "automorphism search exceeded node budget");
      if (assign(x, y)) dfs();
      while (trail.size() > mark) {
        int z = trail.back();
        trail.pop_back();
        used[k[z]] = 0;
        k[z] = -1;
      }
    }
  };

  assign(l.identity, l.identity);
  dfs();
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace mendel
