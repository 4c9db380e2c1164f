#include "mendel/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "mendel/numbers.hpp"

namespace mendel {

namespace {

std::string encode(const Matrix& a) {
  std::string key;
  key.reserve(a.size() * a.size() * 2);
  for (auto& row : a)
    for (int v : row) {
      key.push_back(static_cast<char>(v & 0xff));
      key.push_back(static_cast<char>((v >> 8) & 0xff));
    }
  return key;
}

long long smallest_primitive_root(long long p) {
  auto divisors = factorize(p - 1);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [r, e] : divisors) {
      long long x = 1, b = g, k = (p - 1) / r;
      while (k) {
        if (k & 1) x = x * b % p;
        b = b * b % p;
        k >>= 1;
      }
      if (x == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(errc::consistency_failure, "no primitive root mod " + std::to_string(p));
}

Matrix inverse_mod_p(const AbelianGroup& g, Matrix a) {
  const int m = g.rank();
  const long long p = g.factors[0];
  Matrix inv = identity_matrix(g);
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r)
      if (a[r][col] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail(errc::consistency_failure, "singular matrix in inverse_mod_p");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    long long lead = a[col][col], li = 1;
    for (long long t = 1; t < p; ++t)
      if (lead * t % p == 1) {
        li = t;
        break;
      }
    for (int c = 0; c < m; ++c) {
      a[col][c] = static_cast<int>(a[col][c] * li % p);
      inv[col][c] = static_cast<int>(inv[col][c] * li % p);
    }
    for (int r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      long long f = a[r][col];
      for (int c = 0; c < m; ++c) {
        a[r][c] = static_cast<int>(((a[r][c] - f * a[col][c]) % p + p) % p);
        inv[r][c] = static_cast<int>(((inv[r][c] - f * inv[col][c]) % p + p) % p);
      }
    }
  }
  return inv;
}

// Generators of GL(m,p): a diagonal scaling, an m-cycle and a transvection.
std::vector<std::pair<Matrix, Matrix>> gl_generators(const AbelianGroup& g) {
  const int m = g.rank();
  const long long p = g.factors[0];
  std::vector<Matrix> gens;
  if (p > 2) {
    Matrix d = identity_matrix(g);
    d[0][0] = static_cast<int>(smallest_primitive_root(p));
    gens.push_back(d);
  }
  if (m >= 2) {
    Matrix cyc(m, std::vector<int>(m, 0));
    for (int j = 0; j < m; ++j) cyc[(j + 1) % m][j] = 1;
    gens.push_back(cyc);
    Matrix t = identity_matrix(g);
    t[0][1] = 1;
    gens.push_back(t);
  }
  std::vector<std::pair<Matrix, Matrix>> out;
  for (auto& x : gens) out.emplace_back(x, inverse_mod_p(g, x));
  return out;
}

bool f_holds(const AbelianGroup& g, const Matrix& a) {
  Matrix fa = matmul(g, a, a);
  fa = matsub(g, fa, a);
  Matrix id = identity_matrix(g);
  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < g.rank(); ++j)
      if ((fa[i][j] + id[i][j]) % g.factors[i] != 0) return false;
  return true;
}

// Conjugation orbit of `start` under Aut = GL(m,p), explored breadth first.
void orbit_bfs(const AbelianGroup& g, const Matrix& start,
               const std::vector<std::pair<Matrix, Matrix>>& gens,
               std::unordered_set<std::string>& visited, std::vector<Matrix>& out,
               long long budget) {
  std::vector<Matrix> queue{start};
  if (!visited.insert(encode(start)).second) return;
  out.push_back(start);
  for (size_t head = 0; head < queue.size(); ++head) {
    Matrix x = queue[head];
    for (auto& [gen, gi] : gens) {
      Matrix y = matmul(g, matmul(g, gen, x), gi);
      if (visited.insert(encode(y)).second) {
        if (static_cast<long long>(visited.size()) > budget)
          fail(errc::search_budget_exceeded, "conjugation orbit exceeded budget");
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
}

// Solutions over (Z_p)^m generated from the canonical forms of x^2-x+1:
// split roots give diagonal multiplicity types, the p = 3 double root gives
// 2I + nilpotent Jordan types, and the irreducible case gives one companion
// type in even rank only.
std::vector<Matrix> structured_elementary(const AbelianGroup& g, long long budget) {
  const int m = g.rank();
  const long long p = g.factors[0];
  auto roots = roots_of_f(p, 1);

  std::vector<Matrix> reps;
  if (roots.size() == 2) {
    for (int r = 0; r <= m; ++r) {
      Matrix a(m, std::vector<int>(m, 0));
      for (int i = 0; i < m; ++i) a[i][i] = static_cast<int>(i < r ? roots[0] : roots[1]);
      reps.push_back(a);
    }
  } else if (roots.size() == 1) {
    for (int j = 0; j <= m / 2; ++j) {
      Matrix a(m, std::vector<int>(m, 0));
      for (int i = 0; i < m; ++i) a[i][i] = static_cast<int>(roots[0]);
      for (int t = 0; t < j; ++t) a[2 * t][2 * t + 1] = 1;
      reps.push_back(a);
    }
  } else {
    if (m % 2 == 1) return {};
    Matrix a(m, std::vector<int>(m, 0));
    for (int t = 0; t < m / 2; ++t) {
      a[2 * t][2 * t + 1] = static_cast<int>(p - 1);
      a[2 * t + 1][2 * t] = 1;
      a[2 * t + 1][2 * t + 1] = 1;
    }
    reps.push_back(a);
  }

  auto gens = gl_generators(g);
  std::unordered_set<std::string> visited;
  std::vector<Matrix> out;
  for (auto& rep : reps) {
    if (!f_holds(g, rep)) fail(errc::consistency_failure, "canonical form fails f(A)=0");
    orbit_bfs(g, rep, gens, visited, out, budget);
  }
  for (auto& a : out)
    if (!f_holds(g, a)) fail(errc::consistency_failure, "orbit member fails f(A)=0");
  return out;
}

// Column-by-column scan over all valid generator images. The mod-p reduction
// of any solution is block triangular over the strata of equal factor sizes,
// so for p = 2 (mod 3) a stratum of odd multiplicity rules out solutions.
std::vector<Matrix> brute_primary(const AbelianGroup& g, long long budget) {
  const int m = g.rank();
  const long long p = factorize(g.factors[0])[0].first;

  if (p % 3 == 2) {
    std::map<int, int> strata;
    for (int d : g.factors) ++strata[d];
    for (auto [d, count] : strata)
      if (count % 2 == 1) return {};
  }

  long long total = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      total *= std::gcd(g.factors[i], g.factors[j]);
      if (total > budget)
        fail(errc::bound_exceeded, "homomorphism count exceeds scan budget");
    }

  // candidate entries per (row, column): multiples of d_i / gcd(d_i, d_j)
  std::vector<std::vector<int>> step(m, std::vector<int>(m)), count(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int gc = std::gcd(g.factors[i], g.factors[j]);
      step[i][j] = g.factors[i] / gc;
      count[i][j] = gc;
    }

  std::vector<std::vector<int>> cols(m, std::vector<int>(m, 0));
  std::vector<Matrix> out;

  // f on column j': A(c) = c - e_j' where c = column j', checkable once all
  // columns in the support of c are fixed.
  auto column_ok = [&](int jp, int depth) {
    const auto& c = cols[jp];
    for (int i = depth + 1; i < m; ++i)
      if (c[i] != 0) return true;  // not ready yet
    for (int i = 0; i < m; ++i) {
      long long s = 0;
      for (int k = 0; k <= depth; ++k) s += static_cast<long long>(c[k]) * cols[k][i];
      s -= c[i];
      if (i == jp) s += 1;
      if (((s % g.factors[i]) + g.factors[i]) % g.factors[i] != 0) return false;
    }
    return true;
  };

  std::function<void(int)> rec = [&](int j) {
    if (j == m) {
      Matrix a(m, std::vector<int>(m));
      for (int i = 0; i < m; ++i)
        for (int jj = 0; jj < m; ++jj) a[i][jj] = cols[jj][i];
      if (f_holds(g, a)) out.push_back(std::move(a));
      return;
    }
    std::vector<int> idx(m, 0);
    for (;;) {
      for (int i = 0; i < m; ++i) cols[j][i] = idx[i] * step[i][j];
      bool ok = true;
      for (int jp = 0; jp <= j && ok; ++jp) ok = column_ok(jp, j);
      if (ok) rec(j + 1);
      int c = 0;
      while (c < m && ++idx[c] == count[c][j]) idx[c++] = 0;
      if (c == m) break;
    }
  };
  rec(0);
  return out;
}

std::vector<Matrix> solve_primary(const AbelianGroup& g, const SolveOptions& opt) {
  bool elementary = true;
  for (int d : g.factors) elementary = elementary && d == g.factors[0];
  if (elementary && is_prime(g.factors[0]) && !opt.brute_force)
    return structured_elementary(g, opt.budget);
  return brute_primary(g, opt.budget);
}

AbelianGroup subgroup_at(const AbelianGroup& g, const std::vector<int>& positions) {
  std::vector<int> factors;
  for (int p : positions) factors.push_back(g.factors[p]);
  return make_abelian_group(factors);
}

}  // namespace

std::vector<GroupAutomorphism> solutions_of_f(const AbelianGroup& g, const SolveOptions& opt) {
  if (g.rank() == 0)
    return {GroupAutomorphism{g, Matrix{}}};

  // primary decomposition by prime
  std::map<long long, std::vector<int>> primes;
  for (int i = 0; i < g.rank(); ++i) primes[factorize(g.factors[i])[0].first].push_back(i);

  std::vector<std::vector<int>> positions;
  std::vector<std::vector<Matrix>> primary;
  for (auto& [p, pos] : primes) {
    positions.push_back(pos);
    primary.push_back(solve_primary(subgroup_at(g, pos), opt));
    if (primary.back().empty()) return {};
  }

  std::vector<Matrix> combined{Matrix(g.rank(), std::vector<int>(g.rank(), 0))};
  for (size_t part = 0; part < primary.size(); ++part) {
    std::vector<Matrix> next;
    next.reserve(combined.size() * primary[part].size());
    for (const auto& base : combined)
      for (const auto& block : primary[part]) {
        Matrix a = base;
        for (size_t i = 0; i < positions[part].size(); ++i)
          for (size_t j = 0; j < positions[part].size(); ++j)
            a[positions[part][i]][positions[part][j]] = block[i][j];
        next.push_back(std::move(a));
      }
    combined = std::move(next);
  }

  std::sort(combined.begin(), combined.end());
  std::vector<GroupAutomorphism> out;
  out.reserve(combined.size());
  for (auto& a : combined) {
    if (!is_valid_hom(g, a)) fail(errc::consistency_failure, "solution violates divisibility");
    out.push_back(GroupAutomorphism{g, std::move(a)});
  }
  return out;
}

namespace {

bool elementary_single_prime(const AbelianGroup& g) {
  if (g.rank() == 0) return false;
  for (int d : g.factors)
    if (d != g.factors[0]) return false;
  return is_prime(g.factors[0]);
}

// Backtracking search for psi in Aut(G) with psi a = b psi, column by column
// with order-preservation and partial commutation pruning.
bool conjugator_search(const AbelianGroup& g, const Matrix& a, const Matrix& b, long long budget) {
  const int m = g.rank();
  std::vector<long long> gen_order(m);
  for (int j = 0; j < m; ++j) gen_order[j] = g.factors[j];

  // candidate columns per j: valid images of e_j with the right order
  std::vector<std::vector<Elem>> candidates(m);
  for (int j = 0; j < m; ++j) {
    std::vector<int> step(m), count(m);
    for (int i = 0; i < m; ++i) {
      int gc = std::gcd(g.factors[i], g.factors[j]);
      step[i] = g.factors[i] / gc;
      count[i] = gc;
    }
    std::vector<int> idx(m, 0);
    for (;;) {
      Elem y(m);
      for (int i = 0; i < m; ++i) y[i] = idx[i] * step[i];
      if (g.element_order(y) == gen_order[j]) candidates[j].push_back(y);
      int c = 0;
      while (c < m && ++idx[c] == count[c]) idx[c++] = 0;
      if (c == m) break;
    }
  }

  std::vector<Elem> psi(m);
  long long nodes = 0;

  // psi(a e_j) = b(psi e_j) once every column in the support of a e_j is set.
  auto commute_ok = [&](int jp, int depth) {
    for (int i = depth + 1; i < m; ++i)
      if (a[i][jp] != 0) return true;
    Elem lhs(m, 0);
    for (int k = 0; k <= depth; ++k) {
      Elem t = g.smul(a[k][jp], psi[k]);
      lhs = g.add(lhs, t);
    }
    Elem rhs = apply_matrix(g, b, psi[jp]);
    return lhs == rhs;
  };

  std::function<bool(int)> rec = [&](int j) -> bool {
    if (j == m) {
      Matrix pm(m, std::vector<int>(m));
      for (int i = 0; i < m; ++i)
        for (int jj = 0; jj < m; ++jj) pm[i][jj] = psi[jj][i];
      if (!is_valid_hom(g, pm) || !is_bijective_hom(g, pm)) return false;
      Matrix lhs = matmul(g, pm, a), rhs = matmul(g, b, pm);
      return lhs == rhs;
    }
    for (const Elem& y : candidates[j]) {
      if (++nodes > budget)
        fail(errc::search_budget_exceeded, "conjugator search exceeded node budget");
      psi[j] = y;
      bool ok = true;
      for (int jp = 0; jp <= j && ok; ++jp) ok = commute_ok(jp, j);
      if (ok && rec(j + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool conjugate_in_aut(const AbelianGroup& g, const Matrix& a_in, const Matrix& b_in,
                      long long budget) {
  if (g.rank() == 0) return true;
  Matrix a = reduce_matrix(g, a_in), b = reduce_matrix(g, b_in);
  if (a == b) return true;

  if (elementary_single_prime(g)) {
    auto gens = gl_generators(g);
    std::unordered_set<std::string> visited;
    std::vector<Matrix> orbit;
    orbit_bfs(g, a, gens, visited, orbit, budget);
    return visited.count(encode(b)) > 0;
  }
  return conjugator_search(g, a, b, budget);
}

std::vector<std::vector<GroupAutomorphism>> conjugacy_classes(
    const AbelianGroup& g, const std::vector<GroupAutomorphism>& ks, long long budget) {
  std::vector<std::vector<GroupAutomorphism>> classes;
  if (ks.empty()) return classes;

  if (elementary_single_prime(g)) {
    auto gens = gl_generators(g);
    std::map<std::string, size_t> where;
    for (size_t i = 0; i < ks.size(); ++i) where[encode(ks[i].matrix)] = i;
    std::vector<char> placed(ks.size(), 0);
    for (size_t i = 0; i < ks.size(); ++i) {
      if (placed[i]) continue;
      std::unordered_set<std::string> visited;
      std::vector<Matrix> orbit;
      orbit_bfs(g, ks[i].matrix, gens, visited, orbit, budget);
      std::vector<GroupAutomorphism> cls;
      for (auto& mat : orbit) {
        auto it = where.find(encode(mat));
        if (it != where.end() && !placed[it->second]) {
          placed[it->second] = 1;
          cls.push_back(ks[it->second]);
        }
      }
      classes.push_back(std::move(cls));
    }
  } else {
    for (const auto& k : ks) {
      bool found = false;
      for (auto& cls : classes)
        if (conjugate_in_aut(g, cls.front().matrix, k.matrix, budget)) {
          cls.push_back(k);
          found = true;
          break;
        }
      if (!found) classes.push_back({k});
    }
  }

  for (auto& cls : classes)
    std::sort(cls.begin(), cls.end(),
              [](const GroupAutomorphism& x, const GroupAutomorphism& y) {
                return x.matrix < y.matrix;
              });
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front().matrix < y.front().matrix; });
  return classes;
}

bool kepka_nemec_iso(const AbelianGroup& g1, const GroupAutomorphism& k1, const AbelianGroup& g2,
                     const GroupAutomorphism& k2, long long budget) {
  std::vector<int> f1 = g1.factors, f2 = g2.factors;
  std::sort(f1.begin(), f1.end());
  std::sort(f2.begin(), f2.end());
  if (f1 != f2) return false;

  auto sorted_perm = [](const std::vector<int>& factors) {
    std::vector<int> idx(factors.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int u, int v) { return factors[u] > factors[v]; });
    return idx;
  };
  auto permute = [](const Matrix& a, const std::vector<int>& idx) {
    int m = static_cast<int>(idx.size());
    Matrix b(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) b[i][j] = a[idx[i]][idx[j]];
    return b;
  };

  auto idx1 = sorted_perm(g1.factors), idx2 = sorted_perm(g2.factors);
  std::vector<int> sorted_factors;
  for (int i : idx1) sorted_factors.push_back(g1.factors[i]);
  AbelianGroup gs = make_abelian_group(sorted_factors);
  return conjugate_in_aut(gs, permute(k1.matrix, idx1), permute(k2.matrix, idx2), budget);
}

bool is_self_converse(const AbelianGroup& g, const GroupAutomorphism& k, long long budget) {
  Matrix ik = matsub(g, identity_matrix(g), k.matrix);
  return conjugate_in_aut(g, k.matrix, ik, budget);
}

namespace {

std::vector<std::vector<int>> partitions_of(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(e, e);
  return out;
}

}  // namespace

std::vector<std::vector<int>> abelian_groups_of_order(long long v) {
  if (v == 1) return {{}};
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, e] : factorize(v)) {
    std::vector<std::vector<int>> lists;
    for (auto& part : partitions_of(e)) {
      std::vector<int> factors;
      for (int lam : part) factors.push_back(static_cast<int>(checked_pow(p, lam)));
      lists.push_back(factors);
    }
    per_prime.push_back(lists);
  }
  std::vector<std::vector<int>> out{{}};
  for (auto& lists : per_prime) {
    std::vector<std::vector<int>> next;
    for (auto& base : out)
      for (auto& add : lists) {
        std::vector<int> f = base;
        f.insert(f.end(), add.begin(), add.end());
        next.push_back(f);
      }
    out = std::move(next);
  }
  for (auto& f : out) std::sort(f.begin(), f.end(), std::greater<int>());
  std::sort(out.begin(), out.end(), std::greater<std::vector<int>>());
  return out;
}

EnumerationReport count_affine(long long v, const SolveOptions& opt) {
  if (v < 1) throw std::invalid_argument("count_affine: v >= 1 required");
  EnumerationReport report;
  report.v = v;
  if (v == 1) {
    AbelianGroup trivial;  // empty factor list
    report.per_group.push_back({trivial, solutions_of_f(trivial, opt)});
    report.a = 1;
    return report;
  }

  struct PrimaryChoice {
    std::vector<int> factors;
    std::vector<GroupAutomorphism> reps;
  };
  std::vector<std::vector<PrimaryChoice>> per_prime;

  for (auto [p, e] : factorize(v)) {
    if (checked_pow(p, e, kOrderCap) > opt.max_prime_power)
      fail(errc::bound_exceeded, "prime-power part " + std::to_string(p) + "^" +
                                     std::to_string(e) + " exceeds the enumeration cap");
    std::vector<PrimaryChoice> choices;
    for (auto& part : partitions_of(e)) {
      std::vector<int> factors;
      for (int lam : part) factors.push_back(static_cast<int>(checked_pow(p, lam)));
      AbelianGroup g = make_abelian_group(factors);
      auto sols = solutions_of_f(g, opt);
      auto classes = conjugacy_classes(g, sols, opt.budget);
      PrimaryChoice c;
      c.factors = factors;
      for (auto& cls : classes) c.reps.push_back(cls.front());
      choices.push_back(std::move(c));
    }
    per_prime.push_back(std::move(choices));
  }

  report.a = 1;
  for (auto& choices : per_prime) {
    long long total = 0;
    for (auto& c : choices) total += static_cast<long long>(c.reps.size());
    report.a *= total;
  }

  // assemble every abelian group of order v with block-diagonal class reps
  std::vector<std::vector<size_t>> picks{{}};
  for (auto& choices : per_prime) {
    std::vector<std::vector<size_t>> next;
    for (auto& base : picks)
      for (size_t i = 0; i < choices.size(); ++i) {
        auto ext = base;
        ext.push_back(i);
        next.push_back(ext);
      }
    picks = std::move(next);
  }

  for (auto& pick : picks) {
    std::vector<int> factors;
    for (size_t t = 0; t < pick.size(); ++t) {
      auto& f = per_prime[t][pick[t]].factors;
      factors.insert(factors.end(), f.begin(), f.end());
    }
    std::vector<int> idx(factors.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return factors[a] > factors[b]; });
    std::vector<int> sorted_factors;
    for (int i : idx) sorted_factors.push_back(factors[i]);
    AbelianGroup group = make_abelian_group(sorted_factors);

    // cartesian product of per-prime class representatives
    std::vector<Matrix> combos{Matrix(factors.size(), std::vector<int>(factors.size(), 0))};
    size_t offset = 0;
    for (size_t t = 0; t < pick.size(); ++t) {
      auto& reps = per_prime[t][pick[t]].reps;
      size_t m = per_prime[t][pick[t]].factors.size();
      std::vector<Matrix> next;
      for (auto& base : combos)
        for (auto& rep : reps) {
          Matrix a = base;
          for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) a[offset + i][offset + j] = rep.matrix[i][j];
          next.push_back(a);
        }
      combos = std::move(next);
      offset += m;
    }

    GroupClasses gc;
    gc.group = group;
    for (auto& a : combos) {
      Matrix b(factors.size(), std::vector<int>(factors.size()));
      for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = 0; j < factors.size(); ++j) b[i][j] = a[idx[i]][idx[j]];
      gc.representatives.push_back(check_automorphism(group, b));
    }
    std::sort(gc.representatives.begin(), gc.representatives.end(),
              [](const GroupAutomorphism& x, const GroupAutomorphism& y) {
                return x.matrix < y.matrix;
              });
    report.per_group.push_back(std::move(gc));
  }

  std::sort(report.per_group.begin(), report.per_group.end(), [](const auto& x, const auto& y) {
    return x.group.factors > y.group.factors;
  });

  long long check = 0;
  for (auto& gc : report.per_group) check += static_cast<long long>(gc.representatives.size());
  if (check != report.a)
    fail(errc::consistency_failure, "per-group class sum disagrees with multiplicative count");
  return report;
}

std::string report_to_text(const EnumerationReport& report) {
  std::string out;
  for (auto& gc : report.per_group) {
    out += "GROUP ";
    if (gc.group.factors.empty()) {
      out += "1";
    } else {
      for (size_t i = 0; i < gc.group.factors.size(); ++i) {
        if (i) out += "x";
        out += std::to_string(gc.group.factors[i]);
      }
    }
    out += " classes=" + std::to_string(gc.representatives.size()) + "\n";
  }
  out += "a(" + std::to_string(report.v) + ")=" + std::to_string(report.a) + "\n";
  if (report.b) out += "b(" + std::to_string(report.v) + ")=" + std::to_string(*report.b) + "\n";
  if (report.d) out += "d(" + std::to_string(report.v) + ")=" + std::to_string(*report.d) + "\n";
  return out;
}

LoopEnumeration distributive_from_loops(const std::vector<LoopTable>& loops, long long budget) {
  LoopEnumeration out;
  for (const auto& loop : loops) {
    if (!is_commutative_moufang(loop))
      fail(errc::not_cml, "imported loop is not a commutative Moufang loop");
    for (const auto& k : find_mendelsohn_automorphisms(loop, budget)) {
      CayleyTable q = affine_over_loop(loop, k);
      PropertyReport pr = predicate_suite(q);
      if (!pr.idempotent || !pr.semisymmetric || !pr.distributive)
        fail(errc::consistency_failure, "loop-affine table is not distributive Mendelsohn");
      if (pr.medial) continue;  // affine over an abelian group, not a b-type example
      bool dup = false;
      for (const auto& rep : out.representatives)
        if (is_isomorphic(rep, q, budget)) {
          dup = true;
          break;
        }
      if (!dup) {
        out.representatives.push_back(std::move(q));
        ++out.b;
      }
    }
  }
  return out;
}

}  // namespace mendel
