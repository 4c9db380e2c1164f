#include "mendel/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mendel/field.hpp"
#include "mendel/numbers.hpp"

namespace mendel {

CayleyTable affine_mendelsohn(const AbelianGroup& g, const GroupAutomorphism& k) {
  if (k.group != g) throw std::invalid_argument("affine_mendelsohn: automorphism group mismatch");
  Matrix ik = matsub(g, identity_matrix(g), k.matrix);
  if (!is_bijective_hom(g, ik)) fail(errc::not_automorphism, "I - k is not an automorphism");

  for (long long i = 0; i < g.order; ++i) {
    Elem x = g.element(i);
    Elem kx = k.apply(x);
    Elem kkx = k.apply(kx);
    if (g.add(g.add(kkx, g.neg(kx)), x) != g.identity())
      fail(errc::condition_m_violated, "k^2 - k + I != 0 at element " + std::to_string(i));
  }

  int n = static_cast<int>(g.order);
  std::vector<uint8_t> t(static_cast<size_t>(n) * n);
  std::vector<Elem> ikx(n), kx(n);
  for (int i = 0; i < n; ++i) {
    Elem x = g.element(i);
    ikx[i] = apply_matrix(g, ik, x);
    kx[i] = k.apply(x);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<size_t>(x) * n + y] = static_cast<uint8_t>(g.index_of(g.add(ikx[x], kx[y])));
  return make_cayley(n, std::move(t));
}

namespace {

// Aff over the additive group of a field, k = multiplication by the given
// unit; indexing is the field's own.
CayleyTable affine_over_field(const FieldSpec& f, const FieldElement& k) {
  FieldElement kk = f.mul(k, k);
  if (!(f.add(f.sub(kk, k), f.one()) == f.zero()))
    fail(errc::consistency_failure, "chosen multiplier is not a root of x^2-x+1");
  FieldElement c1 = f.sub(f.one(), k);

  int n = static_cast<int>(f.q);
  if (n > 255) fail(errc::bound_exceeded, "field order exceeds table cap 255");
  std::vector<uint8_t> t(static_cast<size_t>(n) * n);
  std::vector<FieldElement> elts(n);
  for (int i = 0; i < n; ++i) elts[i] = f.from_index(i);
  for (int x = 0; x < n; ++x) {
    FieldElement left = f.mul(c1, elts[x]);
    for (int y = 0; y < n; ++y)
      t[static_cast<size_t>(x) * n + y] =
          static_cast<uint8_t>(f.to_index(f.add(left, f.mul(k, elts[y]))));
  }
  return make_cayley(n, std::move(t));
}

}  // namespace

CayleyTable field_mendelsohn(long long p, int d) {
  long long q = checked_pow(p, d);
  if (q % 6 != 1)
    fail(errc::order_not_one_mod_six, std::to_string(q) + " is not 1 mod 6");
  FieldSpec f = make_field(p, d);
  return affine_over_field(f, f.pow(f.omega, (q - 1) / 6));
}

CayleyTable char2_mendelsohn(int d) {
  if (d < 1) throw std::invalid_argument("char2_mendelsohn: d >= 1 required");
  long long q = checked_pow(2, 2 * d);
  FieldSpec f = make_field(2, 2 * d);
  return affine_over_field(f, f.pow(f.omega, (q - 1) / 3));
}

CayleyTable steiner_affine(int d) {
  if (d < 1) throw std::invalid_argument("steiner_affine: d >= 1 required");
  AbelianGroup g = make_abelian_group(std::vector<int>(d, 3));
  int n = static_cast<int>(g.order);
  if (n > 255) fail(errc::bound_exceeded, "order exceeds table cap 255");
  std::vector<uint8_t> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<size_t>(x) * n + y] = static_cast<uint8_t>(
          g.index_of(g.neg(g.add(g.element(x), g.element(y)))));
  return make_cayley(n, std::move(t));
}

bool spectrum_member(long long v) { return !spectrum_offender(v).has_value(); }

std::optional<std::pair<long long, int>> spectrum_offender(long long v) {
  if (v < 1 || v > kOrderCap) throw std::invalid_argument("spectrum test needs 1 <= v <= 2^16");
  for (auto [q, e] : factorize(v))
    if (q % 3 == 2 && e % 2 == 1) return std::make_pair(q, e);
  return std::nullopt;
}

CayleyTable spectrum_construct(long long v) {
  if (auto off = spectrum_offender(v))
    fail(errc::not_in_spectrum, std::to_string(v) + " has offending prime power " +
                                    std::to_string(off->first) + "^" + std::to_string(off->second));
  if (v == 1) return make_cayley(1, {0});

  std::vector<std::pair<long long, int>> parts = factorize(v);
  std::sort(parts.begin(), parts.end(), [](auto& a, auto& b) {
    long long va = 1, vb = 1;
    for (int i = 0; i < a.second; ++i) va *= a.first;
    for (int i = 0; i < b.second; ++i) vb *= b.first;
    return va < vb;
  });

  std::optional<CayleyTable> acc;
  for (auto [p, e] : parts) {
    CayleyTable factor = p == 3   ? steiner_affine(e)
                         : p == 2 ? char2_mendelsohn(e / 2)
                                  : field_mendelsohn(p, e);
    acc = acc ? direct_product(*acc, factor) : factor;
  }
  return *acc;
}

UnorderedTripleSystem projective_sts(int n) {
  if (n < 2) throw std::invalid_argument("projective_sts: n >= 2 required");
  long long v = checked_pow(2, n) - 1;
  if (v > 255) fail(errc::bound_exceeded, "order exceeds cap 255");
  std::vector<std::array<int, 3>> blocks;
  for (int x = 1; x <= v; ++x)
    for (int y = x + 1; y <= v; ++y) {
      int z = x ^ y;
      if (z > y) blocks.push_back({x - 1, y - 1, z - 1});
    }
  return validate_sts(static_cast<int>(v), std::move(blocks));
}

UnorderedTripleSystem netto_sts(long long p, int d) {
  long long q = checked_pow(p, d);
  if (q % 12 != 7)
    fail(errc::order_not_seven_mod_twelve, std::to_string(q) + " is not 7 mod 12");
  FieldSpec f = make_field(p, d);
  long long s = (q - 7) / 12;
  FieldElement e1 = f.pow(f.omega, 2 * s + 1);
  FieldElement e2 = f.pow(f.omega, 10 * s + 5);
  if (!(f.mul(e1, e2) == f.one()) || !(f.add(e1, e2) == f.one()))
    fail(errc::consistency_failure, "epsilon identities failed");

  // x < y iff y - x is an even power of omega, i.e. a nonzero square.
  auto is_square = [&](const FieldElement& x) { return f.pow(x, (q - 1) / 2) == f.one(); };
  std::vector<FieldElement> elts(q);
  for (long long i = 0; i < q; ++i) elts[i] = f.from_index(i);
  for (long long i = 0; i < q; ++i)
    for (long long j = i + 1; j < q; ++j) {
      bool ij = is_square(f.sub(elts[j], elts[i]));
      bool ji = is_square(f.sub(elts[i], elts[j]));
      if (ij == ji) fail(errc::consistency_failure, "order relation is not total");
    }

  std::set<std::array<int, 3>> blocks;
  for (long long i = 0; i < q; ++i)
    for (long long j = i + 1; j < q; ++j) {
      long long lo = i, hi = j;
      if (!is_square(f.sub(elts[hi], elts[lo]))) std::swap(lo, hi);
      long long third = f.to_index(f.add(f.mul(elts[lo], e1), f.mul(elts[hi], e2)));
      std::array<int, 3> b{static_cast<int>(i), static_cast<int>(j), static_cast<int>(third)};
      std::sort(b.begin(), b.end());
      blocks.insert(b);
    }
  return validate_sts(static_cast<int>(q), {blocks.begin(), blocks.end()});
}

OrientedTripleSystem anti_double(const UnorderedTripleSystem& c,
                                 const std::vector<std::array<int, 3>>* orientation) {
  std::vector<std::array<int, 3>> oriented;
  if (orientation) {
    std::set<std::array<int, 3>> want(c.blocks.begin(), c.blocks.end());
    for (auto& b : *orientation) {
      std::array<int, 3> s = b;
      std::sort(s.begin(), s.end());
      if (!want.erase(s)) fail(errc::invalid_sts, "orientation block not in the system");
      oriented.push_back(b);
    }
    if (!want.empty()) fail(errc::invalid_sts, "orientation misses some blocks");
  } else {
    oriented.assign(c.blocks.begin(), c.blocks.end());  // blocks stored ascending
  }

  int u = c.v;
  std::vector<std::array<int, 3>> out;
  out.reserve(c.blocks.size() * 8 + 2 * u);
  auto pt = [](int base, int j) { return 2 * base + j; };
  for (auto& blk : oriented) {
    int a = blk[0], b = blk[1], cc = blk[2];
    out.push_back({pt(a, 0), pt(b, 0), pt(cc, 0)});
    out.push_back({pt(a, 1), pt(b, 1), pt(cc, 0)});
    out.push_back({pt(a, 1), pt(b, 0), pt(cc, 1)});
    out.push_back({pt(a, 0), pt(b, 1), pt(cc, 1)});
    out.push_back({pt(a, 0), pt(cc, 0), pt(b, 1)});
    out.push_back({pt(a, 0), pt(cc, 1), pt(b, 0)});
    out.push_back({pt(a, 1), pt(cc, 0), pt(b, 0)});
    out.push_back({pt(a, 1), pt(cc, 1), pt(b, 1)});
  }
  int inf = 2 * u;
  for (int x = 0; x < u; ++x) {
    out.push_back({inf, pt(x, 0), pt(x, 1)});
    out.push_back({inf, pt(x, 1), pt(x, 0)});
  }
  return validate_mts(2 * u + 1, std::move(out));
}

}  // namespace mendel
