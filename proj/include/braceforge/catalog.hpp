#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/core.hpp"
#include "braceforge/enumerate.hpp"
#include "braceforge/series.hpp"
#include "braceforge/ybe.hpp"

namespace braceforge {

struct Claim {
  std::string description;
  bool holds;
};

// A named object together with the facts asserted about it, each evaluated
// at construction time. The test suite fails on any drift between the tables
// and the claims.
struct Fixture {
  std::string name;
  std::variant<SkewBrace, Solution> object;
  std::vector<Claim> claims;
  std::vector<int> original_labels;  // for objects quoted with 1-based points

  const SkewBrace& brace() const { return std::get<SkewBrace>(object); }
  const Solution& solution() const { return std::get<Solution>(object); }

  bool all_claims_hold() const
  {
    for (const Claim& c : claims)
      if (!c.holds) return false;
    return true;
  }
};

namespace detail {

// Symmetric group of degree 3 written additively: elements i*a + j*b with
// 3a = 2b = 0 and b + a = -a + b, indexed as i + 3j.
inline std::vector<int> s3_add_table()
{
  std::vector<int> t(36);
  auto idx = [](int i, int j) { return ((i % 3) + 3) % 3 + 3 * (((j % 2) + 2) % 2); };
  for (int i1 = 0; i1 < 3; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          t[idx(i1, j1) * 6 + idx(i2, j2)] =
              idx(i1 + (j1 ? -i2 : i2), j1 + j2);
  return t;
}

}  // namespace detail

// Order-6 skew brace with additive group S3 = <a,b,c | 3a=2b=2c=c+b+a=0> and
// multiplicative group N x| X, N = {0,a,2a}, X = {0,b}, pinned down by
// a.b = c and 2a.b = a+b. Carrier: 0, a=1, 2a=2, b=3, a+b=4, c=2a+b=5.
inline Fixture s3_brace()
{
  std::vector<int> add = detail::s3_add_table();
  std::vector<int> mul(36);
  auto idx = [](int i, int j) { return ((i % 3) + 3) % 3 + 3 * (((j % 2) + 2) % 2); };
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      int n1 = p / 3 ? (3 - p % 3) % 3 : p % 3, x1 = p / 3;
      int n2 = q / 3 ? (3 - q % 3) % 3 : q % 3, x2 = q / 3;
      int m = ((n1 + (x1 ? -n2 : n2)) % 3 + 3) % 3, x = (x1 + x2) % 2;
      mul[p * 6 + q] = idx(x ? (3 - m) % 3 : m, x);
    }
  SkewBrace B = SkewBrace::validate_flat(std::move(add), std::move(mul), 6);

  const int a = 1, b = 3, c = 5;
  IndexSet ann_b = ann_element(B, b);
  Fixture f{"s3_brace", B, {}, {}};
  f.claims = {
      {"a.b = c", B.mul(a, b) == c},
      {"2a.b = a+b", B.mul(2, b) == B.add(a, b)},
      {"not a trivial brace: a+b != a.b", B.add(a, b) != B.mul(a, b)},
      {"(B,o) is nonabelian of order 6", !B.mul_group().is_abelian()},
      {"Ann(b) = {0, b}", ann_b == IndexSet::of(6, {0, b})},
      {"lambda_a(b) = a+b", B.lambda(a, b) == B.add(a, b)},
      {"Ann(b) is not a left ideal", !is_left_ideal(B, ann_b)},
      {"Ann(b) is a subgroup of (B,+)", B.add_group().is_subgroup(ann_b)},
      {"Ann(b) is a subgroup of (B,o)", B.mul_group().is_subgroup(ann_b)},
      {"Ann(b) is not normal in (B,+): -a+b+a = a+b",
       B.add(B.add(B.neg(a), b), a) == B.add(a, b) &&
           !B.add_group().is_normal(ann_b)},
      {"Ann(b) is not normal in (B,o): a^-1.b.a = c",
       B.mul(B.mul(B.inv(a), b), a) == c && !B.mul_group().is_normal(ann_b)},
  };
  return f;
}

// Trivial skew brace on S3: add = mul. Ann(b) = {0,b} is a left ideal here
// but still not an ideal.
inline Fixture trivial_s3_brace()
{
  std::vector<int> t = detail::s3_add_table();
  SkewBrace B = SkewBrace::validate_flat(t, t, 6);
  const int b = 3;
  IndexSet ann_b = ann_element(B, b);
  Fixture f{"trivial_s3_brace", B, {}, {}};
  f.claims = {
      {"Ann(b) = {0, b}", ann_b == IndexSet::of(6, {0, b})},
      {"Ann(b) is a left ideal", is_left_ideal(B, ann_b)},
      {"Ann(b) is not normal in (B,+)", !B.add_group().is_normal(ann_b)},
      {"Ann(b) is not an ideal", !is_ideal(B, ann_b)},
      {"B^(2) = {0}", b2(B).size() == 1},
  };
  return f;
}

// Order-8 brace of abelian type on Z/2 x Z/4; elements (y, w) indexed as
// 4y + w and written w = z + 2x with bits z, x. Ann((0,3)) = {(0,0),(1,1)}
// is a multiplicative but not an additive subgroup.
inline Fixture z2z4_brace()
{
  std::vector<int> add(64), mul(64);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int y1 = i / 4, w1 = i % 4, y2 = j / 4, w2 = j % 4;
      add[i * 8 + j] = ((y1 + y2) % 2) * 4 + (w1 + w2) % 4;
      int z1 = w1 % 2, x1 = w1 / 2, z2 = w2 % 2, x2 = w2 / 2;
      int fy = (y1 + y2 + (x1 + z1 + y1 * z1) * z2) % 2;
      int fw = (z1 + 2 * x1 + 2 * z1 * y2 +
                2 * (y1 + x1 + z1 + x1 * z1) * z2 + z2 + 2 * x2) %
               4;
      mul[i * 8 + j] = fy * 4 + fw;
    }
  SkewBrace B = SkewBrace::validate_flat(std::move(add), std::move(mul), 8);
  const int x03 = 3, x11 = 5, x02 = 2;
  IndexSet ann = ann_element(B, x03);
  Fixture f{"z2z4_brace", B, {}, {}};
  f.claims = {
      {"(B,+) is abelian of type Z/2 x Z/4", B.add_group().is_abelian()},
      {"Ann((0,3)) = {(0,0), (1,1)}", ann == IndexSet::of(8, {0, x11})},
      {"(1,1)+(1,1) = (0,2)", B.add(x11, x11) == x02},
      {"Ann((0,3)) is not a subgroup of (B,+)",
       !B.add_group().is_subgroup(ann)},
      {"Ann((0,3)) is a subgroup of (B,o)", B.mul_group().is_subgroup(ann)},
  };
  return f;
}

// Order-4 brace on Z/4 with x1 o x2 = x1 + x2 + 2*x1*x2.
inline Fixture z4_brace()
{
  std::vector<int> add(16), mul(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      add[i * 4 + j] = (i + j) % 4;
      mul[i * 4 + j] = (i + j + 2 * i * j) % 4;
    }
  SkewBrace B = SkewBrace::validate_flat(std::move(add), std::move(mul), 4);
  auto [nil, len] = is_annihilator_nilpotent(B);
  Fixture f{"z4_brace", B, {}, {}};
  f.claims = {
      {"Ann(B) = {0, 2}", annihilator(B) == IndexSet::of(4, {0, 2})},
      {"B^(2) = {0, 2}", b2(B) == IndexSet::of(4, {0, 2})},
      {"annihilator nilpotent of length 2", nil && len == 2},
      {"bs bound = 2", bs_bound(B) == 2},
  };
  return f;
}

// Semidirect product of the trivial braces of orders 3 and 2 under the
// unique nontrivial action: Soc_2(B) = B while Ann(B) = 0, so the
// hyper-annihilator is strictly below the hyper-socle.
inline Fixture order6_semidirect_brace()
{
  std::vector<int> add(36), mul(36);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      int a1 = p % 3, c1 = p / 3, a2 = q % 3, c2 = q / 3;
      add[p * 6 + q] = (a1 + a2) % 3 + 3 * ((c1 + c2) % 2);
      mul[p * 6 + q] =
          ((a1 + (c1 ? -a2 : a2)) % 3 + 3) % 3 + 3 * ((c1 + c2) % 2);
    }
  SkewBrace B = SkewBrace::validate_flat(std::move(add), std::move(mul), 6);
  SeriesReport soc = socle_series(B);
  IndexSet hyper_ann = hyper_annihilator(B);
  IndexSet hyper_soc = hyper_socle(B);
  Fixture f{"order6_semidirect_brace", B, {}, {}};
  f.claims = {
      {"Soc_2(B) = B", soc.length == 2 && soc.chain.back().size() == 6},
      {"Ann(B) = {0}", annihilator(B).size() == 1},
      {"hyper-annihilator = {0}", hyper_ann.size() == 1},
      {"hyper-annihilator strictly below hyper-socle",
       hyper_soc.contains(hyper_ann) && hyper_ann != hyper_soc},
  };
  return f;
}

// Four-element indecomposable solution whose derived solution decomposes
// with orbits {1,2} and {3,4} (original 1-based labels).
inline Fixture sol4_indecomposable()
{
  Perm s12 = Perm::from_cycles(4, {{0, 3, 1, 2}});  // (1 4 2 3)
  Perm s34 = Perm::from_cycles(4, {{0, 2, 1, 3}});  // (1 3 2 4)
  Perm t = Perm::from_cycles(4, {{0, 2}, {1, 3}});  // (1 3)(2 4)
  Solution S = Solution::validate({s12, s12, s34, s34}, {t, t, t, t});
  Solution D = derived_solution(S);
  auto dec = decompose(D);
  bool orbit_claim = dec.has_value() && dec->orbits.size() == 2 &&
                     dec->orbits[0] == std::vector<int>{0, 1} &&
                     dec->orbits[1] == std::vector<int>{2, 3};
  Perm eta12 = Perm::from_cycles(4, {{2, 3}});  // (3 4)
  Perm eta34 = Perm::from_cycles(4, {{0, 1}});  // (1 2)
  bool eta_claim = D.tau(0) == eta12 && D.tau(1) == eta12 &&
                   D.tau(2) == eta34 && D.tau(3) == eta34;
  Fixture f{"sol4_indecomposable", S, {}, {1, 2, 3, 4}};
  f.claims = {
      {"is a valid non-degenerate solution", true},
      {"indecomposable", is_indecomposable(S)},
      {"not involutive", !is_involutive(S)},
      {"derived solution is decomposable", !is_indecomposable(D)},
      {"derived orbits are {1,2} and {3,4}", orbit_claim},
      {"eta is (3 4) on {1,2} and (1 2) on {3,4}", eta_claim},
      {"not derived-indecomposable", !is_derived_indecomposable(S)},
  };
  return f;
}

// Permutation solution r(x,y) = (f(y), g(x)) with f = (1 2), g = (3 4):
// non-degenerate, with an intransitive permutation group.
inline Fixture permsol_fg()
{
  Perm fp = Perm::from_cycles(4, {{0, 1}});
  Perm gp = Perm::from_cycles(4, {{2, 3}});
  Solution S = Solution::validate({fp, fp, fp, fp}, {gp, gp, gp, gp});
  Fixture f{"permsol_fg", S, {}, {1, 2, 3, 4}};
  f.claims = {
      {"is a valid non-degenerate solution", true},
      {"permutation group is intransitive", !is_indecomposable(S)},
      {"not involutive", !is_involutive(S)},
  };
  return f;
}

inline std::vector<Fixture> all_fixtures()
{
  return {s3_brace(),        trivial_s3_brace(), z2z4_brace(),
          z4_brace(),        order6_semidirect_brace(),
          sol4_indecomposable(), permsol_fg()};
}

}  // namespace braceforge
