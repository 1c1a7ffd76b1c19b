#include <catch_amalgamated.hpp>

#include <set>

#include "braceforge/brace.hpp"
#include "braceforge/catalog.hpp"
#include "braceforge/series.hpp"

using namespace braceforge;

namespace {

std::vector<std::vector<int>> cyclic(int n)
{
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

std::vector<std::vector<int>> z4_mul()
{
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = (a + b + 2 * a * b) % 4;
  return t;
}

SkewBrace z4()
{
  return SkewBrace::validate(cyclic(4), z4_mul());
}

SkewBrace trivial(int n)
{
  return SkewBrace::validate(cyclic(n), cyclic(n));
}

// Brute-force oracle: smallest ideal containing the seed, found by scanning
// every subset of the carrier for the ideal predicate.
IndexSet smallest_ideal_oracle(const SkewBrace& B, const IndexSet& seed)
{
  int n = B.order();
  IndexSet best = IndexSet::full(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.set(i);
    if (!s.contains(seed)) continue;
    if (!is_ideal(B, s)) continue;
    if (s.size() < best.size()) best = s;
  }
  return best;
}

}  // namespace

TEST_CASE("verify_skew_brace: acceptance and rejection", "[brace]")
{
  REQUIRE_NOTHROW(trivial(2));
  REQUIRE_NOTHROW(z4());

  // x.y = x + y + x*y on Z/4 is not even a group
  std::vector<std::vector<int>> bad(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) bad[a][b] = (a + b + a * b) % 4;
  try {
    SkewBrace::validate(cyclic(4), bad);
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    REQUIRE((e.kind() == Fail::not_a_group_mul ||
             e.kind() == Fail::distributivity));
  }

  // mismatched identities: shift the multiplicative table
  std::vector<std::vector<int>> shifted(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) shifted[a][b] = (a + b + 2) % 4;
  try {
    SkewBrace::validate(cyclic(4), shifted);
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    REQUIRE(e.kind() == Fail::identity_mismatch);
  }

  // two fine groups in a pairing that breaks distributivity; the report
  // carries the lexicographically least witness triple
  auto s3_table = [] {
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    auto idx = [](int i, int j) {
      return ((i % 3) + 3) % 3 + 3 * (((j % 2) + 2) % 2);
    };
    for (int i1 = 0; i1 < 3; ++i1)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int i2 = 0; i2 < 3; ++i2)
          for (int j2 = 0; j2 < 2; ++j2)
            t[idx(i1, j1)][idx(i2, j2)] = idx(i1 + (j1 ? -i2 : i2), j1 + j2);
    return t;
  }();
  try {
    SkewBrace::validate(s3_table, cyclic(6));
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    REQUIRE(e.kind() == Fail::distributivity);
    REQUIRE(e.witness() == std::array<int, 3>{1, 1, 1});
  }
}

TEST_CASE("identity normalization relabels inputs", "[brace]")
{
  // Z/2 written with the identity at index 1
  std::vector<std::vector<int>> t = {{1, 0}, {0, 1}};
  SkewBrace B = SkewBrace::validate(t, t);
  REQUIRE(B.add(0, 0) == 0);
  REQUIRE(B.add(1, 1) == 0);
}

TEST_CASE("lambda and star on the worked braces", "[brace]")
{
  SkewBrace B = z4();
  REQUIRE(B.lambda_perm(0).is_identity());
  REQUIRE(B.lambda_perm(1) == Perm::from_cycles(4, {{1, 3}}));
  REQUIRE(B.star(1, 1) == 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) REQUIRE(B.star(a, b) == (2 * a * b) % 4);

  SkewBrace T = trivial(4);
  for (int a = 0; a < 4; ++a) {
    REQUIRE(T.lambda_perm(a).is_identity());
    for (int b = 0; b < 4; ++b) REQUIRE(T.star(a, b) == 0);
  }
  for (int b = 0; b < 4; ++b) {
    REQUIRE(B.star(0, b) == 0);
    REQUIRE(B.star(b, 0) == 0);
  }
}

TEST_CASE("verify_identities passes on valid braces, catches corruption",
          "[brace]")
{
  for (const Fixture& f : all_fixtures()) {
    if (!std::holds_alternative<SkewBrace>(f.object)) continue;
    REQUIRE(verify_identities(f.brace()).ok);
    REQUIRE(lambda_is_homomorphism(f.brace()));
    REQUIRE(star_commutator_identity(f.brace()));
  }

  SkewBrace B = z4();
  std::vector<int> mul = B.mul_table();
  mul[1 * 4 + 2] = 2;  // corrupt one entry (was 3)
  SkewBrace broken = SkewBrace::unchecked(B.add_table(), mul, 4);
  IdentityCheck chk = verify_identities(broken);
  REQUIRE_FALSE(chk.ok);
}

TEST_CASE("semidirect product group and the star commutator", "[brace]")
{
  SkewBrace T2 = trivial(2);
  FinGroup G = semidirect_group(T2);
  REQUIRE(G.order() == 4);
  REQUIRE(G.is_abelian());  // trivial brace on abelian group: direct product

  SkewBrace B = z4();
  FinGroup H = semidirect_group(B);
  REQUIRE(H.order() == 16);
  // [(0,1),(1,0)] = (1*1, 0) = (2, 0)
  int x = 0 * 4 + 1, y = 1 * 4 + 0;
  int comm = H.op(H.op(H.op(x, y), H.inv(x)), H.inv(y));
  REQUIRE(comm == 2 * 4 + 0);

  FinGroup S = semidirect_group(s3_brace().brace());
  REQUIRE(S.order() == 36);
}

TEST_CASE("fix and centralizer subgroups", "[brace]")
{
  SkewBrace B = z4();
  REQUIRE(fix_r(B, 1) == IndexSet::of(4, {0, 2}));
  REQUIRE(B.add_group().subgroup_index(fix_r(B, 1)) == 2);
  REQUIRE(fix_r(B, 0) == IndexSet::full(4));

  SkewBrace T = trivial(6);
  for (int x = 0; x < 6; ++x) {
    REQUIRE(fix_r(T, x) == IndexSet::full(6));
    REQUIRE(fix_l(T, x) == IndexSet::full(6));
  }
}

TEST_CASE("ann_element on the trivial brace", "[brace]")
{
  // catalog claims already cover the S3/Z2xZ4 values; check the trivial case
  SkewBrace T = trivial(5);
  for (int x = 0; x < 5; ++x) REQUIRE(ann_element(T, x) == IndexSet::full(5));
}

TEST_CASE("conjugates", "[brace]")
{
  SkewBrace T = trivial(6);
  REQUIRE(conjugates(T, 0) == IndexSet::of(6, {0}));
  for (int x = 1; x < 6; ++x)
    REQUIRE(conjugates(T, x) == IndexSet::of(6, {0, x}));

  SkewBrace B = z4();
  REQUIRE(conjugates(B, 1) == IndexSet::of(4, {0, 1, 2}));
}

TEST_CASE("s-indices and the bs bound", "[brace]")
{
  SkewBrace T = trivial(6);
  REQUIRE(bs_bound(T) == 1);

  SkewBrace B = z4();
  SIndices s1 = s_indices(B, 1);
  REQUIRE(s1.add_index == 2);
  REQUIRE(s1.mul_index == 2);
  REQUIRE(bs_bound(B) == 2);
}

TEST_CASE("left ideals and ideals", "[brace]")
{
  SkewBrace B = z4();
  REQUIRE(is_ideal(B, IndexSet::of(4, {0})));
  REQUIRE(is_ideal(B, IndexSet::full(4)));
  REQUIRE(is_ideal(B, IndexSet::of(4, {0, 2})));
  REQUIRE_FALSE(is_left_ideal(B, IndexSet::of(4, {0, 1})));

  // trivial S3 brace: {0,b} is a left ideal but not an ideal
  SkewBrace TS3 = trivial_s3_brace().brace();
  IndexSet ob = IndexSet::of(6, {0, 3});
  REQUIRE(is_left_ideal(TS3, ob));
  REQUIRE_FALSE(is_ideal(TS3, ob));

  // the nontrivial S3 brace: {0,b} is not even a left ideal
  SkewBrace S3B = s3_brace().brace();
  REQUIRE_FALSE(is_left_ideal(S3B, ob));
}

TEST_CASE("ideal_closure against the subset-scan oracle", "[brace]")
{
  SkewBrace S3B = s3_brace().brace();
  for (int x = 0; x < 6; ++x) {
    IndexSet seed = IndexSet::of(6, {x});
    REQUIRE(ideal_closure(S3B, seed) == smallest_ideal_oracle(S3B, seed));
  }
  SkewBrace TS3 = trivial_s3_brace().brace();
  IndexSet got = ideal_closure(TS3, IndexSet::of(6, {3}));
  REQUIRE(got == smallest_ideal_oracle(TS3, IndexSet::of(6, {3})));

  REQUIRE(ideal_closure(TS3, IndexSet(6)) == IndexSet::of(6, {0}));
  REQUIRE(ideal_closure(TS3, IndexSet::full(6)) == IndexSet::full(6));

  // idempotent and monotone
  SkewBrace B = z4();
  IndexSet c1 = ideal_closure(B, IndexSet::of(4, {2}));
  REQUIRE(ideal_closure(B, c1) == c1);
  REQUIRE(ideal_closure(B, IndexSet::of(4, {1})).contains(c1));
}

TEST_CASE("quotient braces", "[brace]")
{
  SkewBrace B = z4();
  Quotient q = quotient(B, IndexSet::of(4, {0, 2}));
  REQUIRE(q.brace.order() == 2);
  REQUIRE(is_trivial_brace(q.brace));
  REQUIRE(q.projection[0] == q.projection[2]);
  REQUIRE(q.projection[1] == q.projection[3]);
  REQUIRE(q.projection[0] != q.projection[1]);

  Quotient whole = quotient(B, IndexSet::full(4));
  REQUIRE(whole.brace.order() == 1);
  Quotient same = quotient(B, IndexSet::of(4, {0}));
  REQUIRE(same.brace == B);

  REQUIRE_THROWS_AS(quotient(B, IndexSet::of(4, {0, 1})), ValidationError);
}

TEST_CASE("sub-brace closure and weights", "[brace]")
{
  SkewBrace B = z4();
  IndexSet gens = IndexSet::of(4, {1});
  REQUIRE(sub_brace_closure(B, gens) == IndexSet::full(4));
  REQUIRE(weight(B, 0, gens) == 0);
  REQUIRE(weight(B, 1, gens) == 1);
  REQUIRE(weight(B, 2, gens) == 2);  // 1+1; note 1*1 is not a b-word
  REQUIRE(weight(B, 3, gens) == 2);  // -1

  SkewBrace TS3 = trivial_s3_brace().brace();
  IndexSet sub = sub_brace_closure(TS3, IndexSet::of(6, {3}));
  REQUIRE(sub == IndexSet::of(6, {0, 3}));
  REQUIRE_THROWS_AS(weight(TS3, 1, IndexSet::of(6, {3})), ValidationError);
  REQUIRE_THROWS_AS(sub_brace_closure(TS3, IndexSet(6)), ValidationError);
}

TEST_CASE("B2, commutators, triviality, two-sidedness", "[brace]")
{
  SkewBrace T = trivial(4);
  REQUIRE(b2(T) == IndexSet::of(4, {0}));
  REQUIRE(is_trivial_brace(T));

  SkewBrace B = z4();
  REQUIRE(b2(B) == IndexSet::of(4, {0, 2}));
  REQUIRE_FALSE(is_trivial_brace(B));
  REQUIRE(is_two_sided(B));
  REQUIRE(add_commutator(B).size() == 1);
  REQUIRE(mul_commutator(B).size() == 1);

  SkewBrace S3B = s3_brace().brace();
  REQUIRE(add_commutator(S3B).size() == 3);
  REQUIRE(mul_commutator(S3B).size() == 3);
}

TEST_CASE("direct products", "[brace]")
{
  SkewBrace B = z4();
  SkewBrace one = trivial(1);
  SkewBrace P = direct_product(B, one);
  REQUIRE(P == B);

  SkewBrace T6 = direct_product(trivial(2), trivial(3));
  REQUIRE(is_trivial_brace(T6));

  // Ann of a product is the product of the Anns, across catalog pairs
  std::vector<SkewBrace> parts = {B, trivial(2), trivial(3),
                                  s3_brace().brace()};
  for (const SkewBrace& B1 : parts)
    for (const SkewBrace& B2 : parts) {
      if (B1.order() * B2.order() > 24) continue;
      SkewBrace P2 = direct_product(B1, B2);
      IndexSet expect(P2.order());
      for (int a : annihilator(B1).members())
        for (int b : annihilator(B2).members()) expect.set(a * B2.order() + b);
      REQUIRE(annihilator(P2) == expect);
    }
}

TEST_CASE("lambda homomorphism property holds exhaustively", "[brace]")
{
  for (const Fixture& f : all_fixtures())
    if (std::holds_alternative<SkewBrace>(f.object))
      REQUIRE(lambda_is_homomorphism(f.brace()));
}
