#include <catch_amalgamated.hpp>

#include <set>

#include "braceforge/catalog.hpp"
#include "braceforge/enumerate.hpp"
#include "oracles.hpp"

using namespace braceforge;

namespace {

std::vector<std::vector<int>> cyclic(int n)
{
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

SkewBrace z4()
{
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a][b] = (a + b + 2 * a * b) % 4;
  return SkewBrace::validate(cyclic(4), mul);
}

}  // namespace

TEST_CASE("group catalog is sound", "[enumerate]")
{
  int total = 0;
  for (int n = 1; n <= 8; ++n) {
    auto groups = groups_of_order(n);
    total += static_cast<int>(groups.size());
    // tables validate inside groups_of_order; check pairwise non-isomorphism
    for (size_t i = 0; i < groups.size(); ++i)
      for (size_t j = i + 1; j < groups.size(); ++j)
        REQUIRE_FALSE(oracles::brace_isomorphic(
            groups[i].table, groups[i].table, groups[j].table,
            groups[j].table, n));
  }
  REQUIRE(total == 14);  // 13 nontrivial groups of order <= 8 plus the point
}

TEST_CASE("canonical form: relabeling invariance and separation",
          "[enumerate]")
{
  SkewBrace B = z4();
  // relabel by x -> 3x, an automorphism-free carrier bijection fixing 0
  std::vector<int> pi = {0, 3, 2, 1};
  std::vector<std::vector<int>> add(4, std::vector<int>(4)),
      mul(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      add[pi[a]][pi[b]] = pi[B.add(a, b)];
      mul[pi[a]][pi[b]] = pi[B.mul(a, b)];
    }
  SkewBrace R = SkewBrace::validate(add, mul);
  REQUIRE(canonical_form(B) == canonical_form(R));

  SkewBrace T = SkewBrace::validate(cyclic(4), cyclic(4));
  REQUIRE_FALSE(canonical_form(T) == canonical_form(B));

  SkewBrace one = SkewBrace::validate(cyclic(1), cyclic(1));
  CanonicalForm cf = canonical_form(one);
  REQUIRE(cf.order == 1);
}

TEST_CASE("brace enumeration matches the naive oracle", "[enumerate]")
{
  REQUIRE(enumerate_braces(1).size() == 1);

  for (int n : {2, 3, 4, 5}) {
    auto fast = enumerate_braces(n);
    auto slow = oracles::naive_brace_classes(n);
    REQUIRE(fast.size() == slow.size());
    // same classes, matched through canonical forms
    std::set<std::string> fast_keys, slow_keys;
    for (const CanonicalForm& cf : fast) fast_keys.insert(cf.key());
    for (const auto& lb : slow)
      slow_keys.insert(
          detail::canonical_form_tables(lb.add, lb.mul, n).key());
    REQUIRE(fast_keys == slow_keys);
  }

  REQUIRE(enumerate_braces(4).size() == 4);
  REQUIRE(enumerate_braces(5).size() == 1);
}

TEST_CASE("every enumerated brace validates and is distinct", "[enumerate]")
{
  for (int n : {4, 6}) {
    auto forms = enumerate_braces(n);
    std::set<std::string> keys;
    for (const CanonicalForm& cf : forms) {
      REQUIRE_NOTHROW(cf.to_brace());
      keys.insert(cf.key());
    }
    REQUIRE(keys.size() == forms.size());
  }
}

TEST_CASE("catalog braces appear among the enumerated classes", "[enumerate]")
{
  auto has = [](const std::vector<CanonicalForm>& forms,
                const SkewBrace& B) {
    CanonicalForm cf = canonical_form(B);
    for (const CanonicalForm& f : forms)
      if (f == cf) return true;
    return false;
  };
  auto forms6 = enumerate_braces(6);
  REQUIRE(has(forms6, s3_brace().brace()));
  REQUIRE(has(forms6, trivial_s3_brace().brace()));
  REQUIRE(has(forms6, order6_semidirect_brace().brace()));
  auto forms4 = enumerate_braces(4);
  REQUIRE(has(forms4, z4_brace().brace()));
  auto forms8 = enumerate_braces(8);
  REQUIRE(has(forms8, z2z4_brace().brace()));
}

TEST_CASE("enumeration is deterministic across job counts", "[enumerate]")
{
  REQUIRE(enumerate_braces(6, 1) == enumerate_braces(6, 4));
  auto s1 = enumerate_solutions(3, false, 1);
  auto s4 = enumerate_solutions(3, false, 4);
  REQUIRE(s1.size() == s4.size());
  for (size_t i = 0; i < s1.size(); ++i) REQUIRE(s1[i] == s4[i]);
}

TEST_CASE("solution enumeration matches the naive oracle", "[enumerate]")
{
  REQUIRE(enumerate_solutions(1).size() == 1);

  for (int n : {2, 3}) {
    auto fast = enumerate_solutions(n);
    auto slow = oracles::naive_solution_classes(n);
    REQUIRE(fast.size() == slow.size());
    // no two canonical representatives are related by a relabeling
    for (size_t i = 0; i < fast.size(); ++i)
      for (size_t j = i + 1; j < fast.size(); ++j)
        REQUIRE_FALSE(oracles::solution_isomorphic(fast[i], fast[j]));
    // each oracle class has exactly one canonical representative
    for (const Solution& s : slow) {
      int hits = 0;
      for (const Solution& f : fast)
        if (oracles::solution_isomorphic(s, f)) ++hits;
      REQUIRE(hits == 1);
    }
  }

  REQUIRE_THROWS_AS(enumerate_solutions(4), CapError);
  REQUIRE_THROWS_AS(enumerate_solutions(5, true), CapError);
  REQUIRE_THROWS_AS(enumerate_braces(9), CapError);
}

TEST_CASE("enumerated solutions all validate", "[enumerate]")
{
  for (const Solution& s : enumerate_solutions(3))
    REQUIRE_NOTHROW(Solution::validate(s.sigmas(), s.taus()));
}

TEST_CASE("survey rows", "[enumerate]")
{
  SurveyAggregate agg;
  auto rows = survey_braces(enumerate_braces(4), kDefaultOrderCap, &agg);
  REQUIRE(agg.count == 4);
  REQUIRE(rows.size() == 4);
  for (size_t i = 1; i < rows.size(); ++i) REQUIRE(rows[i - 1].key < rows[i].key);
  // the four order-4 braces: all two-sided and annihilator nilpotent
  REQUIRE(agg.ann_nilpotent_count == 4);

  auto one = survey_braces(enumerate_braces(1));
  REQUIRE(one.size() == 1);
  REQUIRE(one[0].soc_size == 1);
  REQUIRE(one[0].ann_size == 1);
  REQUIRE(one[0].b2_size == 1);
  REQUIRE_FALSE(one[0].simple);

  SurveyAggregate sagg;
  auto srows = survey_solutions(enumerate_solutions(2), &sagg);
  REQUIRE(sagg.count == static_cast<int>(srows.size()));
}
