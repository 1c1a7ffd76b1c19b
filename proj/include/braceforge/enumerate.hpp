#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/core.hpp"
#include "braceforge/perm.hpp"
#include "braceforge/series.hpp"
#include "braceforge/ybe.hpp"

namespace braceforge {

struct GroupSpec {
  std::string name;
  int order;
  std::vector<int> table;  // flat, identity at 0
};

namespace detail {

inline std::vector<int> cyclic_table(int n)
{
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return t;
}

inline std::vector<int> product_table(const std::vector<int>& t1, int n1,
                                      const std::vector<int>& t2, int n2)
{
  int n = n1 * n2;
  std::vector<int> t(n * n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          t[(a1 * n2 + a2) * n + (b1 * n2 + b2)] =
              t1[a1 * n1 + b1] * n2 + t2[a2 * n2 + b2];
  return t;
}

// Dihedral-type table on pairs (i,j), i mod m, j mod 2: the reflection part
// inverts the rotation part. m = 3 gives S3, m = 4 gives D4.
inline std::vector<int> dihedral_table(int m)
{
  int n = 2 * m;
  std::vector<int> t(n * n);
  auto idx = [m](int i, int j) { return ((i % m) + m) % m + m * (j % 2); };
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          t[idx(i1, j1) * n + idx(i2, j2)] =
              idx(i1 + (j1 ? -i2 : i2), j1 + j2);
  return t;
}

inline std::vector<int> quaternion_table()
{
  // elements b + 4s: basis {1,i,j,k}, sign s
  static const int basis[4][4] = {
      {0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
  // basis[a][b] = index of e_a * e_b among {1,i,j,k,-1,-i,-j,-k}
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int prod = basis[a % 4][b % 4];
      int sign = (a / 4 + b / 4 + prod / 4) % 2;
      t[a * 8 + b] = prod % 4 + 4 * sign;
    }
  return t;
}

}  // namespace detail

// Built-in catalog of all groups of order <= 8, as explicit validated tables.
inline std::vector<GroupSpec> groups_of_order(int n)
{
  using namespace detail;
  if (n < 1 || n > 8)
    throw CapError("group catalog covers orders 1..8, got " +
                   std::to_string(n));
  std::vector<GroupSpec> out;
  auto add = [&](std::string name, std::vector<int> t) {
    // catalog tables are never trusted silently
    if (FinGroup::validate(t, n).identity() != 0)
      throw InternalError("catalog group identity not at index 0");
    out.push_back({std::move(name), n, std::move(t)});
  };
  switch (n) {
  case 1: add("1", {0}); break;
  case 2: add("Z2", cyclic_table(2)); break;
  case 3: add("Z3", cyclic_table(3)); break;
  case 4:
    add("Z4", cyclic_table(4));
    add("Z2xZ2", product_table(cyclic_table(2), 2, cyclic_table(2), 2));
    break;
  case 5: add("Z5", cyclic_table(5)); break;
  case 6:
    add("Z6", cyclic_table(6));
    add("S3", dihedral_table(3));
    break;
  case 7: add("Z7", cyclic_table(7)); break;
  case 8:
    add("Z8", cyclic_table(8));
    add("Z4xZ2", product_table(cyclic_table(4), 4, cyclic_table(2), 2));
    add("Z2xZ2xZ2",
        product_table(product_table(cyclic_table(2), 2, cyclic_table(2), 2),
                      4, cyclic_table(2), 2));
    add("D4", dihedral_table(4));
    add("Q8", quaternion_table());
    break;
  }
  return out;
}

// All automorphisms of a group table (bijections fixing the identity 0 that
// preserve the product), as image vectors. Identity automorphism comes first.
inline std::vector<std::vector<int>> automorphisms(const std::vector<int>& t,
                                                   int n)
{
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = pi[t[a * n + b]] == t[pi[a] * n + pi[b]];
    if (ok) out.push_back(pi);
  } while (std::next_permutation(pi.begin() + 1, pi.end()));
  return out;
}

// Canonical labeled form of a skew brace: the lexicographically least
// concatenated (add, mul) table pair over all carrier relabelings fixing 0.
struct CanonicalForm {
  int order = 0;
  std::vector<int> add, mul;  // flat canonical tables

  std::string key() const
  {
    std::string k;
    k.reserve(1 + add.size() + mul.size());
    k.push_back(static_cast<char>(order));
    for (int v : add) k.push_back(static_cast<char>(v));
    for (int v : mul) k.push_back(static_cast<char>(v));
    return k;
  }

  SkewBrace to_brace() const
  {
    return SkewBrace::validate_flat(add, mul, order);
  }

  bool operator==(const CanonicalForm& o) const
  {
    return order == o.order && add == o.add && mul == o.mul;
  }

  bool operator<(const CanonicalForm& o) const
  {
    if (order != o.order) return order < o.order;
    if (add != o.add) return add < o.add;
    return mul < o.mul;
  }
};

namespace detail {

inline CanonicalForm canonical_form_tables(const std::vector<int>& add,
                                           const std::vector<int>& mul, int n)
{
  if (n > 8)
    throw CapError("canonical_form: factorial relabeling scan capped at 8");
  std::vector<int> best_add = add, best_mul = mul;
  std::vector<int> pi(n), inv(n);
  std::iota(pi.begin(), pi.end(), 0);
  auto relabel_entry = [&](const std::vector<int>& t, int i, int j) {
    return pi[t[inv[i] * n + inv[j]]];
  };
  while (std::next_permutation(pi.begin() + 1, pi.end())) {
    for (int i = 0; i < n; ++i) inv[pi[i]] = i;
    // lexicographic compare against the incumbent, with early exit
    int cmp = 0;
    for (int i = 0; i < n * n && cmp == 0; ++i) {
      int v = relabel_entry(add, i / n, i % n);
      cmp = v - best_add[i];
    }
    for (int i = 0; i < n * n && cmp == 0; ++i) {
      int v = relabel_entry(mul, i / n, i % n);
      cmp = v - best_mul[i];
    }
    if (cmp < 0) {
      std::vector<int> na(n * n), nm(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          na[i * n + j] = relabel_entry(add, i, j);
          nm[i * n + j] = relabel_entry(mul, i, j);
        }
      best_add = std::move(na);
      best_mul = std::move(nm);
    }
  }
  return {n, std::move(best_add), std::move(best_mul)};
}

// Backtracking search for all skew brace structures with the given labeled
// additive group: assignments lambda: carrier -> Aut(add) whose graph
// {(a, lambda_a)} is a regular subgroup of the holomorph. Completed
// assignments are emitted as multiplication tables a.b = a + lambda_a(b).
class HolomorphSearch {
public:
  HolomorphSearch(const std::vector<int>& add, int n)
      : _add(add), _n(n), _auts(automorphisms(add, n))
  {
    int m = static_cast<int>(_auts.size());
    std::map<std::vector<int>, int> lookup;
    for (int i = 0; i < m; ++i) lookup[_auts[i]] = i;
    _comp.assign(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        std::vector<int> c(_n);
        for (int x = 0; x < _n; ++x) c[x] = _auts[i][_auts[j][x]];
        _comp[i][j] = lookup.at(c);
      }
  }

  int aut_count() const { return static_cast<int>(_auts.size()); }

  // Runs the search with lambda_1 fixed to first_choice (the task split used
  // for parallel enumeration); a negative value searches all of them.
  std::vector<std::vector<int>> run(int first_choice = -1)
  {
    _out.clear();
    _lam.assign(_n, -1);
    _assigned.clear();
    std::vector<int> trail;
    assign(0, 0, trail);  // identity automorphism at the identity element
    if (_n == 1) {
      emit();
      return std::move(_out);
    }
    if (first_choice < 0) {
      dfs();
    } else {
      std::vector<int> t2;
      if (try_assign(1, first_choice, t2)) dfs();
      undo(t2);
    }
    return std::move(_out);
  }

private:
  void dfs()
  {
    int a = -1;
    for (int i = 0; i < _n; ++i)
      if (_lam[i] < 0) {
        a = i;
        break;
      }
    if (a < 0) {
      emit();
      return;
    }
    for (int f = 0; f < aut_count(); ++f) {
      std::vector<int> trail;
      if (try_assign(a, f, trail)) dfs();
      undo(trail);
    }
  }

  void emit()
  {
    std::vector<int> mul(_n * _n);
    for (int a = 0; a < _n; ++a)
      for (int b = 0; b < _n; ++b)
        mul[a * _n + b] = _add[a * _n + _auts[_lam[a]][b]];
    _out.push_back(std::move(mul));
  }

  void assign(int a, int f, std::vector<int>& trail)
  {
    _lam[a] = f;
    _assigned.push_back(a);
    trail.push_back(a);
  }

  // Assigns lambda_a = f and closes under the holomorph product
  // (p, f_p)(q, f_q) = (p + f_p(q), f_p f_q); false on conflict.
  bool try_assign(int a, int f, std::vector<int>& trail)
  {
    size_t queue_from = _assigned.size();
    assign(a, f, trail);
    for (size_t qi = queue_from; qi < _assigned.size(); ++qi) {
      int u = _assigned[qi];
      for (size_t vi = 0; vi < _assigned.size(); ++vi) {
        int v = _assigned[vi];
        for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
          int c = _add[p * _n + _auts[_lam[p]][q]];
          int need = _comp[_lam[p]][_lam[q]];
          if (_lam[c] < 0)
            assign(c, need, trail);
          else if (_lam[c] != need)
            return false;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail)
  {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      _lam[*it] = -1;
      _assigned.pop_back();
    }
  }

  const std::vector<int>& _add;
  int _n;
  std::vector<std::vector<int>> _auts;
  std::vector<std::vector<int>> _comp;
  std::vector<int> _lam;
  std::vector<int> _assigned;
  std::vector<std::vector<int>> _out;
};

// Round-robin task runner with deterministic, task-ordered result collection.
template <typename Result, typename Fn>
std::vector<Result> run_tasks(int task_count, int jobs, Fn fn)
{
  std::vector<Result> results(task_count);
  if (jobs <= 1) {
    for (int t = 0; t < task_count; ++t) results[t] = fn(t);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int t = next.fetch_add(1);
        if (t >= task_count) return;
        results[t] = fn(t);
      }
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace detail

inline CanonicalForm canonical_form(const SkewBrace& B)
{
  return detail::canonical_form_tables(B.add_table(), B.mul_table(),
                                       B.order());
}

// One representative per isomorphism class of skew braces of order n <= 8:
// for each group table in the catalog, multiplicative structures are found
// as regular subgroups of its holomorph, then canonicalized and deduplicated.
// Output is sorted by canonical form and independent of the job count.
inline std::vector<CanonicalForm> enumerate_braces(int n, int jobs = 1)
{
  if (n < 1 || n > 8)
    throw CapError("enumerate_braces: order " + std::to_string(n) +
                   " outside 1..8");
  std::vector<GroupSpec> groups = groups_of_order(n);
  std::vector<CanonicalForm> all;
  for (const GroupSpec& g : groups) {
    detail::HolomorphSearch probe(g.table, n);
    std::vector<std::vector<std::vector<int>>> per_task;
    if (n == 1) {
      per_task.push_back(probe.run());
    } else {
      per_task = detail::run_tasks<std::vector<std::vector<int>>>(
          probe.aut_count(), jobs, [&](int t) {
            detail::HolomorphSearch s(probe);
            return s.run(t);
          });
    }
    for (const auto& tables : per_task)
      for (const auto& mul : tables)
        all.push_back(detail::canonical_form_tables(g.table, mul, n));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

// Canonical representative of a solution under the diagonal relabeling
// action: sigma'_x = pi sigma_{pi^-1(x)} pi^-1 and likewise for tau.
inline Solution canonical_solution(const Solution& s)
{
  int n = s.size();
  std::vector<int> pi(n), inv(n);
  std::iota(pi.begin(), pi.end(), 0);
  auto build = [&](std::vector<Perm>& sig, std::vector<Perm>& tau) {
    for (int i = 0; i < n; ++i) inv[pi[i]] = i;
    for (int x = 0; x < n; ++x) {
      std::vector<int> si(n), ti(n);
      for (int y = 0; y < n; ++y) {
        si[y] = pi[s.sigma(inv[x])(inv[y])];
        ti[y] = pi[s.tau(inv[x])(inv[y])];
      }
      sig[x] = Perm(std::move(si));
      tau[x] = Perm(std::move(ti));
    }
  };
  std::vector<Perm> bs(n, Perm(n)), bt(n, Perm(n));
  build(bs, bt);
  std::vector<Perm> cs(n, Perm(n)), ct(n, Perm(n));
  auto less = [](const std::vector<Perm>& s1, const std::vector<Perm>& t1,
                 const std::vector<Perm>& s2, const std::vector<Perm>& t2) {
    if (s1 != s2) return s1 < s2;
    return t1 < t2;
  };
  while (std::next_permutation(pi.begin(), pi.end())) {
    build(cs, ct);
    if (less(cs, ct, bs, bt)) {
      bs = cs;
      bt = ct;
    }
  }
  return Solution::unchecked(std::move(bs), std::move(bt));
}

inline std::string solution_key(const Solution& s)
{
  std::string k;
  k.push_back(static_cast<char>(s.size()));
  for (const auto* fam : {&s.sigmas(), &s.taus()})
    for (const Perm& p : *fam)
      for (int v : p.images()) k.push_back(static_cast<char>(v));
  return k;
}

namespace detail {

// DFS over interleaved sigma/tau assignments with braid pruning: after every
// assignment all fully-determined braid instances and r-collisions are
// checked, so dead branches are cut as early as the data allows.
class SolutionSearch {
public:
  SolutionSearch(int n) : _n(n)
  {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      _perms.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    _sig.assign(n, -1);
    _tau.assign(n, -1);
  }

  int perm_count() const { return static_cast<int>(_perms.size()); }

  std::vector<Solution> run(int sigma0_choice)
  {
    _out.clear();
    _sig[0] = sigma0_choice;
    if (consistent()) dfs(1);
    _sig[0] = -1;
    return std::move(_out);
  }

private:
  // variable order: sig0, tau0, sig1, tau1, ...
  void dfs(int depth)
  {
    if (depth == 2 * _n) {
      std::vector<Perm> sig, tau;
      for (int i = 0; i < _n; ++i) sig.push_back(_perms[_sig[i]]);
      for (int i = 0; i < _n; ++i) tau.push_back(_perms[_tau[i]]);
      _out.push_back(Solution::validate(std::move(sig), std::move(tau)));
      return;
    }
    int* slot = depth % 2 == 0 ? &_sig[depth / 2] : &_tau[depth / 2];
    for (int p = 0; p < perm_count(); ++p) {
      *slot = p;
      if (consistent()) dfs(depth + 1);
    }
    *slot = -1;
  }

  bool r_at(int x, int y, int* u, int* v) const
  {
    if (_sig[x] < 0 || _tau[y] < 0) return false;
    *u = _perms[_sig[x]](y);
    *v = _perms[_tau[y]](x);
    return true;
  }

  bool braid_side(int x, int y, int z, bool left, std::array<int, 3>* out) const
  {
    int a, b, c, d, e, f;
    if (left) {
      if (!r_at(x, y, &a, &b) || !r_at(b, z, &c, &d) || !r_at(a, c, &e, &f))
        return false;
      *out = {e, f, d};
    } else {
      if (!r_at(y, z, &a, &b) || !r_at(x, a, &c, &d) || !r_at(d, b, &e, &f))
        return false;
      *out = {c, e, f};
    }
    return true;
  }

  bool consistent() const
  {
    // r must stay injective on the pairs already determined
    std::vector<int> hit(_n * _n, 0);
    for (int x = 0; x < _n; ++x)
      for (int y = 0; y < _n; ++y) {
        int u, v;
        if (r_at(x, y, &u, &v)) {
          if (hit[u * _n + v]++) return false;
        }
      }
    for (int x = 0; x < _n; ++x)
      for (int y = 0; y < _n; ++y)
        for (int z = 0; z < _n; ++z) {
          std::array<int, 3> l, r;
          if (braid_side(x, y, z, true, &l) &&
              braid_side(x, y, z, false, &r) && l != r)
            return false;
        }
    return true;
  }

  int _n;
  std::vector<Perm> _perms;
  std::vector<int> _sig, _tau;
  std::vector<Solution> _out;
};

}  // namespace detail

// All non-degenerate solutions on n points up to relabeling. Exhaustive for
// n <= 3; n = 4 runs only behind allow_slow. Deterministic sorted output.
inline std::vector<Solution> enumerate_solutions(int n, bool allow_slow = false,
                                                 int jobs = 1)
{
  if (n < 1 || n > 4)
    throw CapError("enumerate_solutions: size " + std::to_string(n) +
                   " outside 1..4");
  if (n == 4 && !allow_slow)
    throw CapError("enumerate_solutions: size 4 requires the slow flag");
  detail::SolutionSearch probe(n);
  auto per_task = detail::run_tasks<std::vector<Solution>>(
      probe.perm_count(), jobs, [&](int t) {
        detail::SolutionSearch s(n);
        return s.run(t);
      });
  std::vector<std::pair<std::string, Solution>> keyed;
  for (auto& chunk : per_task)
    for (Solution& s : chunk) {
      Solution c = canonical_solution(s);
      keyed.emplace_back(solution_key(c), std::move(c));
    }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Solution> out;
  for (auto& [key, sol] : keyed)
    if (out.empty() || key != solution_key(out.back()))
      out.push_back(std::move(sol));
  return out;
}

struct BraceSurveyRow {
  std::string key;
  int order = 0;
  int soc_size = 0, ann_size = 0, b2_size = 0;
  int socle_length = 0;
  int ann_length = -1;         // -1 when not annihilator nilpotent
  bool ann_nilpotent = false;
  bool simple = false;
  bool two_sided = false;
  int bs = 1;
};

struct SolutionSurveyRow {
  std::string key;
  int size = 0;
  bool indecomposable = false;
  bool derived_indecomposable = false;
  bool involutive = false;
};

struct SurveyAggregate {
  int count = 0;
  int simple_count = 0;
  int two_sided_count = 0;
  int ann_nilpotent_count = 0;
  int indecomposable_count = 0;
  int derived_indecomposable_count = 0;
  int involutive_count = 0;
};

inline std::vector<BraceSurveyRow> survey_braces(
    const std::vector<CanonicalForm>& forms, int cap = kDefaultOrderCap,
    SurveyAggregate* agg = nullptr)
{
  std::vector<BraceSurveyRow> rows;
  for (const CanonicalForm& cf : forms) {
    SkewBrace B = cf.to_brace();
    BraceSurveyRow row;
    row.key = cf.key();
    row.order = B.order();
    row.soc_size = socle(B).size();
    row.ann_size = annihilator(B).size();
    row.b2_size = b2(B).size();
    row.socle_length = socle_series(B).length;
    auto [nil, len] = is_annihilator_nilpotent(B);
    row.ann_nilpotent = nil;
    row.ann_length = len;
    row.simple = is_simple(B, cap);
    row.two_sided = is_two_sided(B);
    row.bs = bs_bound(B);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.key < b.key; });
  if (agg) {
    *agg = {};
    agg->count = static_cast<int>(rows.size());
    for (const auto& r : rows) {
      agg->simple_count += r.simple;
      agg->two_sided_count += r.two_sided;
      agg->ann_nilpotent_count += r.ann_nilpotent;
    }
  }
  return rows;
}

inline std::vector<SolutionSurveyRow> survey_solutions(
    const std::vector<Solution>& sols, SurveyAggregate* agg = nullptr)
{
  std::vector<SolutionSurveyRow> rows;
  for (const Solution& s : sols) {
    SolutionSurveyRow row;
    row.key = solution_key(canonical_solution(s));
    row.size = s.size();
    row.indecomposable = is_indecomposable(s);
    row.derived_indecomposable = is_derived_indecomposable(s);
    row.involutive = is_involutive(s);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.key < b.key; });
  if (agg) {
    *agg = {};
    agg->count = static_cast<int>(rows.size());
    for (const auto& r : rows) {
      agg->indecomposable_count += r.indecomposable;
      agg->derived_indecomposable_count += r.derived_indecomposable;
      agg->involutive_count += r.involutive;
    }
  }
  return rows;
}

}  // namespace braceforge
