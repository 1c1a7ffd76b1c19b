#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "braceforge/core.hpp"

namespace braceforge {

// Permutation of {0..n-1}; images[i] is the image of i.
class Perm {
public:
  Perm() = default;

  explicit Perm(int n) : _images(n)
  {
    std::iota(_images.begin(), _images.end(), 0);
  }

  explicit Perm(std::vector<int> images) : _images(std::move(images))
  {
    int n = degree();
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      int v = _images[i];
      if (v < 0 || v >= n || seen[v])
        throw ValidationError(Fail::non_permutation,
                              "images are not a bijection", {i, v, -1});
      seen[v] = 1;
    }
  }

  // Cycle notation helper, 0-based points.
  static Perm from_cycles(int n, std::initializer_list<std::vector<int>> cycles)
  {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& c : cycles)
      for (size_t i = 0; i < c.size(); ++i)
        img[c[i]] = c[(i + 1) % c.size()];
    return Perm(std::move(img));
  }

  int degree() const { return static_cast<int>(_images.size()); }

  int operator()(int i) const { return _images[i]; }

  const std::vector<int>& images() const { return _images; }

  bool is_identity() const
  {
    for (int i = 0; i < degree(); ++i)
      if (_images[i] != i) return false;
    return true;
  }

  Perm inverse() const
  {
    std::vector<int> inv(degree());
    for (int i = 0; i < degree(); ++i) inv[_images[i]] = i;
    Perm p;
    p._images = std::move(inv);
    return p;
  }

  bool operator==(const Perm& o) const { return _images == o._images; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return _images < o._images; }

private:
  std::vector<int> _images;
};

// compose(p, q) maps i to p(q(i)).
inline Perm compose(const Perm& p, const Perm& q)
{
  if (p.degree() != q.degree())
    throw ValidationError(Fail::bad_table, "compose: degree mismatch",
                          {p.degree(), q.degree(), -1});
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  return Perm(std::move(img));
}

// Smallest set of permutations containing the identity and the generators,
// closed under composition and inversion. Breadth-first multiplication; fine
// for the group orders this library works at.
inline std::vector<Perm> closure(const std::vector<Perm>& gens, int n)
{
  for (const auto& g : gens)
    if (g.degree() != n)
      throw ValidationError(Fail::bad_table, "closure: degree mismatch",
                            {g.degree(), n, -1});
  std::vector<Perm> elems = {Perm(n)};
  std::vector<Perm> frontier = elems;
  auto known = [&](const Perm& p) {
    return std::binary_search(elems.begin(), elems.end(), p);
  };
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        for (Perm h : {compose(g, f), compose(g.inverse(), f)}) {
          if (!known(h) &&
              !std::binary_search(next.begin(), next.end(), h)) {
            next.insert(std::lower_bound(next.begin(), next.end(), h),
                        std::move(h));
          }
        }
      }
    }
    std::vector<Perm> merged;
    std::merge(elems.begin(), elems.end(), next.begin(), next.end(),
               std::back_inserter(merged));
    elems = std::move(merged);
    frontier = std::move(next);
  }
  return elems;
}

inline std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens,
                                            int n)
{
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (owner[s] >= 0) continue;
    std::vector<int> orbit = {s};
    owner[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : gens) {
        int t = g(orbit[i]);
        if (owner[t] < 0) {
          owner[t] = owner[s];
          orbit.push_back(t);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

// True iff the orbit of point 0 under the generated group is all of {0..n-1}.
inline bool is_transitive(const std::vector<Perm>& gens, int n)
{
  if (n < 1)
    throw ValidationError(Fail::bad_table, "is_transitive: degree must be >= 1",
                          {n, -1, -1});
  return static_cast<int>(orbits(gens, n)[0].size()) == n;
}

// Finite group given by its full Cayley table on {0..n-1}.
class FinGroup {
public:
  // Validates associativity, identity and inverses exhaustively; the witness
  // of a failure is the lexicographically least one.
  static FinGroup validate(const std::vector<int>& table, int n,
                           Fail kind = Fail::not_a_group_add)
  {
    if (n <= 0 || static_cast<int>(table.size()) != n * n)
      throw ValidationError(Fail::bad_table, "table is not n x n",
                            {n, static_cast<int>(table.size()), -1});
    for (int i = 0; i < n * n; ++i)
      if (table[i] < 0 || table[i] >= n)
        throw ValidationError(Fail::bad_table, "table entry out of range",
                              {i / n, i % n, table[i]});
    for (int a = 0; a < n; ++a) {
      std::vector<char> row(n, 0), col(n, 0);
      for (int b = 0; b < n; ++b) {
        if (row[table[a * n + b]]++)
          throw ValidationError(kind, "row " + std::to_string(a) +
                                          " is not a permutation",
                                {a, b, table[a * n + b]});
        if (col[table[b * n + a]]++)
          throw ValidationError(kind, "column " + std::to_string(a) +
                                          " is not a permutation",
                                {b, a, table[b * n + a]});
      }
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
      bool ok = true;
      for (int b = 0; b < n; ++b)
        if (table[a * n + b] != b || table[b * n + a] != b) {
          ok = false;
          break;
        }
      if (ok) e = a;
    }
    if (e < 0)
      throw ValidationError(kind, "no two-sided identity", {-1, -1, -1});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
            throw ValidationError(kind, "associativity fails", {a, b, c});
    return FinGroup(table, n, e);
  }

  // Skips the axiom scan; for tables that are products of validated
  // constructions or deliberately corrupted test inputs.
  static FinGroup unchecked(const std::vector<int>& table, int n,
                            int identity = 0)
  {
    return FinGroup(table, n, identity);
  }

  int order() const { return _n; }
  int identity() const { return _identity; }
  int op(int a, int b) const { return _table[a * _n + b]; }
  int inv(int a) const { return _inv[a]; }
  const std::vector<int>& table() const { return _table; }

  bool is_abelian() const
  {
    for (int a = 0; a < _n; ++a)
      for (int b = a + 1; b < _n; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

  bool is_subgroup(const IndexSet& s) const
  {
    if (!s.test(_identity)) return false;
    auto m = s.members();
    for (int a : m) {
      if (!s.test(inv(a))) return false;
      for (int b : m)
        if (!s.test(op(a, b))) return false;
    }
    return true;
  }

  bool is_normal(const IndexSet& s) const
  {
    if (!is_subgroup(s)) return false;
    for (int g = 0; g < _n; ++g)
      for (int h : s.members())
        if (!s.test(op(op(g, h), inv(g)))) return false;
    return true;
  }

  int subgroup_index(const IndexSet& s) const
  {
    if (!is_subgroup(s))
      throw ValidationError(Fail::bad_table, "subgroup_index: not a subgroup",
                            {-1, -1, -1});
    return _n / s.size();
  }

  IndexSet subgroup_closure(const IndexSet& gens) const
  {
    IndexSet s(_n);
    s.set(_identity);
    std::vector<int> work = {_identity};
    auto add = [&](int v) {
      if (!s.test(v)) {
        s.set(v);
        work.push_back(v);
      }
    };
    for (int g : gens.members()) add(g);
    for (size_t i = 0; i < work.size(); ++i) {
      add(inv(work[i]));
      for (size_t j = 0; j < work.size(); ++j) {
        add(op(work[i], work[j]));
        add(op(work[j], work[i]));
      }
    }
    return s;
  }

  IndexSet centralizer(int x) const
  {
    IndexSet s(_n);
    for (int g = 0; g < _n; ++g)
      if (op(g, x) == op(x, g)) s.set(g);
    return s;
  }

  IndexSet center() const
  {
    IndexSet s = IndexSet::full(_n);
    for (int x = 0; x < _n; ++x) s &= centralizer(x);
    return s;
  }

  int conjugate_count(int x) const { return _n / centralizer(x).size(); }

  IndexSet commutator_subgroup() const
  {
    IndexSet gens(_n);
    for (int a = 0; a < _n; ++a)
      for (int b = 0; b < _n; ++b)
        gens.set(op(op(op(a, b), inv(a)), inv(b)));
    return subgroup_closure(gens);
  }

  IndexSet normal_closure(const IndexSet& s) const
  {
    IndexSet gens(_n);
    for (int g = 0; g < _n; ++g)
      for (int h : s.members()) gens.set(op(op(g, h), inv(g)));
    return subgroup_closure(gens);
  }

private:
  FinGroup(const std::vector<int>& table, int n, int identity)
      : _n(n), _table(table), _inv(n, -1), _identity(identity)
  {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (_table[a * n + b] == identity) {
          _inv[a] = b;
          break;
        }
      // corrupted unchecked tables may have no inverse; keep indices in range
      if (_inv[a] < 0) _inv[a] = identity;
    }
  }

  int _n;
  std::vector<int> _table;
  std::vector<int> _inv;
  int _identity;
};

}  // namespace braceforge
