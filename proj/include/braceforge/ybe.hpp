#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/core.hpp"
#include "braceforge/perm.hpp"
#include "braceforge/series.hpp"

namespace braceforge {

// Non-degenerate set-theoretic solution r(x,y) = (sigma_x(y), tau_y(x)) on
// {0..n-1}. sigma/tau are stored; r is always derived.
class Solution {
public:
  static Solution validate(std::vector<Perm> sigma, std::vector<Perm> tau)
  {
    int n = static_cast<int>(sigma.size());
    if (n == 0 || tau.size() != sigma.size())
      throw ValidationError(Fail::bad_table, "sigma/tau family sizes differ",
                            {n, static_cast<int>(tau.size()), -1});
    for (const auto* fam : {&sigma, &tau})
      for (const Perm& p : *fam)
        if (p.degree() != n)
          throw ValidationError(Fail::non_permutation,
                                "family member has wrong degree",
                                {p.degree(), n, -1});
    Solution s(std::move(sigma), std::move(tau));

    std::vector<int> hit(n * n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto [u, v] = s.r(x, y);
        int code = u * n + v;
        if (hit[code] >= 0)
          throw ValidationError(
              Fail::r_not_bijective,
              "r(" + std::to_string(hit[code] / n) + "," +
                  std::to_string(hit[code] % n) + ") collides with r(" +
                  std::to_string(x) + "," + std::to_string(y) + ")",
              {hit[code] / n, hit[code] % n, x * n + y});
        hit[code] = x * n + y;
      }

    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (s.braid_left(x, y, z) != s.braid_right(x, y, z))
            throw ValidationError(Fail::braid, "braid relation fails",
                                  {x, y, z});
    return s;
  }

  static Solution unchecked(std::vector<Perm> sigma, std::vector<Perm> tau)
  {
    return Solution(std::move(sigma), std::move(tau));
  }

  int size() const { return static_cast<int>(_sigma.size()); }
  const Perm& sigma(int x) const { return _sigma[x]; }
  const Perm& tau(int y) const { return _tau[y]; }
  const std::vector<Perm>& sigmas() const { return _sigma; }
  const std::vector<Perm>& taus() const { return _tau; }

  std::pair<int, int> r(int x, int y) const
  {
    return {_sigma[x](y), _tau[y](x)};
  }

  std::array<int, 3> braid_left(int x, int y, int z) const
  {
    auto [a, b] = r(x, y);          // (r x id)
    auto [c, d] = r(b, z);          // (id x r)
    auto [e, f] = r(a, c);          // (r x id)
    return {e, f, d};
  }

  std::array<int, 3> braid_right(int x, int y, int z) const
  {
    auto [a, b] = r(y, z);          // (id x r)
    auto [c, d] = r(x, a);          // (r x id)
    auto [e, f] = r(d, b);          // (id x r)
    return {c, e, f};
  }

  bool operator==(const Solution& o) const
  {
    return _sigma == o._sigma && _tau == o._tau;
  }

private:
  Solution(std::vector<Perm> sigma, std::vector<Perm> tau)
      : _sigma(std::move(sigma)), _tau(std::move(tau))
  {}

  std::vector<Perm> _sigma, _tau;
};

inline Solution verify_solution(std::vector<Perm> sigma, std::vector<Perm> tau)
{
  return Solution::validate(std::move(sigma), std::move(tau));
}

inline bool is_involutive(const Solution& s)
{
  int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.r(x, y);
      if (s.r(u, v) != std::pair<int, int>(x, y)) return false;
    }
  return true;
}

inline bool is_trivial_solution(const Solution& s)
{
  int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (s.r(x, y) != std::pair<int, int>(y, x)) return false;
  return true;
}

// G(X,r) = <sigma_x, tau_y> as a concrete permutation group on X.
inline std::vector<Perm> permutation_group(const Solution& s)
{
  std::vector<Perm> gens = s.sigmas();
  gens.insert(gens.end(), s.taus().begin(), s.taus().end());
  return closure(gens, s.size());
}

inline bool is_indecomposable(const Solution& s)
{
  std::vector<Perm> gens = s.sigmas();
  gens.insert(gens.end(), s.taus().begin(), s.taus().end());
  return is_transitive(gens, s.size());
}

struct Decomposition {
  std::vector<std::vector<int>> orbits;  // full orbit partition
  std::vector<int> block_one;            // two-block coarsening: orbit of 0
  std::vector<int> block_two;            // and everything else
};

// Orbit partition of the permutation group when intransitive, plus one
// two-block coarsening whose blocks are verified to be r-invariant.
inline std::optional<Decomposition> decompose(const Solution& s)
{
  int n = s.size();
  std::vector<Perm> gens = s.sigmas();
  gens.insert(gens.end(), s.taus().begin(), s.taus().end());
  auto parts = orbits(gens, n);
  if (parts.size() <= 1) return std::nullopt;

  Decomposition d;
  d.orbits = parts;
  d.block_one = parts[0];
  for (size_t i = 1; i < parts.size(); ++i)
    d.block_two.insert(d.block_two.end(), parts[i].begin(), parts[i].end());
  std::sort(d.block_two.begin(), d.block_two.end());

  for (const auto* blk : {&d.block_one, &d.block_two}) {
    IndexSet in(n);
    for (int v : *blk) in.set(v);
    for (int x : *blk)
      for (int y : *blk) {
        auto [u, v] = s.r(x, y);
        if (!in.test(u) || !in.test(v))
          throw InternalError("orbit block is not r-invariant");
      }
  }
  return d;
}

// Derived solution r'(x,y) = (y, eta_y(x)) with
// eta_y(x) = sigma_y(tau_{sigma_x^{-1}(y)}(x)).
inline Solution derived_solution(const Solution& s)
{
  int n = s.size();
  std::vector<Perm> eta;
  eta.reserve(n);
  for (int y = 0; y < n; ++y) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x)
      img[x] = s.sigma(y)(s.tau(s.sigma(x).inverse()(y))(x));
    eta.emplace_back(std::move(img));
  }
  return Solution::validate(std::vector<Perm>(n, Perm(n)), std::move(eta));
}

inline bool is_derived_indecomposable(const Solution& s)
{
  bool derived_ind = is_indecomposable(derived_solution(s));
  if (derived_ind && !is_indecomposable(s))
    throw InternalError(
        "derived-indecomposable solution is itself decomposable");
  return derived_ind;
}

// r_B(a,b) = (lambda_a(b), lambda_a(b)^{-1} . a . b); the tau family is read
// off the second coordinate per element.
inline Solution solution_from_brace(const SkewBrace& B)
{
  int n = B.order();
  std::vector<Perm> sigma, tau;
  sigma.reserve(n);
  tau.reserve(n);
  for (int a = 0; a < n; ++a) sigma.push_back(B.lambda_perm(a));
  for (int b = 0; b < n; ++b) {
    std::vector<int> img(n);
    for (int a = 0; a < n; ++a)
      img[a] = B.mul(B.mul(B.inv(B.lambda(a, b)), a), b);
    tau.emplace_back(std::move(img));  // throws if degenerate
  }
  return Solution::validate(std::move(sigma), std::move(tau));
}

struct RbOrderReport {
  int ann_index = 0;       // n = |B : Ann(B)|
  int bound = 0;           // 2n
  bool bound_holds = false;  // r_B^(2n) = id on all pairs
  long long r_order = 0;   // true order of r_B in Sym(B x B)
};

// r_C^(2n) = id with n = |C : Ann(C)|; also reports the true order of r_B.
inline RbOrderReport rb_order_check(const SkewBrace& B)
{
  Solution s = solution_from_brace(B);
  int n = B.order();
  RbOrderReport rep;
  rep.ann_index = n / annihilator(B).size();
  rep.bound = 2 * rep.ann_index;

  std::vector<int> image(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.r(x, y);
      image[x * n + y] = u * n + v;
    }
  std::vector<int> cur(n * n);
  std::iota(cur.begin(), cur.end(), 0);
  for (int k = 0; k < rep.bound; ++k)
    for (int i = 0; i < n * n; ++i) cur[i] = image[cur[i]];
  rep.bound_holds = true;
  for (int i = 0; i < n * n; ++i)
    if (cur[i] != i) rep.bound_holds = false;

  // order = lcm of cycle lengths
  std::vector<char> seen(n * n, 0);
  long long order = 1;
  for (int i = 0; i < n * n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = image[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  rep.r_order = order;
  return rep;
}

// Finitely presented descriptions of the structure group G(X,r) and its
// additive counterpart A(X,r), one relation per pair:
//   G: x y = sigma_x(y) tau_y(x)
//   A: x + sigma_x(y) = sigma_x(y) + sigma_{sigma_x(y)}(tau_y(x))
// A-relations are written multiplicatively; the header line marks the
// intended interpretation. Generators are x1..xn.
inline std::string emit_presentations(const Solution& s)
{
  int n = s.size();
  std::ostringstream out;
  auto gen = [](int i) { return "x" + std::to_string(i + 1); };
  out << "group G size " << n << "\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out << gen(x) << " " << gen(y) << " = " << gen(s.sigma(x)(y)) << " "
          << gen(s.tau(y)(x)) << "\n";
  out << "group A size " << n << "\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = s.sigma(x)(y);
      int w = s.sigma(u)(s.tau(y)(x));
      out << gen(x) << " " << gen(u) << " = " << gen(u) << " " << gen(w)
          << "\n";
    }
  return out.str();
}

}  // namespace braceforge
