#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/core.hpp"

namespace braceforge {

inline constexpr int kDefaultOrderCap = 32;

// Soc(B) = Ker(lambda) n Z(B,+); always an ideal.
inline IndexSet socle(const SkewBrace& B)
{
  int n = B.order();
  IndexSet ker(n);
  for (int a = 0; a < n; ++a) {
    bool id = true;
    for (int b = 0; b < n && id; ++b) id = B.lambda(a, b) == b;
    if (id) ker.set(a);
  }
  IndexSet s = ker & B.add_group().center();
  if (!is_ideal(B, s)) throw InternalError("Soc(B) is not an ideal");
  return s;
}

// Ann(B) = Soc(B) n Z(B,o); always an ideal.
inline IndexSet annihilator(const SkewBrace& B)
{
  IndexSet s = socle(B) & B.mul_group().center();
  if (!is_ideal(B, s)) throw InternalError("Ann(B) is not an ideal");
  return s;
}

struct SeriesReport {
  std::vector<IndexSet> chain;  // last two terms equal iff stabilized
  int length = 0;               // smallest alpha with term_alpha = term_alpha+1
  bool stabilized = false;
  std::vector<std::string> quotient_notes;
};

namespace detail {

inline IndexSet preimage(const std::vector<int>& proj, const IndexSet& sub,
                         int n)
{
  IndexSet out(n);
  for (int v = 0; v < n; ++v)
    if (sub.test(proj[v])) out.set(v);
  return out;
}

template <typename StepFn>
SeriesReport ascending_series(const SkewBrace& B, const char* step_name,
                              StepFn step)
{
  int n = B.order();
  SeriesReport rep;
  rep.chain.push_back(IndexSet::of(n, {0}));
  for (;;) {
    Quotient q = quotient(B, rep.chain.back());
    IndexSet qterm = step(q.brace);
    IndexSet next = preimage(q.projection, qterm, n);
    rep.quotient_notes.push_back(
        std::string(step_name) + "(quotient of order " +
        std::to_string(q.brace.order()) + ") has size " +
        std::to_string(qterm.size()));
    rep.chain.push_back(next);
    if (next == rep.chain[rep.chain.size() - 2]) {
      rep.stabilized = true;
      rep.length = static_cast<int>(rep.chain.size()) - 2;
      return rep;
    }
  }
}

}  // namespace detail

inline SeriesReport socle_series(const SkewBrace& B)
{
  return detail::ascending_series(B, "Soc",
                                  [](const SkewBrace& Q) { return socle(Q); });
}

// Upper annihilator series; also asserts Ann_a(B) <= Soc_a(B) at every level.
inline SeriesReport ann_series(const SkewBrace& B)
{
  SeriesReport rep = detail::ascending_series(
      B, "Ann", [](const SkewBrace& Q) { return annihilator(Q); });
  SeriesReport soc = socle_series(B);
  for (size_t i = 0; i < rep.chain.size(); ++i) {
    const IndexSet& s =
        i < soc.chain.size() ? soc.chain[i] : soc.chain.back();
    if (!s.contains(rep.chain[i]))
      throw InternalError("Ann_a(B) not contained in Soc_a(B)");
  }
  return rep;
}

inline IndexSet hyper_socle(const SkewBrace& B)
{
  return socle_series(B).chain.back();
}

inline IndexSet hyper_annihilator(const SkewBrace& B)
{
  return ann_series(B).chain.back();
}

inline std::pair<bool, int> is_annihilator_nilpotent(const SkewBrace& B)
{
  SeriesReport rep = ann_series(B);
  bool reaches = rep.chain.back().size() == B.order();
  return {reaches, reaches ? rep.length : -1};
}

struct IdealLattice {
  std::vector<IndexSet> ideals;  // sorted by size, then lexicographically
  std::vector<int> maximal;      // indices of maximal proper ideals
  std::vector<int> minimal;      // indices of minimal non-zero ideals
};

// Complete ideal lattice as the join-closure of the principal ideal closures;
// every ideal is the join of the closures of its elements.
inline IdealLattice all_ideals(const SkewBrace& B, int cap = kDefaultOrderCap)
{
  int n = B.order();
  if (n > cap)
    throw CapError("all_ideals: order " + std::to_string(n) + " exceeds cap " +
                   std::to_string(cap));
  std::vector<IndexSet> found;
  auto push = [&](const IndexSet& s) {
    if (std::find(found.begin(), found.end(), s) == found.end()) {
      found.push_back(s);
      return true;
    }
    return false;
  };
  push(IndexSet::of(n, {0}));
  for (int x = 0; x < n; ++x) push(ideal_closure(B, IndexSet::of(n, {x})));
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < i; ++j) push(ideal_closure(B, found[i] | found[j]));

  IdealLattice lat;
  lat.ideals = std::move(found);
  std::sort(lat.ideals.begin(), lat.ideals.end());
  for (size_t i = 0; i < lat.ideals.size(); ++i) {
    const IndexSet& I = lat.ideals[i];
    if (!is_ideal(B, I)) throw InternalError("lattice member is not an ideal");
    bool proper = I.size() < n;
    bool nonzero = I.size() > 1;
    if (proper) {
      bool max = true;
      for (const IndexSet& J : lat.ideals)
        if (J.size() < n && J != I && J.contains(I)) max = false;
      if (max) lat.maximal.push_back(static_cast<int>(i));
    }
    if (nonzero) {
      bool min = true;
      for (const IndexSet& J : lat.ideals)
        if (J.size() > 1 && J != I && I.contains(J)) min = false;
      if (min) lat.minimal.push_back(static_cast<int>(i));
    }
  }
  return lat;
}

// Rad(B) = intersection of all maximal ideals (B itself when there are none).
inline IndexSet radical(const SkewBrace& B, int cap = kDefaultOrderCap)
{
  IdealLattice lat = all_ideals(B, cap);
  IndexSet r = IndexSet::full(B.order());
  for (int i : lat.maximal) r &= lat.ideals[i];
  return r;
}

inline bool is_simple(const SkewBrace& B, int cap = kDefaultOrderCap)
{
  IdealLattice lat = all_ideals(B, cap);
  return B.order() > 1 && lat.ideals.size() == 2;
}

struct RadicalReport {
  IndexSet rad;
  int factor_count = 0;           // number of maximal ideals
  bool quotient_radical_zero = false;
  bool factors_simple = false;    // every B/I_j simple
  bool embedding_injective = false;
};

// B/Rad(B) has zero radical and embeds into the product of the simple
// quotients B/I_j over the maximal ideals I_j.
inline RadicalReport radical_decomposition_check(const SkewBrace& B,
                                                 int cap = kDefaultOrderCap)
{
  int n = B.order();
  IdealLattice lat = all_ideals(B, cap);
  RadicalReport rep{IndexSet::full(n)};
  std::vector<std::vector<int>> factor_proj;
  rep.factors_simple = true;
  for (int i : lat.maximal) {
    rep.rad &= lat.ideals[i];
    Quotient q = quotient(B, lat.ideals[i]);
    rep.factors_simple = rep.factors_simple && is_simple(q.brace, cap);
    factor_proj.push_back(q.projection);
  }
  rep.factor_count = static_cast<int>(lat.maximal.size());

  Quotient qr = quotient(B, rep.rad);
  rep.quotient_radical_zero = radical(qr.brace, cap).size() == 1;

  rep.embedding_injective = true;
  for (int a = 0; a < n && rep.embedding_injective; ++a)
    for (int b = 0; b < n && rep.embedding_injective; ++b) {
      if (qr.projection[a] == qr.projection[b]) continue;
      bool separated = false;
      for (const auto& proj : factor_proj)
        if (proj[a] != proj[b]) separated = true;
      if (!separated) rep.embedding_injective = false;
    }
  return rep;
}

// S-series: each step adjoins the ideal generated by the minimal ideals of
// the quotient that lie inside its hyper-annihilator. The chain stabilizes at
// the hyper-annihilator, and S_m <= Ann_m at every level.
inline SeriesReport s_series(const SkewBrace& B, int cap = kDefaultOrderCap)
{
  int n = B.order();
  if (n > cap)
    throw CapError("s_series: order " + std::to_string(n) + " exceeds cap " +
                   std::to_string(cap));
  SeriesReport rep;
  rep.chain.push_back(IndexSet::of(n, {0}));
  for (;;) {
    Quotient q = quotient(B, rep.chain.back());
    IndexSet hyper = hyper_annihilator(q.brace);
    IdealLattice lat = all_ideals(q.brace, cap);
    IndexSet gen(q.brace.order());
    gen.set(0);
    int used = 0;
    for (int i : lat.minimal)
      if (hyper.contains(lat.ideals[i])) {
        gen |= lat.ideals[i];
        ++used;
      }
    IndexSet step = ideal_closure(q.brace, gen);
    rep.quotient_notes.push_back(
        "S(quotient of order " + std::to_string(q.brace.order()) + ") joins " +
        std::to_string(used) + " minimal ideals, size " +
        std::to_string(step.size()));
    IndexSet next = detail::preimage(q.projection, step, n);
    rep.chain.push_back(next);
    if (next == rep.chain[rep.chain.size() - 2]) {
      rep.stabilized = true;
      rep.length = static_cast<int>(rep.chain.size()) - 2;
      break;
    }
  }
  SeriesReport ann = ann_series(B);
  for (size_t i = 0; i < rep.chain.size(); ++i) {
    const IndexSet& a =
        i < ann.chain.size() ? ann.chain[i] : ann.chain.back();
    if (!a.contains(rep.chain[i]))
      throw InternalError("S_m(B) not contained in Ann_m(B)");
  }
  if (rep.chain.back() != ann.chain.back())
    throw InternalError("S-series does not stabilize at the hyper-annihilator");
  return rep;
}

}  // namespace braceforge
