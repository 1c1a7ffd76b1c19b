#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/catalog.hpp"
#include "braceforge/core.hpp"
#include "braceforge/extended.hpp"
#include "braceforge/io.hpp"
#include "braceforge/series.hpp"
#include "braceforge/ybe.hpp"

namespace braceforge {

namespace detail {

inline json members_json(const IndexSet& s) { return json(s.members()); }

inline json series_json(const SeriesReport& rep)
{
  json terms = json::array();
  for (const IndexSet& t : rep.chain) terms.push_back(members_json(t));
  return terms;
}

}  // namespace detail

// Full invariant report for a brace. Lattice-dependent fields (radical,
// simplicity, S-series, ideal list) honor the order cap and are reported as
// skipped rather than failing the whole analysis.
inline json analyze_brace(const SkewBrace& B, int cap = kDefaultOrderCap)
{
  json j;
  j["kind"] = "brace";
  j["order"] = B.order();
  j["add_abelian"] = B.add_group().is_abelian();
  j["mul_abelian"] = B.mul_group().is_abelian();
  j["trivial"] = is_trivial_brace(B);
  j["two_sided"] = is_two_sided(B);

  j["socle"] = detail::members_json(socle(B));
  j["annihilator"] = detail::members_json(annihilator(B));
  j["b2"] = detail::members_json(b2(B));
  j["add_commutator"] = detail::members_json(add_commutator(B));
  j["mul_commutator"] = detail::members_json(mul_commutator(B));
  j["bs_bound"] = bs_bound(B);

  json sidx = json::array();
  for (int x = 0; x < B.order(); ++x) {
    SIndices s = s_indices(B, x);
    sidx.push_back({s.add_index, s.mul_index});
  }
  j["s_indices"] = std::move(sidx);

  SeriesReport soc = socle_series(B);
  SeriesReport ann = ann_series(B);
  j["socle_series"] = detail::series_json(soc);
  j["socle_length"] = soc.length;
  j["ann_series"] = detail::series_json(ann);
  auto [nil, len] = is_annihilator_nilpotent(B);
  j["ann_nilpotent"] = {{"holds", nil}, {"length", len}};

  IdentityCheck idc = verify_identities(B);
  json checks;
  checks["identities"] = idc.ok ? "pass" : ("fail: " + idc.identity);
  checks["lambda_homomorphism"] = lambda_is_homomorphism(B);
  checks["star_commutator"] = star_commutator_identity(B);
  IndexSet meet = IndexSet::full(B.order());
  for (int x = 0; x < B.order(); ++x) meet &= ann_element(B, x);
  checks["annihilator_is_elementwise_meet"] = meet == annihilator(B);
  j["checks"] = std::move(checks);

  if (B.order() <= cap) {
    IdealLattice lat = all_ideals(B, cap);
    json ideals = json::array();
    for (const IndexSet& I : lat.ideals) ideals.push_back(detail::members_json(I));
    j["ideals"] = std::move(ideals);
    j["radical"] = detail::members_json(radical(B, cap));
    j["simple"] = is_simple(B, cap);
    j["s_series"] = detail::series_json(s_series(B, cap));
  } else {
    j["cap_exceeded_fields"] = {"ideals", "radical", "simple", "s_series"};
    j["order_cap"] = cap;
  }
  return j;
}

inline json analyze_solution(const Solution& S)
{
  json j;
  j["kind"] = "solution";
  j["size"] = S.size();
  j["involutive"] = is_involutive(S);
  j["trivial"] = is_trivial_solution(S);
  j["indecomposable"] = is_indecomposable(S);
  j["derived_indecomposable"] = is_derived_indecomposable(S);
  j["permutation_group_order"] =
      static_cast<int>(permutation_group(S).size());
  if (auto dec = decompose(S)) {
    json orbs = json::array();
    for (const auto& o : dec->orbits) orbs.push_back(o);
    j["orbits"] = std::move(orbs);
    j["blocks"] = {dec->block_one, dec->block_two};
  }
  Solution d = derived_solution(S);
  j["derived"] = solution_json(d);
  return j;
}

inline json analyze_extended(const ExtendedBrace& E, int cap = kDefaultOrderCap)
{
  json j;
  j["kind"] = "extended_brace";
  j["free_rank"] = E.free_rank();
  j["torsion_free"] = is_torsion_free(E);
  j["finite_part"] = analyze_brace(E.finite_part(), cap);
  SubdirectReport sub = subdirect_decomposition(E);
  j["subdirect"] = {{"torsion_add_eq_mul", sub.torsion_add_eq_mul},
                    {"torsion_is_ideal", sub.torsion_is_ideal},
                    {"quotient_by_torsion_trivial",
                     sub.quotient_by_torsion_trivial},
                    {"trivial_rank", sub.trivial_rank},
                    {"periodic_order", sub.periodic_order},
                    {"free_part_in_annihilator",
                     sub.free_part_in_annihilator},
                    {"embedding_injective", sub.embedding_injective},
                    {"box_radius", sub.box_radius},
                    {"argument", sub.argument}};
  PropertySCertificate cert = property_s_certificate(E);
  json idx = json::array();
  for (const SIndices& s : cert.element_indices)
    idx.push_back({s.add_index, s.mul_index});
  j["property_s"] = {{"ideal_in_annihilator", cert.ideal_in_annihilator},
                     {"quotient_periodic", cert.quotient_periodic},
                     {"element_indices", std::move(idx)},
                     {"bs_bound", cert.bs},
                     {"valid", cert.valid_certificate}};
  return j;
}

inline json analyze(const ParsedObject& po, int cap = kDefaultOrderCap)
{
  if (po.is_brace()) return analyze_brace(std::get<SkewBrace>(po.value), cap);
  if (po.is_extended())
    return analyze_extended(std::get<ExtendedBrace>(po.value), cap);
  return analyze_solution(std::get<Solution>(po.value));
}

// Human-readable rendering; carries no stability guarantee.
inline std::string analysis_text(const json& j)
{
  std::ostringstream out;
  auto line = [&](const std::string& k, const json& v) {
    out << "  " << k << ": " << v.dump() << "\n";
  };
  out << j.value("kind", std::string("object")) << "\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "kind") continue;
    line(it.key(), it.value());
  }
  return out.str();
}

}  // namespace braceforge
