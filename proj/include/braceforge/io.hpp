#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/core.hpp"
#include "braceforge/extended.hpp"
#include "braceforge/ybe.hpp"

namespace braceforge {

using json = nlohmann::json;

// Brace documents:    {"order": n, "add": [[..]..], "mul": [[..]..]}
//                     + optional {"free_rank": k} promoting to ExtendedBrace
// Solution documents: {"size": n, "sigma": [[..]..], "tau": [[..]..]}
//                     + optional {"labels": [..]} carrying original points
// Canonical emission is nlohmann's compact dump: keys in sorted order, no
// whitespace, so identical objects serialize to identical bytes.

struct ParsedObject {
  std::variant<SkewBrace, ExtendedBrace, Solution> value;
  std::vector<int> labels;

  bool is_brace() const { return std::holds_alternative<SkewBrace>(value); }
  bool is_extended() const
  {
    return std::holds_alternative<ExtendedBrace>(value);
  }
  bool is_solution() const { return std::holds_alternative<Solution>(value); }
};

namespace detail {

inline std::vector<std::vector<int>> table_field(const json& j,
                                                 const char* key, int n)
{
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string("missing table \"") + key + "\"");
  std::vector<std::vector<int>> t;
  for (const auto& row : j[key]) {
    if (!row.is_array())
      throw ParseError(std::string("\"") + key + "\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw ParseError(std::string("\"") + key + "\" entries must be integers");
      r.push_back(v.get<int>());
    }
    t.push_back(std::move(r));
  }
  if (static_cast<int>(t.size()) != n)
    throw ParseError(std::string("\"") + key + "\" must have " +
                     std::to_string(n) + " rows");
  return t;
}

}  // namespace detail

inline ParsedObject parse_object(const json& j)
{
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (j.contains("add") || j.contains("mul") || j.contains("order")) {
    if (!j.contains("order") || !j["order"].is_number_integer())
      throw ParseError("brace document needs an integer \"order\"");
    int n = j["order"].get<int>();
    if (n < 1) throw ParseError("\"order\" must be positive");
    SkewBrace B = SkewBrace::validate(detail::table_field(j, "add", n),
                                      detail::table_field(j, "mul", n));
    if (j.contains("free_rank")) {
      if (!j["free_rank"].is_number_integer() || j["free_rank"].get<int>() < 0)
        throw ParseError("\"free_rank\" must be a non-negative integer");
      return {ExtendedBrace(B, j["free_rank"].get<int>()), {}};
    }
    return {B, {}};
  }
  if (j.contains("sigma") || j.contains("tau") || j.contains("size")) {
    if (!j.contains("size") || !j["size"].is_number_integer())
      throw ParseError("solution document needs an integer \"size\"");
    int n = j["size"].get<int>();
    if (n < 1) throw ParseError("\"size\" must be positive");
    auto fam = [&](const char* key) {
      std::vector<Perm> out;
      for (auto& row : detail::table_field(j, key, n)) {
        if (static_cast<int>(row.size()) != n)
          throw ParseError(std::string("\"") + key + "\" rows must have length " +
                           std::to_string(n));
        for (int v : row)
          if (v < 0 || v >= n)
            throw ParseError(std::string("\"") + key + "\" entry out of range");
        out.emplace_back(std::move(row));  // throws on non-bijective rows
      }
      return out;
    };
    ParsedObject po{Solution::validate(fam("sigma"), fam("tau")), {}};
    if (j.contains("labels")) {
      for (const auto& v : j["labels"]) po.labels.push_back(v.get<int>());
      if (static_cast<int>(po.labels.size()) != n)
        throw ParseError("\"labels\" must list one label per point");
    }
    return po;
  }
  throw ParseError("document is neither a brace nor a solution");
}

inline json table_json(const std::vector<int>& flat, int n)
{
  json rows = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(flat[a * n + b]);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json brace_json(const SkewBrace& B)
{
  json j;
  j["order"] = B.order();
  j["add"] = table_json(B.add_table(), B.order());
  j["mul"] = table_json(B.mul_table(), B.order());
  return j;
}

inline json extended_json(const ExtendedBrace& E)
{
  json j = brace_json(E.finite_part());
  j["free_rank"] = E.free_rank();
  return j;
}

inline json solution_json(const Solution& S,
                          const std::vector<int>& labels = {})
{
  json j;
  j["size"] = S.size();
  json sig = json::array(), tau = json::array();
  for (int x = 0; x < S.size(); ++x) {
    sig.push_back(S.sigma(x).images());
    tau.push_back(S.tau(x).images());
  }
  j["sigma"] = std::move(sig);
  j["tau"] = std::move(tau);
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

inline json object_json(const ParsedObject& po)
{
  if (po.is_brace()) return brace_json(std::get<SkewBrace>(po.value));
  if (po.is_extended()) return extended_json(std::get<ExtendedBrace>(po.value));
  return solution_json(std::get<Solution>(po.value), po.labels);
}

inline std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace braceforge
