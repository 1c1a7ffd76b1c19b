#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "braceforge/braceforge.hpp"

using namespace braceforge;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;
constexpr int kExitIo = 4;

int order_cap_from_env()
{
  if (const char* v = std::getenv("BRACEFORGE_ORDER_CAP")) {
    try {
      int cap = std::stoi(v);
      if (cap > 0) return cap;
    } catch (...) {
      // fall through to the default
    }
    fmt::print(stderr, "ignoring invalid BRACEFORGE_ORDER_CAP: {}\n", v);
  }
  return kDefaultOrderCap;
}

json load_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return json::parse(in);
}

ParsedObject load_object(const std::string& path)
{
  return parse_object(load_json(path));
}

const Solution& as_solution(const ParsedObject& po)
{
  if (!po.is_solution())
    throw ParseError("expected a solution document");
  return std::get<Solution>(po.value);
}

const SkewBrace& as_brace(const ParsedObject& po)
{
  if (po.is_brace()) return std::get<SkewBrace>(po.value);
  if (po.is_extended()) return std::get<ExtendedBrace>(po.value).finite_part();
  throw ParseError("expected a brace document");
}

int cmd_validate(const std::string& path)
{
  ParsedObject po = load_object(path);  // validation happens on parse
  if (po.is_brace())
    fmt::print("valid skew brace of order {}\n",
               std::get<SkewBrace>(po.value).order());
  else if (po.is_extended())
    fmt::print("valid extended skew brace ({} finite, free rank {})\n",
               std::get<ExtendedBrace>(po.value).finite_part().order(),
               std::get<ExtendedBrace>(po.value).free_rank());
  else
    fmt::print("valid non-degenerate solution of size {}\n",
               as_solution(po).size());
  return 0;
}

int cmd_analyze(const std::string& path, const std::string& report, int cap)
{
  ParsedObject po = load_object(path);
  json j = analyze(po, cap);
  if (report == "text")
    fmt::print("{}", analysis_text(j));
  else
    fmt::print("{}\n", canonical_dump(j));
  return 0;
}

int cmd_derive(const std::string& path)
{
  Solution d = derived_solution(as_solution(load_object(path)));
  fmt::print("{}\n", canonical_dump(solution_json(d)));
  return 0;
}

int cmd_decompose(const std::string& path)
{
  ParsedObject po = load_object(path);
  const Solution& s = as_solution(po);
  json j;
  if (auto dec = decompose(s)) {
    j["indecomposable"] = false;
    json orbs = json::array();
    for (const auto& o : dec->orbits) orbs.push_back(o);
    j["orbits"] = std::move(orbs);
    j["blocks"] = {dec->block_one, dec->block_two};
  } else {
    j["indecomposable"] = true;
  }
  fmt::print("{}\n", canonical_dump(j));
  return 0;
}

int cmd_from_brace(const std::string& path)
{
  Solution s = solution_from_brace(as_brace(load_object(path)));
  fmt::print("{}\n", canonical_dump(solution_json(s)));
  return 0;
}

int cmd_rb_order(const std::string& path)
{
  RbOrderReport rep = rb_order_check(as_brace(load_object(path)));
  json j = {{"ann_index", rep.ann_index},
            {"bound", rep.bound},
            {"bound_holds", rep.bound_holds},
            {"r_order", rep.r_order}};
  fmt::print("{}\n", canonical_dump(j));
  return 0;
}

int cmd_presentations(const std::string& path)
{
  fmt::print("{}", emit_presentations(as_solution(load_object(path))));
  return 0;
}

int cmd_enumerate(const std::string& kind, int order, bool allow_slow,
                  const std::string& emit, int jobs)
{
  if (kind == "braces") {
    auto forms = enumerate_braces(order, jobs);
    if (emit == "jsonl") {
      for (const CanonicalForm& cf : forms)
        fmt::print("{}\n", canonical_dump(brace_json(cf.to_brace())));
    } else {
      fmt::print("braces of order {}: {}\n", order, forms.size());
    }
  } else if (kind == "solutions") {
    auto sols = enumerate_solutions(order, allow_slow, jobs);
    if (emit == "jsonl") {
      for (const Solution& s : sols)
        fmt::print("{}\n", canonical_dump(solution_json(s)));
    } else {
      fmt::print("solutions of size {}: {}\n", order, sols.size());
    }
  } else {
    throw ParseError("unknown kind \"" + kind + "\"");
  }
  return 0;
}

int cmd_catalog(const std::string& sub, const std::string& name)
{
  if (sub == "list") {
    for (const Fixture& f : all_fixtures()) fmt::print("{}\n", f.name);
    return 0;
  }
  for (const Fixture& f : all_fixtures()) {
    if (f.name != name) continue;
    json j = std::holds_alternative<SkewBrace>(f.object)
                 ? brace_json(f.brace())
                 : solution_json(f.solution(), f.original_labels);
    fmt::print("{}\n", canonical_dump(j));
    return 0;
  }
  throw ParseError("unknown catalog object \"" + name + "\"");
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{
      "braceforge: finite skew braces and set-theoretic Yang-Baxter "
      "solutions"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker count for enumeration scans")
      ->capture_default_str();

  std::string path, report = "json", kind = "braces", emit, catalog_name;
  int order = 1;
  bool allow_slow = false;

  auto* validate = app.add_subcommand("validate", "validate a brace or solution file");
  validate->add_option("path", path)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full invariant report");
  analyze_cmd->add_option("path", path)->required();
  analyze_cmd->add_option("--report", report, "json|text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* derive = app.add_subcommand("derive", "derived solution of a solution");
  derive->add_option("path", path)->required();

  auto* decomp = app.add_subcommand("decompose", "orbit decomposition of a solution");
  decomp->add_option("path", path)->required();

  auto* fromb = app.add_subcommand("from-brace", "solution r_B attached to a brace");
  fromb->add_option("path", path)->required();

  auto* rbord = app.add_subcommand("rb-order", "order bound for r_B");
  rbord->add_option("path", path)->required();

  auto* pres = app.add_subcommand("presentations",
                                  "structure group presentations G(X,r), A(X,r)");
  pres->add_option("path", path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive small-order enumeration");
  enumerate->add_option("--order", order, "object order")->required();
  enumerate->add_option("--kind", kind, "braces|solutions")
      ->check(CLI::IsMember({"braces", "solutions"}))
      ->capture_default_str();
  enumerate->add_flag("--allow-slow", allow_slow, "enable size-4 solution runs");
  enumerate->add_option("--emit", emit, "jsonl: one canonical object per line")
      ->check(CLI::IsMember({"jsonl"}));

  auto* catalog = app.add_subcommand("catalog", "built-in worked examples");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "list catalog objects");
  auto* cat_emit = catalog->add_subcommand("emit", "write one catalog object");
  cat_emit->add_option("name", catalog_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (analyze_cmd->parsed())
      return cmd_analyze(path, report, order_cap_from_env());
    if (derive->parsed()) return cmd_derive(path);
    if (decomp->parsed()) return cmd_decompose(path);
    if (fromb->parsed()) return cmd_from_brace(path);
    if (rbord->parsed()) return cmd_rb_order(path);
    if (pres->parsed()) return cmd_presentations(path);
    if (enumerate->parsed())
      return cmd_enumerate(kind, order, allow_slow, emit, jobs);
    if (catalog->parsed())
      return cmd_catalog(cat_list->parsed() ? "list" : "emit", catalog_name);
  } catch (const CapError& e) {
    fmt::print(stderr, "{}\n", e.what());
    return kExitCap;
  } catch (const ValidationError& e) {
    fmt::print(stderr, "{}\n", e.what());
    return kExitValidation;
  } catch (const ParseError& e) {
    fmt::print(stderr, "{}\n", e.what());
    return kExitIo;
  } catch (const json::exception& e) {
    fmt::print(stderr, "ParseError: {}\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
