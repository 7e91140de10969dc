#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "suites.hpp"

namespace mot2::cli {

namespace {

Json header(const std::string& command, const RunConfig& config, const FiniteGroup& g, const Field& f) {
  return Json{{"schema", kSchemaVersion}, {"command", command}, {"group", to_json(g)}, {"field", to_json(f)},
              {"seed", config.seed}};
}

std::string fixed(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  return buf;
}

}  // namespace

CommandOutput cmd_blocks(const RunConfig& config) {
  const FiniteGroup g = resolve_group(config);
  const Field f = resolve_field(config);
  const Comparison cmp = comparison_homomorphism(g, f);
  const MotivicDecompositionReport r = motivic_decomposition_report(g, f);
  const auto& xa = cmp.crossed.algebra;
  const auto& za = cmp.center.algebra;

  CommandOutput out;
  out.report = header("blocks", config, g, f);
  out.report["crossed_dimension"] = r.crossed_dimension;
  out.report["center_dimension"] = r.center_dimension;
  out.report["crossed_labels"] = xa.labels();
  out.report["center_labels"] = za.labels();
  out.report["rho"] = to_json(cmp.rho.matrix());
  Json motives = Json::array();
  for (const auto& e : r.general_motives) motives.push_back(Json{{"coordinates", to_json(e)}, {"image", to_json(cmp.rho(e))}});
  out.report["crossed_idempotents"] = motives;
  out.report["vanishing"] = r.vanishing;
  Json blocks = Json::array();
  for (const auto& b : r.blocks)
    blocks.push_back(Json{{"idempotent", to_json(b.idempotent)},
                          {"idempotent_text", za.format(b.idempotent)},
                          {"lift", to_json(b.lift)},
                          {"lift_text", xa.format(b.lift)},
                          {"crossed_idempotents", b.general}});
  out.report["blocks"] = blocks;
  Json splittings = Json::array();
  for (const auto& s : r.splittings)
    splittings.push_back(Json{{"source_order", s.source.order()}, {"target_order", s.target.order()},
                              {"hom_dimension", s.hom_dimension}, {"pieces", s.pieces},
                              {"orthogonal", s.orthogonal}, {"two_sided", s.two_sided}, {"complete", s.complete}});
  out.report["hom_splittings"] = splittings;
  out.report["burnside_images_trivial"] = r.burnside_images_trivial;
  out.report["ok"] = r.ok;
  out.exit_code = r.ok ? 0 : 1;

  std::ostringstream s;
  s << g.name() << " over " << f.to_string() << ": " << r.blocks.size() << " block" << (r.blocks.size() == 1 ? "" : "s")
    << ", " << r.general_motives.size() << " primitive idempotent" << (r.general_motives.size() == 1 ? "" : "s")
    << " of the crossed Burnside algebra ("
    << r.vanishing.size() << " with zero image)\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    s << "  block " << i << ": " << za.format(r.blocks[i].idempotent) << "\n    lift: " << xa.format(r.blocks[i].lift)
      << "\n";
  s << (r.ok ? "all invariants hold\n" : "INVARIANT FAILURE\n");
  out.summary = s.str();
  return out;
}

CommandOutput cmd_verify(const RunConfig& config) {
  const auto suites = resolve_suites(config.suites);
  const FiniteGroup g = resolve_group(config);
  const Field f = resolve_field(config);
  SuiteContext context{g, f, config.seed, config.samples};

  CommandOutput out;
  out.report = header("verify", config, g, f);
  out.report["samples"] = config.samples;
  Json suite_reports = Json::array();
  std::ostringstream s;
  bool all = true;
  for (const auto& name : suites) {
    SuiteResult r = run_suite(name, context);
    Json checks = Json::array();
    std::size_t passed = 0;
    for (const auto& c : r.checks) {
      passed += c.passed;
      Json entry{{"name", c.name}, {"passed", c.passed}};
      if (c.skipped) entry["skipped"] = true;
      entry["detail"] = c.detail;
      checks.push_back(entry);
    }
    Json entry{{"suite", name}, {"passed", r.passed()}, {"checks", checks}};
    if (config.timings) entry["seconds"] = r.seconds;
    suite_reports.push_back(entry);
    all = all && r.passed();
    s << (r.passed() ? "PASS " : "FAIL ") << name << "  " << passed << "/" << r.checks.size() << " checks";
    if (r.skipped() > 0) s << ", " << r.skipped() << " skipped (size bound)";
    s << "  (" << fixed(r.seconds) << " s)\n";
    for (const auto& c : r.checks)
      if (!c.passed && !c.skipped) s << "     failed: " << c.name << "\n";
  }
  out.report["suites"] = suite_reports;
  out.report["passed"] = all;
  out.exit_code = all ? 0 : 1;
  out.summary = s.str();
  return out;
}

CommandOutput cmd_export(const RunConfig& config, const std::string& kind) {
  if (std::find(kExportKinds.begin(), kExportKinds.end(), kind) == kExportKinds.end())
    throw std::invalid_argument("unknown export kind '" + kind + "'");
  const FiniteGroup g = resolve_group(config);
  CommandOutput out;
  if (kind == "group") {
    out.report = Json{{"schema", kSchemaVersion}, {"kind", kind}, {"group", to_json(g)}};
    out.summary = format_group_definition(g) + "\n";
    return out;
  }
  const Field f = resolve_field(config);
  out.report = Json{{"schema", kSchemaVersion}, {"kind", kind}, {"group", g.name()}, {"field", to_json(f)}};
  if (kind == "xburnside") {
    auto x = crossed_burnside(g, f);
    out.report["algebra"] = to_json(x.algebra);
    out.summary = "crossed Burnside algebra of dimension " + std::to_string(x.algebra.dimension()) + "\n";
  } else if (kind == "center") {
    auto z = center_group_algebra(g, f);
    out.report["algebra"] = to_json(z.algebra);
    out.summary = "center of the group algebra, dimension " + std::to_string(z.algebra.dimension()) + "\n";
  } else if (kind == "burnside") {
    auto b = burnside_subring(crossed_burnside(g, f));
    out.report["algebra"] = to_json(b.algebra);
    out.report["embedding"] = b.embedding;
    out.summary = "Burnside algebra of dimension " + std::to_string(b.algebra.dimension()) + "\n";
  } else if (kind == "rho") {
    auto cmp = comparison_homomorphism(g, f);
    out.report["rho"] = to_json(cmp.rho);
    out.summary = "comparison matrix " + std::to_string(cmp.rho.matrix().rows()) + "x" +
                  std::to_string(cmp.rho.matrix().cols()) + "\n";
  } else {
    auto reps = conjugacy_classes_of_subgroups(g);
    if (config.from >= reps.size() || config.to >= reps.size())
      throw std::invalid_argument("subgroup class position out of range (0.." + std::to_string(reps.size() - 1) + ")");
    auto model = CosetModel::left_sets(g);
    auto t = hom_decategorify(GSet::cosets(model, reps[config.from]), GSet::cosets(model, reps[config.to]), f);
    out.report["source"] = to_json(reps[config.from]);
    out.report["target"] = to_json(reps[config.to]);
    out.report["table"] = to_json(t);
    out.summary = "Mackey functor table on " + std::to_string(t.subgroups.size()) + " subgroups\n";
  }
  return out;
}

}  // namespace mot2::cli
