#include "vop/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include "vop/catalog.hpp"
#include "vop/report.hpp"

namespace vop {
namespace cli {

namespace {

using report::json;

constexpr int kExitPass = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void emit_error(const std::string& code, const std::string& message) {
  json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  std::cerr << j.dump() << "\n";
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Spec: return kExitUsage;
    case ErrorKind::Verification: return kExitVerification;
    case ErrorKind::Internal: return kExitInternal;
  }
  return kExitInternal;
}

catalog::Params parse_params(const std::vector<std::string>& kvs) {
  catalog::Params out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--param expects key=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
  }
  return out;
}

FamilySpec load_spec(const RunConfig& cfg) {
  const bool have_catalog = !cfg.catalog_name.empty();
  const bool have_file = !cfg.spec_file.empty();
  if (have_catalog == have_file)
    throw UsageError("exactly one of --catalog and --spec is required");
  FamilySpec spec;
  int cap = -1;
  if (have_catalog) {
    const catalog::Preset& preset = catalog::find(cfg.catalog_name);
    const catalog::Params params =
        catalog::resolve_params(preset, parse_params(cfg.param_overrides));
    spec = preset.build(params);
    spec.max_n = preset.default_max_n;
    cap = catalog::resolved_cap(preset, params);
  } else {
    if (!cfg.param_overrides.empty())
      throw UsageError("--param applies only to catalog specs");
    std::ifstream in(cfg.spec_file);
    if (!in) throw UsageError("cannot open spec file '" + cfg.spec_file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw InvalidSpec("spec file is not valid JSON: " + std::string(e.what()));
    }
    spec = report::spec_from_json(j);
  }
  if (cfg.max_n) spec.max_n = *cfg.max_n;
  if (cap >= 0 && spec.max_n > cap) spec.max_n = cap;
  spec.validate();
  return spec;
}

void write_output(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write to '" + cfg.out_path + "'");
  out << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_generate(const RunConfig& cfg) {
  const FamilySpec spec = load_spec(cfg);
  Family fam;
  try {
    fam = generate(spec, cfg.jobs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Spec) throw;
    emit_error(e.code(), e.what());
    return kExitInternal;  // generation failure
  }
  if (cfg.format != "json") throw UsageError("generate supports --format json");
  write_output(cfg, dump(report::family_to_json(fam)));
  return kExitPass;
}

struct CheckLine {
  std::string name;
  bool ran = false;
  bool passed = true;
  std::string detail;
};

int cmd_verify(const RunConfig& cfg) {
  const FamilySpec spec = load_spec(cfg);
  std::vector<std::string> selected;
  {
    std::stringstream ss(cfg.checks == "all"
                             ? "eigen,ladder,rodrigues,recurrence,bandwidth,closed-form,mellin"
                             : cfg.checks);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) selected.push_back(item);
  }
  const bool explicit_selection = cfg.checks != "all";
  const Family fam = generate(spec, cfg.jobs);
  std::vector<CheckLine> lines;
  RecurrenceForm form;
  bool have_form = false;
  auto ensure_form = [&]() {
    if (!have_form) {
      form = fit(extract(fam, cfg.jobs), cfg.holdout);
      have_form = true;
    }
  };

  for (const auto& name : selected) {
    CheckLine line;
    line.name = name;
    try {
      if (name == "eigen") {
        CheckResult r = check_eigen(fam, cfg.jobs);
        line.ran = true;
        line.passed = r.passed;
        line.detail = std::to_string(r.indices_checked) + " indices";
        if (!r.passed) line.detail += ", first failure n = " + std::to_string(*r.first_failure);
      } else if (name == "ladder") {
        LadderResult r = check_ladder(fam, cfg.jobs);
        line.ran = true;
        line.passed = r.lowering.passed && r.raising.passed;
        auto half = [](const char* tag, const CheckResult& cr) {
          std::string s = std::string(tag) + (cr.passed ? " ok" : " failed");
          if (!cr.passed) s += " at n = " + std::to_string(*cr.first_failure);
          return s;
        };
        line.detail = half("lowering", r.lowering) + ", " + half("raising", r.raising);
      } else if (name == "rodrigues") {
        CheckResult r = check_rodrigues(fam);
        line.ran = true;
        line.passed = r.passed;
        line.detail = std::to_string(r.indices_checked) + " indices";
        if (!r.passed) line.detail += ", first failure n = " + std::to_string(*r.first_failure);
      } else if (name == "recurrence") {
        ensure_form();
        line.ran = true;
        line.passed = true;
        line.detail = "fit holdout " + std::to_string(cfg.holdout) + " ok, d = " +
                      std::to_string(form.d_inferred);
      } else if (name == "bandwidth") {
        ensure_form();
        infer_d(form, fam.spec);
        const bool vi = van_iseghem_check(form, fam.max_n());
        line.ran = true;
        line.passed = vi;
        line.detail = vi ? "bound and nonvanishing hold"
                         : "gamma_d vanishes on the checked range";
      } else if (name == "closed-form") {
        if (spec.q != Poly{Rational(0), Rational(1)}) {
          if (explicit_selection)
            throw UsageError("closed-form check requires q(G) = G");
          line.detail = "skipped: requires q(G) = G";
        } else {
          RecurrenceTable table = extract(fam, cfg.jobs);
          bool ok = true;
          for (int n = 0; n < fam.max_n() && ok; ++n) {
            std::map<int, Rational> closed;
            for (const auto& [offset, value] : closed_form_qG(spec, n))
              closed[offset] = value;
            std::map<int, Rational> row;
            for (const auto& [key, value] : table.gamma)
              if (key.second == n) row[key.first] = value;
            ok = (row == closed);
          }
          line.ran = true;
          line.passed = ok;
          line.detail = ok ? "matches extraction at every index" : "mismatch against extraction";
        }
      } else if (name == "mellin") {
        if (spec.realization != FamilyRealization::Continuous) {
          if (explicit_selection)
            throw UsageError("mellin check requires a continuous spec");
          line.detail = "skipped: continuous specs only";
        } else {
          MellinCorrespondence corr = map_family(fam, cfg.jobs);
          line.ran = true;
          line.passed = true;
          line.detail = "all " + std::to_string(corr.matches.size()) + " indices correspond";
        }
      } else {
        throw UsageError("unknown check '" + name + "'");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Spec) throw;
      line.ran = true;
      line.passed = false;
      line.detail = e.what();
    }
    lines.push_back(std::move(line));
  }

  bool all_passed = true;
  for (const auto& line : lines)
    if (line.ran && !line.passed) all_passed = false;

  if (cfg.format == "json") {
    json j;
    j["spec"] = report::spec_to_json(spec);
    j["operators"]["L"] = report::operator_to_json(fam.L);
    json checks = json::array();
    for (const auto& line : lines) {
      json c;
      c["name"] = line.name;
      c["ran"] = line.ran;
      c["passed"] = line.ran ? json(line.passed) : json(nullptr);
      c["detail"] = line.detail;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["passed"] = all_passed;
    write_output(cfg, dump(j));
  } else if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& line : lines) {
      os << line.name << ": " << (line.ran ? (line.passed ? "pass" : "FAIL") : "skip");
      if (!line.detail.empty()) os << " (" << line.detail << ")";
      os << "\n";
    }
    write_output(cfg, os.str());
  } else {
    throw UsageError("verify supports --format json|text");
  }
  return all_passed ? kExitPass : kExitVerification;
}

int cmd_recurrence(const RunConfig& cfg) {
  const FamilySpec spec = load_spec(cfg);
  const Family fam = generate(spec, cfg.jobs);
  const RecurrenceTable table = extract(fam, cfg.jobs);
  if (cfg.format == "csv") {  // the raw table; no fit required
    write_output(cfg, report::recurrence_to_csv(table));
    return kExitPass;
  }
  const RecurrenceForm form = fit(table, cfg.holdout);
  if (cfg.format == "json") {
    json j;
    j["spec"] = report::spec_to_json(spec);
    json rec = report::recurrence_to_json(form);
    for (auto& [key, value] : rec.items()) j[key] = value;
    write_output(cfg, dump(j));
  } else if (cfg.format == "latex") {
    write_output(cfg, report::recurrence_to_latex(form));
  } else {
    throw UsageError("recurrence supports --format json|csv|latex");
  }
  return kExitPass;
}

int cmd_transform(const RunConfig& cfg) {
  const FamilySpec spec = load_spec(cfg);
  if (spec.realization != FamilyRealization::Continuous)
    throw UsageError("transform expects a continuous spec");
  const Family cont = generate(spec, cfg.jobs);
  if (cfg.format != "json") throw UsageError("transform supports --format json");
  try {
    const MellinCorrespondence corr = map_family(cont, cfg.jobs);
    write_output(cfg, dump(report::transform_to_json(cont, corr)));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Verification) throw;
    emit_error(e.code(), e.what());
    return kExitVerification;
  }
  return kExitPass;
}

int cmd_catalog(const RunConfig& cfg) {
  if (cfg.list_mode) {
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& preset : catalog::presets()) {
        json p;
        p["name"] = preset.name;
        p["realization"] = to_string(preset.realization);
        json params = json::array();
        for (const auto& ps : preset.params) {
          json q;
          q["name"] = ps.name;
          q["default"] = ps.default_value.str();
          q["note"] = ps.note;
          params.push_back(std::move(q));
        }
        p["params"] = std::move(params);
        p["summary"] = preset.summary;
        arr.push_back(std::move(p));
      }
      write_output(cfg, dump(arr));
    } else {
      std::ostringstream os;
      for (const auto& preset : catalog::presets()) {
        os << preset.name << " [" << to_string(preset.realization) << "]";
        if (!preset.params.empty()) {
          os << " (";
          for (size_t i = 0; i < preset.params.size(); ++i) {
            if (i) os << ", ";
            os << preset.params[i].name << "=" << preset.params[i].default_value.str();
          }
          os << ")";
        }
        os << "\n    " << preset.summary << "\n";
      }
      write_output(cfg, os.str());
    }
    return kExitPass;
  }
  const catalog::Preset& preset = catalog::find(cfg.show_name);
  const catalog::Params params =
      catalog::resolve_params(preset, parse_params(cfg.param_overrides));
  FamilySpec spec = preset.build(params);
  spec.max_n = preset.default_max_n;
  int cap = catalog::resolved_cap(preset, params);
  if (cap >= 0 && spec.max_n > cap) spec.max_n = cap;
  json j;
  j["preset"] = preset.name;
  j["summary"] = preset.summary;
  j["spec"] = report::spec_to_json(spec);
  write_output(cfg, dump(j));
  return kExitPass;
}

void add_source_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--catalog", cfg.catalog_name, "catalog preset name");
  sub->add_option("--param", cfg.param_overrides, "preset parameter override key=value");
  sub->add_option("--spec", cfg.spec_file, "spec JSON file");
  sub->add_option("--max-n", cfg.max_n, "override the top index N");
  sub->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
  sub->add_option("--jobs", cfg.jobs, "parallelism degree for per-index work")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"exact engine for eigenfamily polynomial systems with finite recurrences"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("generate", "generate a family and emit JSON");
  add_source_options(gen, cfg);
  gen->add_option("--format", cfg.format, "output format (json)");

  CLI::App* verify = app.add_subcommand("verify", "run identity checks against a family");
  add_source_options(verify, cfg);
  verify->add_option("--format", cfg.format, "output format (json|text)");
  verify->add_option("--checks", cfg.checks,
                     "comma list: eigen,ladder,rodrigues,recurrence,bandwidth,closed-form,mellin");
  verify->add_option("--holdout", cfg.holdout, "held-out samples for the fit check");

  CLI::App* rec = app.add_subcommand("recurrence", "extract and fit the recurrence");
  add_source_options(rec, cfg);
  rec->add_option("--format", cfg.format, "output format (json|csv|latex)");
  rec->add_option("--holdout", cfg.holdout, "held-out samples for the fit");

  CLI::App* trans = app.add_subcommand("transform",
                                       "map a continuous family to its discrete counterpart");
  add_source_options(trans, cfg);
  trans->add_option("--format", cfg.format, "output format (json)");

  CLI::App* cat = app.add_subcommand("catalog", "list or show presets");
  CLI::App* cat_list = cat->add_subcommand("list", "list presets");
  cat_list->add_option("--format", cfg.format, "output format (json|text)");
  CLI::App* cat_show = cat->add_subcommand("show", "show one preset");
  cat_show->add_option("name", cfg.show_name, "preset name")->required();
  cat_show->add_option("--param", cfg.param_overrides, "parameter override key=value");
  cat->require_subcommand(1);
  cat_list->callback([&] { cfg.list_mode = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // contextual help, exit 0
  } catch (const CLI::ParseError& e) {
    emit_error("UsageError", e.what());
    return kExitUsage;
  }

  try {
    if (gen->parsed()) { cfg.subcommand = "generate"; return cmd_generate(cfg); }
    if (verify->parsed()) { cfg.subcommand = "verify"; return cmd_verify(cfg); }
    if (rec->parsed()) { cfg.subcommand = "recurrence"; return cmd_recurrence(cfg); }
    if (trans->parsed()) { cfg.subcommand = "transform"; return cmd_transform(cfg); }
    if (cat->parsed()) { cfg.subcommand = "catalog"; return cmd_catalog(cfg); }
    emit_error("UsageError", "no subcommand given");
    return kExitUsage;
  } catch (const Error& e) {
    emit_error(e.code(), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return kExitInternal;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("vop");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace cli
}  // namespace vop
