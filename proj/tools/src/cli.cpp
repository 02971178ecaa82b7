#include "mckay/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>

#include "mckay/chartab.hpp"
#include "mckay/correspondence.hpp"
#include "mckay/global.hpp"
#include "mckay/orbifold.hpp"
#include "mckay/serialize.hpp"

#ifndef MCKAY_VERSION
#define MCKAY_VERSION "unknown"
#endif

namespace mckay::cli {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double since_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Settings {
  std::uint64_t seed = 0x5eedULL;
  std::string out_path;
};

class Emitter {
 public:
  Emitter(const Settings& settings, std::ostream& out) : settings_(settings), out_(out) {}

  void text(const std::string& body) const {
    if (settings_.out_path.empty()) {
      out_ << body;
      return;
    }
    std::ofstream f(settings_.out_path);
    if (!f) throw InputError(settings_.out_path, "cannot write output file");
    f << body;
  }

  /// Wraps `result` in the versioned envelope; the manifest carries
  /// everything that may differ between otherwise identical runs.
  void report(const std::string& command, const json& inputs, json result, bool pass, const json& timings) const {
    json doc = {{"schema", 1},
                {"command", command},
                {"inputs", inputs},
                {"result", std::move(result)},
                {"pass", pass},
                {"manifest",
                 {{"seed", settings_.seed}, {"version", MCKAY_VERSION}, {"timings_ms", timings}}}};
    text(doc.dump(2) + "\n");
  }

 private:
  const Settings& settings_;
  std::ostream& out_;
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  if (!f) throw InputError(path, "cannot write file");
  f << body;
}

CharacterTableOptions table_options(const Settings& s) {
  CharacterTableOptions o;
  o.seed = s.seed;
  return o;
}

int group_info(const Emitter& emit, const std::string& spec, bool as_json) {
  const auto group = resolve_group(spec);
  const auto classes = conjugacy_structure(*group);
  const json summary = group_summary(*group, classes);
  if (as_json) {
    emit.report("group info", {{"group", spec}}, summary, true, json::object());
    return kPass;
  }
  std::string body = "group: " + group->name() + "\n";
  body += "order: " + std::to_string(group->order()) + "\n";
  body += "exponent: " + std::to_string(classes.exponent) + "\n";
  body += "classes: " + std::to_string(classes.size()) + "\n";
  body += "class sizes:";
  for (auto n : classes.class_sizes) body += " " + std::to_string(n);
  body += "\nclass element orders:";
  for (auto r : classes.representatives) body += " " + std::to_string(group->element_order(r));
  body += "\n";
  emit.text(body);
  return kPass;
}

int chartable(const Settings& s, const Emitter& emit, const std::string& spec) {
  const auto start = Clock::now();
  const auto table = character_table(resolve_group(spec), table_options(s));
  json result = to_json(table);
  result["prime"] = table.prime();
  const auto violation = orthogonality_violation(table);
  result["orthogonality"] = violation ? json(*violation) : json("verified");
  emit.report("chartable", {{"group", spec}}, result, !violation, {{"total", since_ms(start)}});
  return violation ? kVerificationFailed : kPass;
}

int mckay_cmd(const Settings& s, const Emitter& emit, const std::string& type, const std::string& format,
              const std::string& dot_path) {
  const AdeLabel label = AdeLabel::parse(type);
  const auto start = Clock::now();
  const auto table = character_table(std::make_shared<const FiniteGroup>(build_binary_polyhedral(label)),
                                     table_options(s));
  const McKayGraph graph = mckay_graph(table);
  const std::string dot = to_dot(graph, "mckay_" + label.to_string());
  if (!dot_path.empty()) write_file(dot_path, dot);
  const bool match = graph.diagram.affine == label;
  if (format == "dot") {
    emit.text(dot);
  } else {
    emit.report("mckay", {{"type", label.to_string()}}, to_json(graph), match, {{"total", since_ms(start)}});
  }
  return match ? kPass : kVerificationFailed;
}

json local_result(const LocalModel& model, const VerificationReport& report, bool dump_orbifold,
                  bool dump_resolution) {
  json result = report.to_json();
  if (dump_orbifold) {
    result["orbifold_structure"] = model.orbifold.structure_constants_json();
    result["invariant_structure"] =
        invariant_subalgebra(model.orbifold, *model.group, model.table->classes()).structure_constants_json();
  }
  if (dump_resolution) result["resolution_structure"] = model.resolution.structure_constants_json();
  return result;
}

int verify_local_cmd(const Settings& s, const Emitter& emit, const std::string& type, bool dump_orbifold,
                     bool dump_resolution, bool unscaled) {
  const AdeLabel label = AdeLabel::parse(type);
  const auto start = Clock::now();
  LocalModel model = build_local_model(label, table_options(s));
  if (unscaled) model.psi.materialize_unscaled();
  const VerificationReport report = verify_local(model);
  json timings = report.timings;
  timings["total"] = since_ms(start);
  emit.report("verify local", {{"type", label.to_string()}}, local_result(model, report, dump_orbifold, dump_resolution),
              report.pass(), timings);
  return report.pass() ? kPass : kVerificationFailed;
}

int verify_global_cmd(const Settings& s, const Emitter& emit, const std::string& config) {
  const SurfaceModel surface = parse_surface_file(config);
  const auto start = Clock::now();
  const VerificationReport report = verify_global(surface, table_options(s));
  json timings = report.timings;
  timings["total"] = since_ms(start);
  emit.report("verify global", {{"config", to_json(surface)}}, report.to_json(), report.pass(), timings);
  return report.pass() ? kPass : kVerificationFailed;
}

int minor_cmd(const Settings& s, const Emitter& emit, const std::string& spec) {
  const auto start = Clock::now();
  const auto table = character_table(resolve_group(spec), table_options(s));
  const CheckResult check = check_minor_determinant(table);
  json result = {{"group", group_summary(table.group(), table.classes())}, {"check", to_json(check)}};
  emit.report("minor", {{"group", spec}}, result, check.pass, {{"total", since_ms(start)}});
  return check.pass ? kPass : kVerificationFailed;
}

int corpus_cmd(const Settings& s, const Emitter& emit) {
  const auto start = Clock::now();
  const auto options = table_options(s);

  struct LocalOutcome {
    json result;
    json timings;
    bool pass;
  };
  std::vector<std::future<LocalOutcome>> local_jobs;
  for (const auto& label : standard_ade_corpus()) {
    local_jobs.push_back(std::async(std::launch::async, [label, options] {
      const auto t0 = Clock::now();
      const LocalModel model = build_local_model(label, options);
      const VerificationReport report = verify_local(model);
      json result = {{"type", label.to_string()}, {"report", report.to_json()}, {"character_table", to_json(*model.table)}};
      json timings = report.timings;
      timings["total"] = since_ms(t0);
      return LocalOutcome{std::move(result), std::move(timings), report.pass()};
    }));
  }
  std::vector<std::future<LocalOutcome>> lemma_jobs;
  for (const auto& name : lemma_corpus_names()) {
    lemma_jobs.push_back(std::async(std::launch::async, [name, options] {
      const auto t0 = Clock::now();
      const auto table = character_table(std::make_shared<const FiniteGroup>(build_named_group(name)), options);
      const CheckResult check = check_minor_determinant(table);
      json result = {{"group", name}, {"check", to_json(check)}, {"character_table", to_json(table)}};
      return LocalOutcome{std::move(result), {{"total", since_ms(t0)}}, check.pass};
    }));
  }

  bool pass = true;
  json local = json::array(), lemma = json::array(), timings = json::object();
  for (auto& job : local_jobs) {
    LocalOutcome o = job.get();
    pass = pass && o.pass;
    timings[o.result["type"].get<std::string>()] = o.timings;
    local.push_back(std::move(o.result));
  }
  for (auto& job : lemma_jobs) {
    LocalOutcome o = job.get();
    pass = pass && o.pass;
    timings[o.result["group"].get<std::string>()] = o.timings;
    lemma.push_back(std::move(o.result));
  }
  timings["total"] = since_ms(start);
  emit.report("corpus", json::object(), {{"local", local}, {"lemma", lemma}}, pass, timings);
  return pass ? kPass : kVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for the multiplicative McKay correspondence on ADE surface singularities", "mckay"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  app.add_option("--seed", settings.seed, "Seed for the character-table eigenspace splitting")->capture_default_str();
  app.add_option("--out", settings.out_path, "Write the report to this file instead of standard output");

  auto* group = app.add_subcommand("group", "Inspect a finite group");
  group->require_subcommand(1);
  auto* group_info_cmd = group->add_subcommand("info", "Order, exponent and conjugacy classes");
  std::string group_spec;
  bool group_json = false;
  group_info_cmd->add_option("group", group_spec, "ADE label, named group or JSON group file")->required();
  group_info_cmd->add_flag("--json", group_json, "Emit a JSON report");

  auto* chartable_cmd = app.add_subcommand("chartable", "Exact character table of a group");
  std::string table_spec;
  chartable_cmd->add_option("group", table_spec, "ADE label, named group or JSON group file")->required();

  auto* mckay_sub = app.add_subcommand("mckay", "McKay graph of an ADE group");
  std::string mckay_type, mckay_format = "json", dot_path;
  mckay_sub->add_option("--type", mckay_type, "ADE label")->required();
  mckay_sub->add_option("--format", mckay_format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  mckay_sub->add_option("--dot", dot_path, "Also write the Graphviz DOT text to this file");

  auto* verify = app.add_subcommand("verify", "Verify the correspondence");
  verify->require_subcommand(1);
  auto* verify_local_sub = verify->add_subcommand("local", "Verify at a single singular point");
  std::string local_type;
  bool dump_orbifold = false, dump_resolution = false, unscaled = false;
  verify_local_sub->add_option("--type", local_type, "ADE label")->required();
  verify_local_sub->add_flag("--dump-orbifold", dump_orbifold, "Include orbifold structure constants");
  verify_local_sub->add_flag("--dump-resolution", dump_resolution, "Include resolution structure constants");
  verify_local_sub->add_flag("--unscaled", unscaled, "Include the unscaled correspondence matrix");
  auto* verify_global_sub = verify->add_subcommand("global", "Verify on a synthetic surface model");
  std::string config;
  verify_global_sub->add_option("--config", config, "Surface model JSON file")->required();

  auto* minor_sub = app.add_subcommand("minor", "Character-table minor determinant of any finite group");
  std::string minor_spec;
  minor_sub->add_option("--group", minor_spec, "ADE label, named group or JSON group file")->required();

  auto* corpus_sub = app.add_subcommand("corpus", "Verify every ADE type and the extra character-table corpus");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  const Emitter emit(settings, out);
  try {
    if (*group_info_cmd) return group_info(emit, group_spec, group_json);
    if (*chartable_cmd) return chartable(settings, emit, table_spec);
    if (*mckay_sub) return mckay_cmd(settings, emit, mckay_type, mckay_format, dot_path);
    if (*verify_local_sub) {
      return verify_local_cmd(settings, emit, local_type, dump_orbifold, dump_resolution, unscaled);
    }
    if (*verify_global_sub) return verify_global_cmd(settings, emit, config);
    if (*minor_sub) return minor_cmd(settings, emit, minor_spec);
    if (*corpus_sub) return corpus_cmd(settings, emit);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace mckay::cli
