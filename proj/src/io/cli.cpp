// Copyright 2026 The Criticality Metrics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "criticality/io/cli.hpp"

#include "criticality/io/report.hpp"
#include "criticality/io/run_config.hpp"
#include "criticality/io/scenario_io.hpp"
#include "criticality/scen_gen/generator.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <set>

namespace criticality::io
{

namespace
{

using strategies::MetricKind;

// Rows of the single-metric table, in display order.
constexpr MetricKind kTableKinds[] = {
  MetricKind::kTtc, MetricKind::kMttc,   MetricKind::kTtb,    MetricKind::kTta,     MetricKind::kCif,
  MetricKind::kLsm, MetricKind::kRss,    MetricKind::kSacred, MetricKind::kSureVal,
};

struct EvalOptions
{
  std::vector<std::string> inputs;
  std::string config;
  std::string mode;
  std::string fr_mode;
  std::string format;
  std::string out;
  std::string plot_data;
};

void add_eval_options(CLI::App * sub, EvalOptions & o)
{
  sub->add_option("--in", o.inputs, "Scenario files or directories");
  sub->add_option("--config", o.config, "Run configuration (JSON)")->check(CLI::ExistingFile);
  sub->add_option("--mode", o.mode, "unidirectional | bidirectional");
  sub->add_option("--fr-mode", o.fr_mode, "per_scenario_mean | pooled");
  sub->add_option("--format", o.format, "csv | json | markdown");
  sub->add_option("--out", o.out, "Report file (default: stdout)");
  sub->add_option("--emit-plot-data", o.plot_data, "Write per-scenario series as CSV");
}

RunConfig resolve(const EvalOptions & o)
{
  RunConfig cfg = o.config.empty() ? RunConfig{} : load_run_config(o.config);
  if (!o.inputs.empty()) cfg.inputs = o.inputs;
  if (!o.mode.empty()) {
    if (o.mode == "unidirectional") {
      cfg.mode = strategies::RatingMode::kUnidirectional;
    } else if (o.mode == "bidirectional") {
      cfg.mode = strategies::RatingMode::kBidirectional;
    } else {
      throw strategies::ConfigurationError("--mode: unknown value '" + o.mode + "'");
    }
  }
  if (!o.fr_mode.empty()) cfg.fr_mode = evaluation::fr_mode_from_string(o.fr_mode);
  if (!o.format.empty()) cfg.format = report_format_from_string(o.format);
  if (!o.out.empty()) cfg.output = o.out;
  if (cfg.inputs.empty()) throw strategies::ConfigurationError("no input given (--in or config \"inputs\")");
  return cfg;
}

std::vector<Scenario> load_corpus(const RunConfig & cfg)
{
  std::vector<Scenario> all;
  std::set<std::string> ids;
  for (const auto & in : cfg.inputs) {
    for (auto & s : load_scenarios(in)) {
      if (!ids.insert(s.scenario_id).second) {
        throw LoadError(in + ": scenario '" + s.scenario_id + "' appears in more than one input");
      }
      all.push_back(std::move(s));
    }
  }
  if (all.empty()) throw LoadError("no scenario files found in the given inputs");
  return all;
}

void write_text(const std::string & path, const std::string & text)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) throw LoadError(path + ": cannot write file");
  f << text;
}

void finish(
  const RunConfig & cfg, const EvalOptions & o, const std::vector<evaluation::EvaluationReport> & reports,
  std::ostream & out, std::ostream & err)
{
  std::set<std::string> warned;
  for (const auto & r : reports) {
    for (const auto & s : r.skipped) {
      if (warned.insert(s.scenario_id).second) err << "warning: skipped " << s.reason << '\n';
    }
  }
  const std::string doc = emit_report(reports, cfg.format, run_config_to_json(cfg));
  if (cfg.output) {
    write_text(*cfg.output, doc);
  } else {
    out << doc;
  }
  if (!o.plot_data.empty()) write_text(o.plot_data, emit_plot_data(reports));
}

// "ttc", "ttc@2.0" or "RSS@0.5".
MetricSelection parse_selection(const std::string & text)
{
  MetricSelection sel;
  const auto at = text.find('@');
  sel.kind = strategies::metric_kind_from_string(text.substr(0, at));
  if (at != std::string::npos) {
    const std::string t = text.substr(at + 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw strategies::ConfigurationError("metric '" + text + "': bad threshold");
    }
    if (!strategies::has_threshold(sel.kind)) {
      throw strategies::ConfigurationError("metric '" + text + "': takes no threshold");
    }
    sel.threshold = v;
  }
  return sel;
}

std::vector<strategies::MetricInstance> instances_for(const RunConfig & cfg)
{
  std::vector<strategies::MetricInstance> out;
  for (const auto & m : cfg.metrics) out.push_back(strategies::make_instance(m.kind, cfg.defaults, m.threshold));
  return out;
}

std::vector<strategies::MetricInstance> table_instances(const RunConfig & cfg)
{
  std::vector<strategies::MetricInstance> out;
  for (auto kind : kTableKinds) {
    if (strategies::has_threshold(kind)) {
      for (double t : cfg.grid_for(kind)) out.push_back(strategies::make_instance(kind, cfg.defaults, t));
    } else {
      out.push_back(strategies::make_instance(kind, cfg.defaults));
    }
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Criticality metric evaluation harness", "crit"};
  app.require_subcommand(1);

  // generate
  auto * gen = app.add_subcommand("generate", "Write a synthetic scenario corpus");
  std::vector<std::string> kinds;
  std::size_t count = 159;
  std::uint64_t seed = 0;
  double ego_speed = 0, other_speed = 0, gap = 0, duration = 0, frame_period = 0;
  double other_decel = 0, lateral_speed = 0;
  double jitter_ego = 0, jitter_other = 0, jitter_gap = 0;
  bool ego_leads = false;
  bool jsonl = false;
  std::string gen_out;
  gen->add_option("--kind", kinds, "Template kinds (default: every collision kind)");
  gen->add_option("--count", count, "Number of scenarios")->capture_default_str();
  gen->add_option("--seed", seed, "Corpus seed")->capture_default_str();
  auto * o_ego = gen->add_option("--ego-speed", ego_speed, "Ego speed, m/s");
  auto * o_other = gen->add_option("--other-speed", other_speed, "Other speed, m/s");
  auto * o_gap = gen->add_option("--gap", gap, "Initial gap, m");
  auto * o_dur = gen->add_option("--duration", duration, "Scenario duration, s");
  auto * o_period = gen->add_option("--frame-period", frame_period, "Frame period, s");
  auto * o_decel = gen->add_option("--other-decel", other_decel, "Lead deceleration, m/s^2");
  auto * o_lat = gen->add_option("--lateral-speed", lateral_speed, "Lateral speed, m/s");
  gen->add_option("--jitter-ego-speed", jitter_ego, "Uniform +/- jitter on the ego speed");
  gen->add_option("--jitter-other-speed", jitter_other, "Uniform +/- jitter on the other speed");
  gen->add_option("--jitter-gap", jitter_gap, "Uniform +/- jitter on the initial gap");
  gen->add_flag("--ego-leads", ego_leads, "Rear-end kinds: the other runs into the ego");
  gen->add_flag("--jsonl", jsonl, "Write one .jsonl file instead of a directory");
  gen->add_option("--out", gen_out, "Output directory (or file with --jsonl)")->required();

  // evaluate
  auto * eval = app.add_subcommand("evaluate", "Evaluate metrics on a corpus");
  EvalOptions eval_opt;
  std::vector<std::string> eval_metrics;
  double eval_threshold = 0.0;
  bool aggregate = false;
  add_eval_options(eval, eval_opt);
  eval->add_option("--metric", eval_metrics, "Metric kind, optionally kind@threshold (repeatable)");
  auto * o_threshold = eval->add_option("--threshold", eval_threshold, "Threshold of a single --metric");
  eval->add_flag("--aggregate", aggregate, "OR all selected metrics into one rule");

  // sweep
  auto * sweep = app.add_subcommand("sweep", "Evaluate a metric over its threshold grid");
  EvalOptions sweep_opt;
  std::string sweep_metric;
  std::vector<double> grid;
  add_eval_options(sweep, sweep_opt);
  sweep->add_option("--metric", sweep_metric, "Metric kind or 'all'")->required();
  sweep->add_option("--grid", grid, "Thresholds (overrides the default grid)")->delimiter(',');

  // combos
  auto * combos = app.add_subcommand("combos", "Time+distance aggregates");
  EvalOptions combos_opt;
  add_eval_options(combos, combos_opt);

  // bidir
  auto * bidir = app.add_subcommand("bidir", "Unidirectional vs bidirectional rating");
  EvalOptions bidir_opt;
  std::vector<std::string> bidir_metrics;
  add_eval_options(bidir, bidir_opt);
  bidir->add_option("--metric", bidir_metrics, "Metric kind or kind@threshold (default: full grid)");

  // validate
  auto * val = app.add_subcommand("validate", "Check scenario files against the schema");
  std::vector<std::string> val_inputs;
  val->add_option("--in", val_inputs, "Scenario files or directories")->required();

  // import-csv
  auto * imp = app.add_subcommand("import-csv", "Convert a per-frame CSV table into a scenario file");
  CsvImportOptions csv_opt;
  std::string csv_in;
  std::string csv_out;
  double csv_collision = 0.0;
  double csv_speed_limit = 0.0;
  imp->add_option("--in", csv_in, "CSV file")->required()->check(CLI::ExistingFile);
  imp->add_option("--out", csv_out, "Scenario JSON file")->required();
  imp->add_option("--ego", csv_opt.ego_id, "Ego object id")->required();
  imp->add_option("--collider", csv_opt.collider_id, "Collider object id")->required();
  imp->add_option("--scenario-id", csv_opt.scenario_id, "Scenario id (default: file stem)");
  auto * o_coll = imp->add_option("--collision-time", csv_collision, "Collision time, s");
  imp->add_option("--frame-period", csv_opt.frame_period, "Frame period, s")->capture_default_str();
  auto * o_limit = imp->add_option("--speed-limit", csv_speed_limit, "Speed limit, m/s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) {
      std::vector<scen_gen::ScenarioTemplate> templates;
      std::vector<scen_gen::TemplateKind> selected;
      for (const auto & k : kinds) selected.push_back(scen_gen::template_kind_from_string(k));
      if (selected.empty()) {
        selected = {
          scen_gen::TemplateKind::kHeadOn,       scen_gen::TemplateKind::kRearEndConstSpeed,
          scen_gen::TemplateKind::kRearEndLeadBraking, scen_gen::TemplateKind::kCrossing,
          scen_gen::TemplateKind::kMerging,      scen_gen::TemplateKind::kLateralDrift,
        };
      }
      for (auto kind : selected) {
        auto t = scen_gen::default_template(kind);
        if (o_ego->count()) t.ego_speed = ego_speed;
        if (o_other->count()) t.other_speed = other_speed;
        if (o_gap->count()) t.initial_gap = gap;
        if (o_dur->count()) t.duration = duration;
        if (o_period->count()) t.frame_period = frame_period;
        if (o_decel->count()) t.other_decel = other_decel;
        if (o_lat->count()) t.lateral_speed = lateral_speed;
        t.ego_leads = ego_leads;
        templates.push_back(t);
      }
      const scen_gen::Jitter jitter{{-jitter_ego, jitter_ego}, {-jitter_other, jitter_other}, {-jitter_gap, jitter_gap}};
      const auto corpus = scen_gen::generate_corpus(templates, jitter, seed, count);
      if (jsonl) {
        write_scenarios_jsonl(gen_out, corpus);
      } else {
        write_scenarios(gen_out, corpus);
      }
      out << "wrote " << corpus.size() << " scenarios to " << gen_out << '\n';
      return 0;
    }

    if (*eval) {
      RunConfig cfg = resolve(eval_opt);
      if (!eval_metrics.empty()) {
        cfg.metrics.clear();
        for (const auto & m : eval_metrics) cfg.metrics.push_back(parse_selection(m));
      }
      if (o_threshold->count()) {
        if (cfg.metrics.size() != 1) {
          throw strategies::ConfigurationError("--threshold needs exactly one --metric");
        }
        if (!strategies::has_threshold(cfg.metrics.front().kind)) {
          throw strategies::ConfigurationError(
            "--threshold: " + std::string(strategies::display_name(cfg.metrics.front().kind)) +
            " takes no threshold");
        }
        cfg.metrics.front().threshold = eval_threshold;
      }
      if (cfg.metrics.empty()) throw strategies::ConfigurationError("no metric selected (--metric or config)");

      const auto corpus = load_corpus(cfg);
      const auto instances = instances_for(cfg);
      std::vector<evaluation::EvaluationReport> reports;
      if (aggregate) {
        reports.push_back(evaluation::evaluate_corpus(
          corpus, strategies::aggregate_rule(instances), cfg.mode, cfg.fr_mode));
      } else {
        for (const auto & m : instances) {
          reports.push_back(evaluation::evaluate_corpus(corpus, m, cfg.mode, cfg.fr_mode));
        }
      }
      finish(cfg, eval_opt, reports, out, err);
      return 0;
    }

    if (*sweep) {
      RunConfig cfg = resolve(sweep_opt);
      std::vector<MetricKind> sweep_kinds;
      if (sweep_metric == "all") {
        if (!grid.empty()) throw strategies::ConfigurationError("--grid needs a single --metric");
        sweep_kinds.assign(std::begin(kTableKinds), std::end(kTableKinds));
      } else {
        const auto kind = strategies::metric_kind_from_string(sweep_metric);
        if (!grid.empty()) {
          if (!strategies::has_threshold(kind)) {
            throw strategies::ConfigurationError("--grid: " + sweep_metric + " takes no threshold");
          }
          cfg.sweep_grids[kind] = grid;
        }
        sweep_kinds.push_back(kind);
      }
      cfg.metrics.clear();
      for (auto kind : sweep_kinds) cfg.metrics.push_back({kind, std::nullopt});

      const auto corpus = load_corpus(cfg);
      std::vector<evaluation::EvaluationReport> reports;
      for (auto kind : sweep_kinds) {
        auto part = evaluation::threshold_sweep(
          corpus, kind, cfg.grid_for(kind), cfg.defaults, cfg.mode, cfg.fr_mode);
        reports.insert(reports.end(), part.begin(), part.end());
      }
      finish(cfg, sweep_opt, reports, out, err);
      return 0;
    }

    if (*combos) {
      RunConfig cfg = resolve(combos_opt);
      const auto corpus = load_corpus(cfg);
      std::vector<evaluation::EvaluationReport> reports;
      for (const auto & rule : strategies::time_distance_combinations(cfg.defaults)) {
        reports.push_back(evaluation::evaluate_corpus(corpus, rule, cfg.mode, cfg.fr_mode));
      }
      finish(cfg, combos_opt, reports, out, err);
      return 0;
    }

    if (*bidir) {
      RunConfig cfg = resolve(bidir_opt);
      if (!bidir_metrics.empty()) {
        cfg.metrics.clear();
        for (const auto & m : bidir_metrics) cfg.metrics.push_back(parse_selection(m));
      }
      const auto instances = cfg.metrics.empty() ? table_instances(cfg) : instances_for(cfg);
      const auto corpus = load_corpus(cfg);
      std::vector<evaluation::EvaluationReport> reports;
      for (const auto & m : instances) {
        for (auto mode : {strategies::RatingMode::kUnidirectional, strategies::RatingMode::kBidirectional}) {
          reports.push_back(evaluation::evaluate_corpus(corpus, m, mode, cfg.fr_mode));
        }
      }
      finish(cfg, bidir_opt, reports, out, err);
      return 0;
    }

    if (*val) {
      std::size_t n = 0;
      for (const auto & in : val_inputs) n += load_scenarios(in).size();
      out << n << " scenarios valid\n";
      return 0;
    }

    if (*imp) {
      if (o_coll->count()) csv_opt.collision_time = csv_collision;
      if (o_limit->count()) csv_opt.speed_limit = csv_speed_limit;
      const Scenario s = import_csv(csv_in, csv_opt);
      write_text(csv_out, scenario_to_json(s, true) + "\n");
      out << "wrote scenario '" << s.scenario_id << "' (" << s.frames.size() << " frames) to " << csv_out << '\n';
      return 0;
    }
  } catch (const std::exception & e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace criticality::io
