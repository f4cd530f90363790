#include "cli.h"

#include <glob.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cmcf/bnp.h"
#include "cmcf/errors.h"
#include "cmcf/flow_deviation.h"
#include "cmcf/greedy.h"
#include "cmcf/inner.h"
#include "cmcf/instance_json.h"
#include "cmcf/lp.h"
#include "cmcf/pattern.h"
#include "cmcf/scaling.h"
#include "cmcf/sndlib.h"
#include "json.hpp"

namespace cmcf::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

const std::vector<std::string> kSolvers = {"inner",      "tight-inner", "pattern",
                                           "bnp-tight",  "bnp-pattern", "greedy",
                                           "flowdev"};

struct Outcome {
  FlowSolution solution;
  double objective = 0.0;
  bool has_objective = false;
  double bound = 0.0;
  bool has_bound = false;
  std::string status = "ok";
  bool limit_hit = false;
  int bnb_nodes = 0;
  int columns = 0;
  Json stats = Json::object();        // deterministic
  Json timing = Json::object();       // wall-clock dependent
};

Json ColGenStatsJson(const ColGenStats& s) {
  Json j;
  j["iterations"] = s.iterations;
  j["lp_iterations"] = s.lp_iterations;
  j["path_columns"] = s.path_columns;
  j["arc_columns"] = s.arc_columns;
  j["farkas_rounds"] = s.farkas_rounds;
  j["grid_searches"] = s.grid_searches;
  j["max_dp_states"] = s.max_dp_states;
  j["bandwidth_scale"] = s.bandwidth_scale;
  j["bandwidth_rounded"] = s.bandwidth_rounded;
  j["bound_trajectory"] = s.bound_trajectory;
  return j;
}

std::optional<Clock::time_point> Deadline(const RunConfig& cfg, Clock::time_point start) {
  if (cfg.time_limit <= 0.0) return std::nullopt;
  return start + std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(cfg.time_limit));
}

Outcome RunSolver(const Instance& inst, const RunConfig& cfg) {
  const auto start = Clock::now();
  Outcome out;
  ColGenOptions colgen;
  colgen.price_tolerance = cfg.price_tolerance;
  colgen.deadline = Deadline(cfg, start);
  const std::string& s = cfg.solver;
  if (s == "inner" || s == "tight-inner" || s == "pattern") {
    std::unique_ptr<Relaxation> rel =
        s == "pattern" ? MakePatternRelaxation(inst)
                       : MakeInnerRelaxation(inst, s == "inner" ? InnerMode::kInner
                                                                : InnerMode::kTight);
    RelaxationResult r = rel->Solve(Restrictions(inst), colgen);
    out.solution = r.solution;
    out.columns = rel->num_columns();
    out.stats = ColGenStatsJson(r.stats);
    if (!r.feasible) {
      out.status = "infeasible";
    } else {
      out.bound = r.bound;
      out.has_bound = r.converged;
      out.objective = Objective(inst, r.solution);
      out.has_objective = true;
      if (!r.converged) {
        out.status = "time_limit";
        out.limit_hit = true;
      }
    }
  } else if (s == "bnp-tight" || s == "bnp-pattern") {
    BnpOptions opt;
    opt.relaxation = s == "bnp-tight" ? NodeRelaxation::kTight : NodeRelaxation::kPattern;
    opt.gap_target = cfg.gap;
    if (cfg.time_limit > 0.0) opt.time_limit = cfg.time_limit;
    opt.seed = cfg.seed;
    opt.greedy_starts = cfg.greedy_starts;
    opt.colgen = colgen;
    opt.colgen.deadline.reset();
    BnpResult r = BranchAndPrice(inst, opt);
    out.solution = r.incumbent;
    out.objective = r.incumbent_value;
    out.has_objective = r.has_incumbent;
    out.bound = r.lower_bound;
    out.has_bound = true;
    out.bnb_nodes = r.nodes;
    out.columns = r.columns;
    out.status = BnpStatusName(r.status);
    out.limit_hit = r.status != BnpStatus::kOptimal;
    Json j;
    j["nodes"] = r.nodes;
    j["columns"] = r.columns;
    j["root_bound"] = r.root_bound;
    j["root_integral"] = r.root_integral;
    j["greedy_value"] = r.greedy_value;
    j["lower_bound"] = r.lower_bound;
    j["gap_rel"] = GapRatio(r.incumbent_value, r.lower_bound);
    Json trace = Json::array();
    Json timed = Json::array();
    for (const TraceRecord& t : r.trace) {
      Json row;
      row["node"] = t.node;
      row["parent"] = t.parent;
      row["rule"] = t.rule;
      row["bound"] = std::isfinite(t.bound) ? Json(t.bound) : Json(nullptr);
      row["outcome"] = t.outcome;
      trace.push_back(row);
      row["seconds"] = t.seconds;
      timed.push_back(row);
    }
    j["trace"] = trace;
    out.stats = j;
    out.timing["trace"] = timed;
  } else if (s == "greedy") {
    GreedyResult g = MultiStartGreedy(inst, cfg.greedy_starts, cfg.seed);
    out.solution = g.solution;
    out.objective = g.objective;
    out.has_objective = true;
    out.stats["starts"] = cfg.greedy_starts;
    out.stats["seed"] = cfg.seed;
    out.stats["order"] = g.order;
  } else if (s == "flowdev") {
    FwState fw = RunFlowDeviation(inst);
    out.solution = fw.solution;
    out.objective = fw.objective;
    out.has_objective = true;
    out.bound = fw.objective - fw.gap;
    out.has_bound = true;
    if (!fw.converged) {
      out.status = "not_converged";
      out.limit_hit = true;
    }
    out.stats["iterations"] = fw.iterations;
    out.stats["gap"] = fw.gap;
    out.stats["converged"] = fw.converged;
    out.stats["capacities_ignored"] = true;
  } else {
    throw ConfigError("unknown solver '" + s + "'");
  }
  out.timing["time_s"] = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

Json SolutionJson(const Instance& inst, const std::string& instance_name,
                  const RunConfig& cfg, const Outcome& o) {
  const Network& net = inst.network();
  Json j;
  j["instance"] = instance_name;
  j["solver"] = cfg.solver;
  j["status"] = o.status;
  j["objective"] = o.has_objective ? Json(o.objective) : Json(nullptr);
  j["bound"] = o.has_bound && std::isfinite(o.bound) ? Json(o.bound) : Json(nullptr);
  Json commodities = Json::array();
  for (int k = 0; k < inst.num_commodities(); ++k) {
    const Commodity& c = inst.commodity(k);
    Json row;
    row["id"] = k;
    row["src"] = net.node_name(c.source);
    row["dst"] = net.node_name(c.target);
    row["bw"] = c.bandwidth;
    const CommodityFlow& f = o.solution.commodities.at(k);
    row["rejected"] = f.rejected;
    Json paths = Json::array();
    for (const PathFlow& p : f.paths) {
      Json pj;
      pj["arcs"] = p.arcs;
      pj["ratio"] = p.ratio;
      paths.push_back(pj);
    }
    row["paths"] = paths;
    commodities.push_back(row);
  }
  j["commodities"] = commodities;
  j["loads"] = o.solution.ArcLoads(inst);
  j["stats"] = o.stats;
  return j;
}

std::string Stem(const std::string& path) {
  std::string base = fs::path(path).filename().string();
  return base.substr(0, base.find('.'));
}

int Prepare(const std::string& in, const std::string& cost, const std::string& out_dir,
            std::ostream& out) {
  RawInstance raw = ReadSndlibFile(in);
  RawInstance sym = Symmetrize(raw);
  RawInstance merged = MergeCommodities(sym);
  Instance calibrated = Calibrate(merged, ParseCostKind(cost));
  auto [scaled, report] = ScaleToCongestion(calibrated);
  fs::create_directories(out_dir);
  const std::string name = Stem(in);
  WriteTextFile((fs::path(out_dir) / (name + ".json")).string(), InstanceToJson(scaled));
  Json rep;
  rep["instance"] = name;
  rep["cost"] = cost;
  rep["nodes"] = scaled.num_nodes();
  rep["declared_links"] = raw.declared_links;
  rep["arcs"] = scaled.num_arcs();
  rep["demands"] = static_cast<int>(raw.demands.size());
  rep["commodities"] = scaled.num_commodities();
  rep["tau"] = report.tau;
  rep["multiplier"] = report.multiplier;
  rep["tolerance"] = report.tolerance;
  Json steps = Json::array();
  for (const ScalingStep& s : report.steps) {
    steps.push_back({{"factor", s.factor}, {"feasible", s.feasible}, {"unaccepted", s.unaccepted}});
  }
  rep["steps"] = steps;
  WriteTextFile((fs::path(out_dir) / (name + ".report.json")).string(), rep.dump(2) + "\n");
  out << name << ": " << scaled.num_nodes() << " nodes, " << scaled.num_arcs() << " arcs, "
      << scaled.num_commodities() << " commodities, tau=" << report.tau << "\n";
  return kOk;
}

int Solve(const RunConfig& cfg, const std::string& out_dir, std::ostream& out) {
  Instance inst = ReadInstanceFile(cfg.instance_path);
  Outcome o = RunSolver(inst, cfg);
  fs::create_directories(out_dir);
  WriteTextFile((fs::path(out_dir) / "solution.json").string(),
                SolutionJson(inst, Stem(cfg.instance_path), cfg, o).dump(2) + "\n");
  Json timing = o.timing;
  timing["solver"] = cfg.solver;
  WriteTextFile((fs::path(out_dir) / "stats.json").string(), timing.dump(2) + "\n");
  out << cfg.solver << ": status=" << o.status;
  if (o.has_objective) out << " objective=" << o.objective;
  if (o.has_bound) out << " bound=" << o.bound;
  out << "\n";
  if (o.status == "infeasible") return kSolverFailure;
  return o.limit_hit ? kLimitReached : kOk;
}

std::vector<std::string> Glob(const std::string& pattern) {
  glob_t g{};
  std::vector<std::string> out;
  if (::glob(pattern.c_str(), 0, nullptr, &g) == 0) {
    for (size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
  }
  globfree(&g);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> SplitList(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int Bench(const std::string& pattern, const std::string& solvers, const RunConfig& base,
          const std::string& out_dir, int jobs, std::ostream& out) {
  std::vector<std::string> files = Glob(pattern);
  if (files.empty()) throw ConfigError("no instance matches '" + pattern + "'");
  std::vector<std::string> names = SplitList(solvers);
  for (const std::string& s : names) {
    if (std::find(kSolvers.begin(), kSolvers.end(), s) == kSolvers.end()) {
      throw ConfigError("unknown solver '" + s + "'");
    }
  }
  std::vector<std::pair<std::string, std::string>> tasks;
  for (const auto& f : files) {
    for (const auto& s : names) tasks.push_back({f, s});
  }
  std::vector<BenchRow> rows(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < tasks.size();) {
      BenchRow& row = rows[i];
      row.instance = Stem(tasks[i].first);
      row.solver = tasks[i].second;
      auto start = Clock::now();
      try {
        Instance inst = ReadInstanceFile(tasks[i].first);
        row.nodes = inst.num_nodes();
        row.arcs = inst.num_arcs();
        row.commodities = inst.num_commodities();
        RunConfig cfg = base;
        cfg.instance_path = tasks[i].first;
        cfg.solver = tasks[i].second;
        Outcome o = RunSolver(inst, cfg);
        row.bound = o.bound;
        row.has_bound = o.has_bound && std::isfinite(o.bound);
        bool relaxation_only = cfg.solver == "inner" || cfg.solver == "tight-inner" ||
                               cfg.solver == "pattern" || cfg.solver == "flowdev";
        row.incumbent = o.objective;
        row.has_incumbent = o.has_objective && !relaxation_only;
        if (row.has_bound && row.has_incumbent) {
          row.gap_rel = GapRatio(row.incumbent, row.bound);
          row.has_gap = true;
        }
        row.bnb_nodes = o.bnb_nodes;
        row.columns = o.columns;
        row.status = o.status;
      } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), ',', ';');
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        row.status = "error: " + msg;
      }
      row.time_s = std::chrono::duration<double>(Clock::now() - start).count();
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  fs::create_directories(out_dir);
  std::string csv = BenchHeader();
  for (const BenchRow& r : rows) csv += BenchCsvLine(r);
  WriteTextFile((fs::path(out_dir) / "bench.csv").string(), csv);
  WriteTextFile((fs::path(out_dir) / "profile.csv").string(),
                ProfileCsv(rows, static_cast<int>(files.size())));
  out << rows.size() << " runs written to " << out_dir << "\n";
  return kOk;
}

std::string Real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string BenchHeader() {
  return "instance,nodes,arcs,commodities,solver,bound,incumbent,gap_rel,time_s,bnb_nodes,"
         "columns,status\n";
}

std::string BenchCsvLine(const BenchRow& r) {
  std::string line = r.instance + "," + std::to_string(r.nodes) + "," + std::to_string(r.arcs) +
                     "," + std::to_string(r.commodities) + "," + r.solver + ",";
  line += (r.has_bound ? Real(r.bound) : "") + ",";
  line += (r.has_incumbent ? Real(r.incumbent) : "") + ",";
  line += (r.has_gap ? Real(r.gap_rel) : "") + ",";
  line += Real(r.time_s) + "," + std::to_string(r.bnb_nodes) + "," + std::to_string(r.columns) +
          "," + r.status + "\n";
  return line;
}

std::string ProfileCsv(const std::vector<BenchRow>& rows, int num_instances) {
  std::map<std::string, std::vector<double>> times;
  std::vector<std::string> order;
  for (const BenchRow& r : rows) {
    if (!times.count(r.solver)) order.push_back(r.solver);
    auto& t = times[r.solver];
    if (r.status == "ok" || r.status == "optimal") t.push_back(r.time_s);
  }
  std::string csv = "solver,time_s,fraction_solved\n";
  for (const std::string& s : order) {
    auto t = times[s];
    std::sort(t.begin(), t.end());
    for (size_t i = 0; i < t.size(); ++i) {
      csv += s + "," + Real(t[i]) + "," +
             Real(static_cast<double>(i + 1) / std::max(1, num_instances)) + "\n";
    }
  }
  return csv;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex multi-commodity flow solvers", "cmcf"};
  app.require_subcommand(1);

  std::string in, cost = "quadratic", out_dir;
  auto* prepare = app.add_subcommand("prepare", "SNDlib native file -> scaled instance JSON");
  prepare->add_option("--in", in, "SNDlib native-format file")->required();
  prepare->add_option("--cost", cost, "linear | quadratic | kleinrock")
      ->check(CLI::IsMember({"linear", "quadratic", "kleinrock"}));
  prepare->add_option("--out", out_dir, "output directory")->required();

  RunConfig cfg;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "run one solver on an instance JSON");
  solve->add_option("--instance", cfg.instance_path)->required();
  solve->add_option("--solver", cfg.solver)->required()->check(CLI::IsMember(kSolvers));
  solve->add_option("--gap", cfg.gap, "relative gap target")->check(CLI::Range(1e-12, 1.0));
  solve->add_option("--time-limit", cfg.time_limit, "seconds (0 = none)");
  solve->add_option("--seed", cfg.seed);
  solve->add_option("--starts", cfg.greedy_starts, "greedy multi-start runs")
      ->check(CLI::PositiveNumber);
  solve->add_option("--price-tol", cfg.price_tolerance);
  solve->add_option("--out", solve_out)->required();

  RunConfig bench_cfg;
  std::string pattern, solvers, bench_out;
  int jobs = 1;
  auto* bench = app.add_subcommand("bench", "solvers x instances -> CSV");
  bench->add_option("--instances", pattern, "glob of instance JSON files")->required();
  bench->add_option("--solvers", solvers, "comma-separated solver list")->required();
  bench->add_option("--out", bench_out)->required();
  bench->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  bench->add_option("--gap", bench_cfg.gap)->check(CLI::Range(1e-12, 1.0));
  bench->add_option("--time-limit", bench_cfg.time_limit);
  bench->add_option("--seed", bench_cfg.seed);

  std::vector<const char*> argv{"cmcf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    lp::MakeDefaultBackend();
    if (*prepare) return Prepare(in, cost, out_dir, out);
    if (*solve) return Solve(cfg, solve_out, out);
    if (*bench) return Bench(pattern, solvers, bench_cfg, bench_out, jobs, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConfigError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ScalingError& e) {
    err << "scaling error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << "\n";
    return kSolverFailure;
  }
  return kInputError;
}

}  // namespace cmcf::cli
