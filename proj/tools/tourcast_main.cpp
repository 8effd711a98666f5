// Command-line front end: solve, check, sweep, gen, oracle.
//
// Exit codes: 0 success, 2 bad input (files, manifests, flags),
// 3 construction overflow, 4 oracle enumeration cap.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tourcast/anneal.hpp"
#include "tourcast/constraints.hpp"
#include "tourcast/construct.hpp"
#include "tourcast/cost.hpp"
#include "tourcast/errors.hpp"
#include "tourcast/ingest.hpp"
#include "tourcast/manifest.hpp"
#include "tourcast/model.hpp"
#include "tourcast/oracle.hpp"
#include "tourcast/report.hpp"

namespace fs = std::filesystem;
using namespace tourcast;

namespace {

std::string trimmed(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Integers print without an exponent or trailing zeros; 1e+06 reads badly
// in a table of penalties.
std::string fmt_num(double v) {
  const long long as_int = static_cast<long long>(v);
  if (static_cast<double>(as_int) == v && std::abs(v) < 9e15) return std::to_string(as_int);
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string tour_line(const Tour& tour) {
  std::ostringstream out;
  for (size_t i = 0; i < tour.size(); ++i) {
    if (i) out << ',';
    out << tour[i];
  }
  out << '\n';
  return out.str();
}

Tour read_tour_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tour file: " + path);
  std::string line;
  std::string text;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    text = trimmed(line);
    if (!text.empty()) break;
  }
  if (text.empty()) throw ParseError("tour file is empty: " + path);
  Tour tour;
  std::istringstream fields(text);
  std::string field;
  while (std::getline(fields, field, ',')) {
    const std::string token = trimmed(field);
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError(path + ": '" + token + "' is not an integer");
    }
    if (used != token.size()) throw ParseError(path + ": '" + token + "' is not an integer");
    tour.push_back(value);
  }
  return tour;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

// Emitted reports must agree with a fresh evaluation of their own tour.
void verify_report_text(const std::string& text, const Tour& tour, const Instance& inst,
                        int break_limit) {
  const TourReport fresh = make_report(tour, inst, break_limit);
  if (parse_property_block(text) != property_block_of(fresh))
    throw std::logic_error("report self-check failed: rendered properties disagree with a fresh evaluation");
}

RunManifest manifest_from(const std::string& manifest_path, const std::string& instance_dir) {
  if (!manifest_path.empty() && !instance_dir.empty())
    throw ParseError("give --manifest or --instance, not both");
  if (!manifest_path.empty()) return load_manifest(manifest_path);
  if (!instance_dir.empty()) {
    const fs::path p = fs::path(instance_dir) / "instance.manifest";
    if (!fs::exists(p)) throw ParseError("no instance.manifest found in " + instance_dir);
    return load_manifest(p.string());
  }
  throw ParseError("an instance is required: --manifest FILE or --instance DIR");
}

void print_warnings(const RunManifest& m) {
  for (const std::string& w : weight_warnings(m.weights)) std::cerr << "warning: " << w << "\n";
  for (const std::string& w : penalty_warnings(m.penalties)) std::cerr << "warning: " << w << "\n";
}

RenderOptions render_options(const std::string& start_date) {
  RenderOptions options;
  if (!start_date.empty()) options.start_date = parse_civil_date(start_date);
  return options;
}

Tour checked_tour(const std::string& path, const Instance& inst) {
  Tour tour = read_tour_file(path);
  if (static_cast<int>(tour.size()) != inst.num_days)
    throw ParseError(path + ": tour has " + std::to_string(tour.size()) + " entries, instance has " +
                     std::to_string(inst.num_days) + " days");
  for (int v : tour)
    if (v < 0 || v > inst.num_cities)
      throw ParseError(path + ": city code " + std::to_string(v) + " is out of range 0.." +
                       std::to_string(inst.num_cities));
  return tour;
}

std::uint64_t oracle_cap() {
  const char* env = std::getenv("TOURCAST_CAP");
  if (!env) return kDefaultEnumerationCap;
  const std::string text = trimmed(env);
  size_t used = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw ParseError("TOURCAST_CAP: '" + text + "' is not a count");
  }
  if (used != text.size() || text.empty() || text[0] == '-')
    throw ParseError("TOURCAST_CAP: '" + text + "' is not a count");
  return cap;
}

std::string trace_csv(const RunTrace& trace) {
  std::ostringstream out;
  out << "move,elapsed_seconds,temperature,current_cost,best_cost,improved\n";
  for (const TraceEntry& e : trace.entries)
    out << e.move_index << ',' << std::setprecision(6) << std::fixed << e.elapsed_seconds
        << std::defaultfloat << ',' << e.temperature << ',' << e.current_cost << ','
        << e.best_cost << ',' << (e.improved ? 1 : 0) << '\n';
  return out.str();
}

nlohmann::json run_json(const SAResult& res, const RunManifest& m, double initial_cost,
                        double seconds) {
  return nlohmann::json{{"seed", m.sa.seed},
                        {"initial_cost", initial_cost},
                        {"best_cost", res.best_cost},
                        {"total_moves", res.trace.total_moves},
                        {"restarts", res.trace.restarts},
                        {"stages_per_restart", res.trace.stages_per_restart},
                        {"improvements", res.trace.improvements.size()},
                        {"wallclock_cutoff", res.trace.wallclock_cutoff},
                        {"wall_seconds", seconds},
                        {"rng", res.trace.rng_algorithm}};
}

// Writes <name>_tour.txt, <name>_report.txt and <name>_report.json, verifying
// the rendered report before it lands on disk.
void write_tour_artifacts(const fs::path& dir, const std::string& name, const Tour& tour,
                          const Instance& inst, int break_limit, const RenderOptions& options,
                          std::ostream& log) {
  const TourReport report = make_report(tour, inst, break_limit);
  const std::string text = render_report(report, inst, options);
  verify_report_text(text, tour, inst, break_limit);
  const fs::path tour_path = dir / (name + "_tour.txt");
  const fs::path text_path = dir / (name + "_report.txt");
  const fs::path json_path = dir / (name + "_report.json");
  write_text_file(tour_path, tour_line(tour));
  write_text_file(text_path, text);
  write_text_file(json_path, report_to_json(report).dump(2) + "\n");
  log << "Wrote " << tour_path.string() << "\n";
  log << "Wrote " << text_path.string() << "\n";
  log << "Wrote " << json_path.string() << "\n";
}

struct SolveArgs {
  std::string manifest_path;
  std::string instance_dir;
  std::string out_dir;
  std::string start_date;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double budget = 0;
  bool budget_set = false;
  bool no_restart_reset = false;
};

int run_solve(const SolveArgs& args) {
  RunManifest m = manifest_from(args.manifest_path, args.instance_dir);
  if (args.seed_set) m.sa.seed = args.seed;
  if (args.budget_set) m.sa.time_budget_seconds = args.budget;
  if (args.no_restart_reset) m.sa.restart_reset = false;
  if (!args.out_dir.empty()) m.output_dir = args.out_dir;
  validate_params(m.sa);
  print_warnings(m);

  const Instance inst = load_instance(m);
  validate_instance(inst);
  const RenderOptions options = render_options(args.start_date);

  const Tour initial = construct_initial(inst, m.sa.seed, m.break_limit);
  const double initial_cost = cost_of(initial, inst, m.weights, m.penalties, m.break_limit);

  const auto t0 = std::chrono::steady_clock::now();
  const SAResult res =
      simulated_annealing(inst, initial, m.weights, m.penalties, m.sa, m.break_limit);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const fs::path out(m.output_dir);
  fs::create_directories(out);
  write_tour_artifacts(out, "initial", initial, inst, m.break_limit, options, std::cout);
  write_tour_artifacts(out, "best", res.best, inst, m.break_limit, options, std::cout);
  write_text_file(out / "trace.csv", trace_csv(res.trace));
  write_text_file(out / "run.json", run_json(res, m, initial_cost, seconds).dump(2) + "\n");
  std::cout << "Wrote " << (out / "trace.csv").string() << "\n";
  std::cout << "Wrote " << (out / "run.json").string() << "\n";

  const ViolationReport& v = res.best_eval.violations;
  std::cout << "\nInstance: " << inst.num_cities << " cities over " << inst.num_days << " days\n";
  std::cout << "Initial cost: " << fmt_num(initial_cost) << "\n";
  std::cout << "Best cost: " << fmt_num(res.best_cost) << " after " << res.trace.total_moves
            << " moves (" << res.trace.restarts << " restarts, "
            << std::fixed << std::setprecision(1) << seconds << std::defaultfloat << " s)\n";
  std::cout << "Violations: " << v.total() << " (availability " << v.avail_type1 << "/"
            << v.avail_type2 << ", break " << v.break_count << ", separation " << v.sep_type1
            << "/" << v.sep_type2 << ")\n";
  std::cout << "Complete tour: " << (is_complete(res.best, inst) ? "yes" : "no") << "\n";
  return 0;
}

struct CheckArgs {
  std::string manifest_path;
  std::string instance_dir;
  std::string tour_path;
  std::string start_date;
};

int run_check(const CheckArgs& args) {
  const RunManifest m = manifest_from(args.manifest_path, args.instance_dir);
  const Instance inst = load_instance(m);
  validate_instance(inst);
  const Tour tour = checked_tour(args.tour_path, inst);
  const TourReport report = make_report(tour, inst, m.break_limit);
  const std::string text = render_report(report, inst, render_options(args.start_date));
  verify_report_text(text, tour, inst, m.break_limit);
  std::cout << text;
  return 0;
}

struct SweepArgs {
  std::string manifest_path;
  std::string instance_dir;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double budget = 0;
  bool budget_set = false;
  bool no_restart_reset = false;
  int jobs = 0;
};

struct SweepRow {
  SweepCell cell;
  bool ok = false;
  std::string error;
  double best_cost = 0;
  Objectives obj;
  ViolationReport violations;
  double seconds = 0;
  bool pareto = false;
};

int run_sweep(const SweepArgs& args) {
  RunManifest m = manifest_from(args.manifest_path, args.instance_dir);
  if (args.seed_set) m.sa.seed = args.seed;
  if (args.budget_set) m.sa.time_budget_seconds = args.budget;
  if (args.no_restart_reset) m.sa.restart_reset = false;
  if (!args.out_dir.empty()) m.output_dir = args.out_dir;
  validate_params(m.sa);

  std::vector<SweepCell> cells = m.sweep_cells;
  if (cells.empty()) cells.push_back({m.weights, m.penalties});

  const Instance inst = load_instance(m);
  validate_instance(inst);
  const Tour initial = construct_initial(inst, m.sa.seed, m.break_limit);
  const fs::path out(m.output_dir);
  fs::create_directories(out);

  std::vector<SweepRow> rows(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
      SweepRow& row = rows[i];
      row.cell = cells[i];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const SAResult res = simulated_annealing(inst, initial, row.cell.weights,
                                                 row.cell.penalties, m.sa, m.break_limit);
        row.best_cost = res.best_cost;
        row.obj = res.best_eval.objectives;
        row.violations = res.best_eval.violations;
        const fs::path cell_dir = out / ("cell_" + std::to_string(i));
        fs::create_directories(cell_dir);
        std::ostringstream sink;  // per-cell logs fold into the final table
        write_tour_artifacts(cell_dir, "best", res.best, inst, m.break_limit, {}, sink);
        row.ok = true;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };

  int jobs = args.jobs > 0 ? args.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (jobs > static_cast<int>(cells.size())) jobs = static_cast<int>(cells.size());
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();

  // Pareto flag over (miles down, good days up, bad days down).
  auto dominates = [](const SweepRow& a, const SweepRow& b) {
    const bool no_worse = a.obj.total_miles <= b.obj.total_miles &&
                          a.obj.good_days >= b.obj.good_days && a.obj.bad_days <= b.obj.bad_days;
    const bool better = a.obj.total_miles < b.obj.total_miles ||
                        a.obj.good_days > b.obj.good_days || a.obj.bad_days < b.obj.bad_days;
    return no_worse && better;
  };
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].ok) continue;
    rows[i].pareto = true;
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != i && rows[j].ok && dominates(rows[j], rows[i])) rows[i].pareto = false;
  }

  std::ostringstream csv;
  csv << "cell,w_mile,w_good,w_bad,p_avail1,p_avail2,p_break,p_sep1,p_sep2,"
         "best_cost,miles,good_days,bad_days,avail1,avail2,break,sep1,sep2,seconds,pareto,error\n";
  std::cout << std::left << std::setw(5) << "cell" << std::setw(24) << "weights" << std::setw(42)
            << "penalties" << std::setw(12) << "best cost" << std::setw(8) << "miles"
            << std::setw(6) << "good" << std::setw(5) << "bad" << std::setw(16) << "y1..y5"
            << std::setw(8) << "secs" << "pareto\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    const Weights& w = r.cell.weights;
    const Penalties& p = r.cell.penalties;
    const std::string weights_text =
        "(" + fmt_num(w.mile) + "," + fmt_num(w.good) + "," + fmt_num(w.bad) + ")";
    const std::string penalties_text = "(" + fmt_num(p.avail1) + "," + fmt_num(p.avail2) + "," +
                                       fmt_num(p.brk) + "," + fmt_num(p.sep1) + "," +
                                       fmt_num(p.sep2) + ")";
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(1) << r.seconds;
    csv << i << ',' << fmt_num(w.mile) << ',' << fmt_num(w.good) << ',' << fmt_num(w.bad) << ','
        << fmt_num(p.avail1) << ',' << fmt_num(p.avail2) << ',' << fmt_num(p.brk) << ','
        << fmt_num(p.sep1) << ',' << fmt_num(p.sep2) << ',';
    std::cout << std::left << std::setw(5) << i << std::setw(24) << weights_text << std::setw(42)
              << penalties_text;
    if (r.ok) {
      const ViolationReport& v = r.violations;
      std::ostringstream ys;
      ys << v.avail_type1 << ' ' << v.avail_type2 << ' ' << v.break_count << ' ' << v.sep_type1
         << ' ' << v.sep_type2;
      std::cout << std::setw(12) << fmt_num(r.best_cost) << std::setw(8) << r.obj.total_miles
                << std::setw(6) << r.obj.good_days << std::setw(5) << r.obj.bad_days
                << std::setw(16) << ys.str() << std::setw(8) << secs.str()
                << (r.pareto ? "*" : "") << "\n";
      csv << fmt_num(r.best_cost) << ',' << r.obj.total_miles << ',' << r.obj.good_days << ','
          << r.obj.bad_days << ',' << v.avail_type1 << ',' << v.avail_type2 << ','
          << v.break_count << ',' << v.sep_type1 << ',' << v.sep_type2 << ',' << secs.str()
          << ',' << (r.pareto ? 1 : 0) << ",\n";
    } else {
      std::cout << "ERROR: " << r.error << "\n";
      csv << ",,,,,,,,," << secs.str() << ",,\"" << r.error << "\"\n";
    }
  }
  write_text_file(out / "sweep.csv", csv.str());
  std::cout << "\nWrote " << (out / "sweep.csv").string() << "\n";

  // A failed cell fails the run, after every sibling has had its chance.
  for (const SweepRow& r : rows)
    if (!r.ok) return 1;
  return 0;
}

struct GenArgs {
  std::string out_dir;
  GeneratorParams params;
  std::string start_weekday = "mon";
  std::uint64_t seed = 1;
};

bool same_instance(const Instance& a, const Instance& b) {
  return a.num_days == b.num_days && a.start_weekday == b.start_weekday &&
         a.num_cities == b.num_cities && a.travel_limit == b.travel_limit &&
         a.city_names == b.city_names && a.mile == b.mile && a.day == b.day &&
         a.availability == b.availability;
}

int run_gen(const GenArgs& args) {
  GeneratorParams params = args.params;
  params.start_weekday = parse_weekday(args.start_weekday);
  const Instance inst = generate_random_instance(params, args.seed);
  validate_instance(inst);

  const fs::path out(args.out_dir);
  fs::create_directories(out);
  const fs::path avail_path = out / "availability.csv";
  const fs::path miles_path = out / "miles.csv";
  const fs::path manifest_path = out / "instance.manifest";
  write_availability_csv(inst, avail_path.string());
  write_mile_csv(inst, miles_path.string());

  RunManifest m;
  m.availability_path = avail_path.string();
  m.miles_path = miles_path.string();
  m.calendar = {params.num_days, params.start_weekday};
  m.parse_options.travel_limit = params.travel_limit;
  m.parse_options.symmetric_days = params.symmetric_days;
  save_manifest(m, manifest_path.string());

  // The written files must read back as the exact same instance.
  const Instance reread = load_instance(load_manifest(manifest_path.string()));
  if (!same_instance(inst, reread))
    throw std::logic_error("generated instance did not round-trip through its own files");

  std::cout << "Wrote " << avail_path.string() << "\n";
  std::cout << "Wrote " << miles_path.string() << "\n";
  std::cout << "Wrote " << manifest_path.string() << "\n";
  std::cout << "Instance: " << inst.num_cities << " cities over " << inst.num_days
            << " days, seed " << args.seed << "\n";
  return 0;
}

struct OracleArgs {
  std::string manifest_path;
  std::string instance_dir;
  std::string start_date;
};

int run_oracle(const OracleArgs& args) {
  const RunManifest m = manifest_from(args.manifest_path, args.instance_dir);
  const Instance inst = load_instance(m);
  validate_instance(inst);
  const OracleResult res =
      brute_force_best(inst, m.weights, m.penalties, m.break_limit, oracle_cap());
  std::cout << "Enumerated complete tours: " << res.num_enumerated << "\n";
  std::cout << "Optimal relaxed cost: " << fmt_num(res.best_cost) << " (" << res.ties
            << " optimal tour" << (res.ties == 1 ? "" : "s") << ")\n";
  std::cout << "Optimal tour: " << tour_line(res.best_tour) << "\n";
  const TourReport report = make_report(res.best_tour, inst, m.break_limit);
  const std::string text = render_report(report, inst, render_options(args.start_date));
  verify_report_text(text, res.best_tour, inst, m.break_limit);
  std::cout << text;
  return 0;
}

void add_instance_flags(CLI::App* cmd, std::string& manifest_path, std::string& instance_dir) {
  cmd->add_option("--manifest", manifest_path, "Run manifest file");
  cmd->add_option("--instance", instance_dir, "Directory holding an instance.manifest");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concert tour scheduler: heuristic construction plus restarted simulated annealing"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Construct a tour and improve it by annealing");
  add_instance_flags(solve, solve_args.manifest_path, solve_args.instance_dir);
  auto* solve_seed = solve->add_option("--seed", solve_args.seed, "Override the annealer seed");
  auto* solve_budget =
      solve->add_option("--budget", solve_args.budget, "Override the time budget, in seconds");
  solve->add_flag("--no-restart-reset", solve_args.no_restart_reset,
                  "Keep the current tour across restarts instead of resetting to the initial");
  solve->add_option("--out", solve_args.out_dir, "Override the manifest output directory");
  solve->add_option("--start-date", solve_args.start_date,
                    "Render real dates (YYYY-MM-DD of day 0) in schedules");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Evaluate and report a tour from a file");
  add_instance_flags(check, check_args.manifest_path, check_args.instance_dir);
  check->add_option("tour", check_args.tour_path, "Tour file: one comma-separated line")
      ->required();
  check->add_option("--start-date", check_args.start_date,
                    "Render real dates (YYYY-MM-DD of day 0) in schedules");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Anneal every weight/penalty cell in the manifest");
  add_instance_flags(sweep, sweep_args.manifest_path, sweep_args.instance_dir);
  auto* sweep_seed = sweep->add_option("--seed", sweep_args.seed, "Override the annealer seed");
  auto* sweep_budget = sweep->add_option("--budget", sweep_args.budget,
                                         "Override the per-cell time budget, in seconds");
  sweep->add_flag("--no-restart-reset", sweep_args.no_restart_reset,
                  "Keep the current tour across restarts instead of resetting to the initial");
  sweep->add_option("--jobs", sweep_args.jobs, "Concurrent cells (default: hardware threads)");
  sweep->add_option("--out", sweep_args.out_dir, "Override the manifest output directory");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Write a random instance as CSV files plus manifest");
  gen->add_option("--out", gen_args.out_dir, "Directory to write into")->required();
  gen->add_option("--seed", gen_args.seed, "Generator seed");
  gen->add_option("--cities", gen_args.params.num_cities, "Number of cities");
  gen->add_option("--days", gen_args.params.num_days, "Number of calendar days");
  gen->add_option("--start-weekday", gen_args.start_weekday, "Weekday of day 0 (mon..sun)");
  gen->add_option("--p-available", gen_args.params.p_available,
                  "Probability a cell is available");
  gen->add_option("--p-relative", gen_args.params.p_relative,
                  "Probability a cell is relatively unavailable");
  gen->add_option("--mile-min", gen_args.params.mile_min, "Minimum off-diagonal mileage");
  gen->add_option("--mile-max", gen_args.params.mile_max, "Maximum off-diagonal mileage");
  gen->add_option("--travel-limit", gen_args.params.travel_limit, "Miles coverable in one day");
  gen->add_flag("--symmetric-days", gen_args.params.symmetric_days,
                "Derive day entries from the larger direction of each city pair");

  OracleArgs oracle_args;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Exhaustively find the optimal complete tour (small instances)");
  add_instance_flags(oracle, oracle_args.manifest_path, oracle_args.instance_dir);
  oracle->add_option("--start-date", oracle_args.start_date,
                     "Render real dates (YYYY-MM-DD of day 0) in schedules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    solve_args.seed_set = solve_seed->count() > 0;
    solve_args.budget_set = solve_budget->count() > 0;
    sweep_args.seed_set = sweep_seed->count() > 0;
    sweep_args.budget_set = sweep_budget->count() > 0;
    if (solve->parsed()) return run_solve(solve_args);
    if (check->parsed()) return run_check(check_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (gen->parsed()) return run_gen(gen_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
  } catch (const EnumerationCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const PlacementError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
