#include "tourcast/manifest.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tourcast/errors.hpp"

namespace tourcast {

namespace {

namespace fs = std::filesystem;

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& value, const std::string& where) {
  size_t used = 0;
  double out = 0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ParseError(where + ": expected a number, got '" + value + "'");
  }
  if (used != value.size())
    throw ParseError(where + ": trailing junk in number '" + value + "'");
  return out;
}

long long parse_int(const std::string& value, const std::string& where) {
  size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(value, &used);
  } catch (const std::exception&) {
    throw ParseError(where + ": expected an integer, got '" + value + "'");
  }
  if (used != value.size())
    throw ParseError(where + ": trailing junk in integer '" + value + "'");
  return out;
}

bool parse_bool(const std::string& value, const std::string& where) {
  const std::string v = trim(value);
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ParseError(where + ": expected true/false, got '" + value + "'");
}

// Integral values print without an exponent so saved manifests stay readable.
std::string num(double v) {
  const long long as_int = static_cast<long long>(v);
  if (static_cast<double>(as_int) == v && (v < 9e15 && v > -9e15))
    return std::to_string(as_int);
  std::ostringstream out;
  out << v;
  return out.str();
}

SweepCell parse_cell(const std::string& value, const Penalties& defaults,
                     const std::string& where) {
  std::istringstream in(value);
  std::vector<double> nums;
  double x = 0;
  while (in >> x) nums.push_back(x);
  if (!in.eof()) throw ParseError(where + ": sweep cell holds a non-number");
  if (nums.size() != 3 && nums.size() != 8)
    throw ParseError(where + ": sweep cell needs 3 weights or 3 weights + 5 penalties, got " +
                     std::to_string(nums.size()) + " numbers");
  SweepCell cell;
  cell.weights = {nums[0], nums[1], nums[2]};
  cell.penalties = defaults;
  if (nums.size() == 8) cell.penalties = {nums[3], nums[4], nums[5], nums[6], nums[7]};
  return cell;
}

}  // namespace

RunManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest: " + path);
  const fs::path base = fs::path(path).parent_path();

  RunManifest m;
  GeneratorParams gen;
  bool has_generator_section = false;

  auto resolve = [&base](const std::string& p) {
    const fs::path candidate(p);
    return candidate.is_absolute() ? candidate.string() : (base / candidate).string();
  };

  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = path + ":" + std::to_string(line_no);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ParseError(where + ": unterminated section header");
      section = trim(text.substr(1, text.size() - 2));
      if (section != "instance" && section != "generator" && section != "weights" &&
          section != "penalties" && section != "annealing" && section != "solver" &&
          section != "sweep")
        throw ParseError(where + ": unknown section [" + section + "]");
      if (section == "generator") has_generator_section = true;
      continue;
    }
    const size_t eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(where + ": expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));

    if (section == "instance") {
      if (key == "availability") m.availability_path = resolve(value);
      else if (key == "miles") m.miles_path = resolve(value);
      else if (key == "days") m.calendar.num_days = static_cast<int>(parse_int(value, where));
      else if (key == "start_weekday") m.calendar.start_weekday = parse_weekday(value);
      else if (key == "travel_limit")
        m.parse_options.travel_limit = static_cast<int>(parse_int(value, where));
      else if (key == "waitlist_cutoff")
        m.parse_options.waitlist_cutoff = static_cast<int>(parse_int(value, where));
      else if (key == "symmetric_days") m.parse_options.symmetric_days = parse_bool(value, where);
      else throw ParseError(where + ": unknown key '" + key + "' in [instance]");
    } else if (section == "generator") {
      if (key == "cities") gen.num_cities = static_cast<int>(parse_int(value, where));
      else if (key == "days") gen.num_days = static_cast<int>(parse_int(value, where));
      else if (key == "start_weekday") gen.start_weekday = parse_weekday(value);
      else if (key == "p_available") gen.p_available = parse_double(value, where);
      else if (key == "p_relative") gen.p_relative = parse_double(value, where);
      else if (key == "mile_min") gen.mile_min = static_cast<int>(parse_int(value, where));
      else if (key == "mile_max") gen.mile_max = static_cast<int>(parse_int(value, where));
      else if (key == "travel_limit") gen.travel_limit = static_cast<int>(parse_int(value, where));
      else if (key == "symmetric_days") gen.symmetric_days = parse_bool(value, where);
      else if (key == "seed") m.generator_seed = static_cast<std::uint64_t>(parse_int(value, where));
      else throw ParseError(where + ": unknown key '" + key + "' in [generator]");
    } else if (section == "weights") {
      if (key == "mile") m.weights.mile = parse_double(value, where);
      else if (key == "good") m.weights.good = parse_double(value, where);
      else if (key == "bad") m.weights.bad = parse_double(value, where);
      else throw ParseError(where + ": unknown key '" + key + "' in [weights]");
    } else if (section == "penalties") {
      if (key == "avail1") m.penalties.avail1 = parse_double(value, where);
      else if (key == "avail2") m.penalties.avail2 = parse_double(value, where);
      else if (key == "break") m.penalties.brk = parse_double(value, where);
      else if (key == "sep1") m.penalties.sep1 = parse_double(value, where);
      else if (key == "sep2") m.penalties.sep2 = parse_double(value, where);
      else throw ParseError(where + ": unknown key '" + key + "' in [penalties]");
    } else if (section == "annealing") {
      if (key == "initial_temp") m.sa.initial_temp = parse_double(value, where);
      else if (key == "temp_limit") m.sa.temp_limit = parse_double(value, where);
      else if (key == "iters_per_temp") m.sa.iters_per_temp = static_cast<int>(parse_int(value, where));
      else if (key == "alpha") m.sa.alpha = parse_double(value, where);
      else if (key == "budget_seconds") m.sa.time_budget_seconds = parse_double(value, where);
      else if (key == "max_moves") m.sa.max_moves = static_cast<std::uint64_t>(parse_int(value, where));
      else if (key == "seed") m.sa.seed = static_cast<std::uint64_t>(parse_int(value, where));
      else if (key == "restart_reset") m.sa.restart_reset = parse_bool(value, where);
      else throw ParseError(where + ": unknown key '" + key + "' in [annealing]");
    } else if (section == "solver") {
      if (key == "break_limit") m.break_limit = static_cast<int>(parse_int(value, where));
      else if (key == "output_dir") m.output_dir = value;
      else throw ParseError(where + ": unknown key '" + key + "' in [solver]");
    } else if (section == "sweep") {
      if (key == "cell") m.sweep_cells.push_back(parse_cell(value, m.penalties, where));
      else throw ParseError(where + ": unknown key '" + key + "' in [sweep]");
    } else {
      throw ParseError(where + ": key '" + key + "' outside any section");
    }
  }

  const bool has_files = !m.availability_path.empty() || !m.miles_path.empty();
  if (has_files && (m.availability_path.empty() || m.miles_path.empty()))
    throw ParseError(path + ": [instance] needs both availability and miles paths");
  if (has_files && has_generator_section)
    throw ParseError(path + ": give either [instance] files or a [generator], not both");
  if (!has_files && !has_generator_section)
    throw ParseError(path + ": no instance source ([instance] files or [generator])");
  if (has_generator_section) m.generator = gen;
  if (m.break_limit < 1) throw ParseError(path + ": break_limit must be >= 1");
  if (m.calendar.num_days < 1) throw ParseError(path + ": days must be >= 1");
  return m;
}

void save_manifest(const RunManifest& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write manifest: " + path);
  const fs::path base = fs::path(path).parent_path();
  auto relative = [&base](const std::string& p) {
    std::error_code ec;
    const fs::path rel = fs::relative(p, base.empty() ? "." : base, ec);
    return ec ? p : rel.string();
  };

  out << "# Solver run manifest. Lines starting with # are comments.\n";
  if (m.generator) {
    const GeneratorParams& g = *m.generator;
    out << "\n# Instance drawn at random from the parameters below.\n";
    out << "[generator]\n";
    out << "cities = " << g.num_cities << "\n";
    out << "days = " << g.num_days << "\n";
    out << "start_weekday = " << weekday_name(g.start_weekday) << "\n";
    out << "p_available = " << num(g.p_available) << "\n";
    out << "p_relative = " << num(g.p_relative) << "\n";
    out << "mile_min = " << g.mile_min << "\n";
    out << "mile_max = " << g.mile_max << "\n";
    out << "travel_limit = " << g.travel_limit << "\n";
    out << "symmetric_days = " << (g.symmetric_days ? "true" : "false") << "\n";
    out << "seed = " << m.generator_seed << "\n";
  } else {
    out << "\n# Instance files and how to read them.\n";
    out << "[instance]\n";
    out << "availability = " << relative(m.availability_path) << "\n";
    out << "miles = " << relative(m.miles_path) << "\n";
    out << "days = " << m.calendar.num_days << "\n";
    out << "start_weekday = " << weekday_name(m.calendar.start_weekday) << "\n";
    out << "travel_limit = " << m.parse_options.travel_limit << "\n";
    out << "waitlist_cutoff = " << m.parse_options.waitlist_cutoff << "\n";
    out << "symmetric_days = " << (m.parse_options.symmetric_days ? "true" : "false") << "\n";
  }
  out << "\n# Objective weights: cost = mile * miles + good * good_days + bad * bad_days.\n";
  out << "[weights]\n";
  out << "mile = " << num(m.weights.mile) << "\n";
  out << "good = " << num(m.weights.good) << "\n";
  out << "bad = " << num(m.weights.bad) << "\n";
  out << "\n# Penalty per violation, by type.\n";
  out << "[penalties]\n";
  out << "avail1 = " << num(m.penalties.avail1) << "\n";
  out << "avail2 = " << num(m.penalties.avail2) << "\n";
  out << "break = " << num(m.penalties.brk) << "\n";
  out << "sep1 = " << num(m.penalties.sep1) << "\n";
  out << "sep2 = " << num(m.penalties.sep2) << "\n";
  out << "\n# Annealer schedule. budget_seconds converts to a move budget once;\n";
  out << "# max_moves > 0 pins the move budget directly.\n";
  out << "[annealing]\n";
  out << "initial_temp = " << num(m.sa.initial_temp) << "\n";
  out << "temp_limit = " << num(m.sa.temp_limit) << "\n";
  out << "iters_per_temp = " << m.sa.iters_per_temp << "\n";
  out << "alpha = " << num(m.sa.alpha) << "\n";
  out << "budget_seconds = " << num(m.sa.time_budget_seconds) << "\n";
  out << "max_moves = " << m.sa.max_moves << "\n";
  out << "seed = " << m.sa.seed << "\n";
  out << "restart_reset = " << (m.sa.restart_reset ? "true" : "false") << "\n";
  out << "\n[solver]\n";
  out << "break_limit = " << m.break_limit << "\n";
  out << "output_dir = " << m.output_dir << "\n";
  if (!m.sweep_cells.empty()) {
    out << "\n# One cell per line: three weights, optionally followed by five penalties.\n";
    out << "[sweep]\n";
    for (const SweepCell& cell : m.sweep_cells) {
      out << "cell = " << num(cell.weights.mile) << " " << num(cell.weights.good) << " "
          << num(cell.weights.bad) << " " << num(cell.penalties.avail1) << " "
          << num(cell.penalties.avail2) << " " << num(cell.penalties.brk) << " "
          << num(cell.penalties.sep1) << " " << num(cell.penalties.sep2) << "\n";
    }
  }
}

Instance load_instance(const RunManifest& m) {
  if (m.generator) return generate_random_instance(*m.generator, m.generator_seed);
  return parse_instance(m.availability_path, m.miles_path, m.calendar, m.parse_options);
}

}  // namespace tourcast
