#include "tourcast/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tourcast/errors.hpp"
#include "tourcast/rng.hpp"

namespace tourcast {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Comma split that keeps empty fields, including a trailing one.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

// Reads all lines, strips CR and a leading UTF-8 BOM, and drops trailing
// blank lines so a final newline does not change the row count.
std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (!lines.empty() && lines.front().rfind("\xEF\xBB\xBF", 0) == 0)
    lines.front().erase(0, 3);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

int parse_non_negative_int(const std::string& cell, const std::string& context) {
  const std::string t = trim(cell);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw ParseError(context + ": expected a non-negative integer, got '" + cell + "'");
  try {
    return std::stoi(t);
  } catch (const std::out_of_range&) {
    throw ParseError(context + ": integer out of range: '" + cell + "'");
  }
}

}  // namespace

VenueStatus parse_status(const std::string& token) {
  const std::string t = lowercase(trim(token));
  if (t.empty()) return {VenueStatus::Kind::NoInfo, 0};
  if (t == "o") return {VenueStatus::Kind::Open, 0};
  if (t == "c") return {VenueStatus::Kind::Confirmed, 0};
  if (t == "o/h") return {VenueStatus::Kind::OpenHold, 0};
  if (t == "p") return {VenueStatus::Kind::Pending, 0};
  if (t.size() >= 2 && t.back() == 'h' &&
      std::all_of(t.begin(), t.end() - 1, [](unsigned char c) { return std::isdigit(c); })) {
    const int pos = std::stoi(t.substr(0, t.size() - 1));
    if (pos >= 1) return {VenueStatus::Kind::Waitlist, pos};
  }
  throw ParseError("unknown venue status token: '" + token + "'");
}

std::string status_token(const VenueStatus& status) {
  switch (status.kind) {
    case VenueStatus::Kind::Open: return "o";
    case VenueStatus::Kind::Confirmed: return "c";
    case VenueStatus::Kind::OpenHold: return "o/h";
    case VenueStatus::Kind::Pending: return "p";
    case VenueStatus::Kind::Waitlist: return std::to_string(status.waitlist_position) + "h";
    case VenueStatus::Kind::NoInfo: return "";
  }
  return "";
}

AvailabilityCode classify_status(const VenueStatus& status, int waitlist_cutoff) {
  switch (status.kind) {
    case VenueStatus::Kind::Open:
    case VenueStatus::Kind::OpenHold:
      return AvailabilityCode::Available;
    case VenueStatus::Kind::Confirmed:
    case VenueStatus::Kind::Pending:
    case VenueStatus::Kind::NoInfo:
      return AvailabilityCode::AbsolutelyUnavailable;
    case VenueStatus::Kind::Waitlist:
      return status.waitlist_position <= waitlist_cutoff
                 ? AvailabilityCode::Available
                 : AvailabilityCode::RelativelyUnavailable;
  }
  return AvailabilityCode::AbsolutelyUnavailable;
}

AvailabilityCode merge_city(const std::vector<AvailabilityCode>& codes) {
  if (codes.empty()) throw std::invalid_argument("cannot merge an empty venue list");
  bool any_available = false;
  bool all_absolute = true;
  for (AvailabilityCode c : codes) {
    any_available |= c == AvailabilityCode::Available;
    all_absolute &= c == AvailabilityCode::AbsolutelyUnavailable;
  }
  if (any_available) return AvailabilityCode::Available;
  if (all_absolute) return AvailabilityCode::AbsolutelyUnavailable;
  return AvailabilityCode::RelativelyUnavailable;
}

IntMatrix derive_day_matrix(const IntMatrix& mile, int travel_limit) {
  if (travel_limit <= 0) throw std::invalid_argument("travel limit must be positive");
  IntMatrix day(mile.size());
  for (size_t i = 0; i < mile.size(); ++i) {
    day[i].resize(mile[i].size());
    for (size_t j = 0; j < mile[i].size(); ++j) {
      if (mile[i][j] < 0) throw std::invalid_argument("negative mile entry");
      day[i][j] = mile[i][j] / travel_limit;
    }
  }
  return day;
}

VenueGrid read_venue_grid(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.size() < 3)
    throw ParseError(path + ": availability grid needs venue, city and status rows");

  const std::vector<std::string> venue_row = split_csv(lines[0]);
  const std::vector<std::string> city_row = split_csv(lines[1]);
  if (venue_row.size() != city_row.size())
    throw ParseError(path + ": venue and city rows have different lengths");

  VenueGrid grid;
  grid.num_days = static_cast<int>(lines.size()) - 2;
  for (size_t c = 0; c < venue_row.size(); ++c) {
    const std::string venue = trim(venue_row[c]);
    const std::string city = trim(city_row[c]);
    if (city.empty())
      throw ParseError(path + ": venue '" + venue + "' has no city (column " +
                       std::to_string(c + 1) + ")");
    grid.venues.emplace_back(venue, city);
  }

  grid.statuses.resize(grid.num_days);
  for (int d = 0; d < grid.num_days; ++d) {
    const std::vector<std::string> cells = split_csv(lines[d + 2]);
    if (cells.size() != grid.venues.size())
      throw ParseError(path + ": row " + std::to_string(d + 3) + " has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(grid.venues.size()));
    grid.statuses[d].reserve(cells.size());
    for (size_t c = 0; c < cells.size(); ++c) {
      try {
        grid.statuses[d].push_back(parse_status(cells[c]));
      } catch (const ParseError& e) {
        throw ParseError(path + ": row " + std::to_string(d + 3) + ", column " +
                         std::to_string(c + 1) + ": " + e.what());
      }
    }
  }
  return grid;
}

namespace {

IntMatrix read_mile_csv(const std::string& path, const std::vector<std::string>& city_names) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw ParseError(path + ": empty mile matrix file");
  const size_t m = city_names.size();

  const std::vector<std::string> header = split_csv(lines[0]);
  if (header.size() != m)
    throw ParseError(path + ": header lists " + std::to_string(header.size()) +
                     " cities, availability grid has " + std::to_string(m));
  for (size_t j = 0; j < m; ++j) {
    if (trim(header[j]) != city_names[j])
      throw ParseError(path + ": header column " + std::to_string(j + 1) + " is '" +
                       trim(header[j]) + "', expected '" + city_names[j] +
                       "' (city order must match the availability grid)");
  }

  if (lines.size() - 1 != m)
    throw ParseError(path + ": expected " + std::to_string(m) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  IntMatrix mile(m);
  for (size_t i = 0; i < m; ++i) {
    const std::vector<std::string> cells = split_csv(lines[i + 1]);
    if (cells.size() != m)
      throw ParseError(path + ": row " + std::to_string(i + 2) +
                       " is not square with the header");
    mile[i].reserve(m);
    for (size_t j = 0; j < m; ++j)
      mile[i].push_back(parse_non_negative_int(
          cells[j], path + ": row " + std::to_string(i + 2) + ", column " +
                        std::to_string(j + 1)));
  }
  return mile;
}

IntMatrix symmetrized_day_matrix(const IntMatrix& mile, int travel_limit) {
  IntMatrix day = derive_day_matrix(mile, travel_limit);
  for (size_t i = 0; i < day.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      day[i][j] = day[j][i] = std::max(mile[i][j], mile[j][i]) / travel_limit;
  return day;
}

}  // namespace

Instance parse_instance(const std::string& grid_path, const std::string& mile_path,
                        const Calendar& calendar, const ParseOptions& options) {
  if (calendar.num_days < 1) throw ParseError("calendar needs at least one day");
  const VenueGrid grid = read_venue_grid(grid_path);
  if (grid.num_days != calendar.num_days)
    throw ParseError(grid_path + ": grid covers " + std::to_string(grid.num_days) +
                     " days, calendar expects " + std::to_string(calendar.num_days));

  // Number cities 1..m by first appearance in the venue columns.
  std::vector<std::string> city_names;
  std::vector<int> venue_city;  // 0-based city index per venue column
  for (const auto& [venue, city] : grid.venues) {
    auto it = std::find(city_names.begin(), city_names.end(), city);
    if (it == city_names.end()) {
      city_names.push_back(city);
      venue_city.push_back(static_cast<int>(city_names.size()) - 1);
    } else {
      venue_city.push_back(static_cast<int>(it - city_names.begin()));
    }
  }
  const int m = static_cast<int>(city_names.size());

  Instance inst;
  inst.num_days = calendar.num_days;
  inst.start_weekday = calendar.start_weekday;
  inst.num_cities = m;
  inst.travel_limit = options.travel_limit;
  inst.city_names = city_names;

  inst.availability.assign(inst.num_days, std::vector<AvailabilityCode>(m));
  std::vector<std::vector<AvailabilityCode>> per_city(m);
  for (int d = 0; d < inst.num_days; ++d) {
    for (auto& codes : per_city) codes.clear();
    for (size_t c = 0; c < grid.venues.size(); ++c)
      per_city[venue_city[c]].push_back(
          classify_status(grid.statuses[d][c], options.waitlist_cutoff));
    for (int k = 0; k < m; ++k) inst.availability[d][k] = merge_city(per_city[k]);
  }

  inst.mile = read_mile_csv(mile_path, city_names);
  inst.day = options.symmetric_days ? symmetrized_day_matrix(inst.mile, options.travel_limit)
                                    : derive_day_matrix(inst.mile, options.travel_limit);
  validate_instance(inst);
  return inst;
}

Instance generate_random_instance(const GeneratorParams& params, std::uint64_t seed) {
  if (params.num_cities < 1 || params.num_days < 1)
    throw std::invalid_argument("generator needs at least one city and one day");
  if (params.p_available < 0 || params.p_relative < 0 ||
      params.p_available + params.p_relative > 1.0)
    throw std::invalid_argument("availability probabilities must be in [0,1] and sum to <= 1");
  if (params.mile_min < 0 || params.mile_min > params.mile_max)
    throw std::invalid_argument("mile range is empty or negative");
  if (params.travel_limit <= 0) throw std::invalid_argument("travel limit must be positive");

  Instance inst;
  inst.num_days = params.num_days;
  inst.start_weekday = params.start_weekday;
  inst.num_cities = params.num_cities;
  inst.travel_limit = params.travel_limit;
  for (int k = 1; k <= params.num_cities; ++k)
    inst.city_names.push_back("City" + std::to_string(k));

  // Draw order is fixed (availability row-major, then miles row-major) so a
  // seed pins the whole instance.
  Rng rng(seed);
  inst.availability.assign(params.num_days,
                           std::vector<AvailabilityCode>(params.num_cities));
  for (int d = 0; d < params.num_days; ++d) {
    for (int k = 0; k < params.num_cities; ++k) {
      const double u = uniform_unit(rng);
      if (u < params.p_available)
        inst.availability[d][k] = AvailabilityCode::Available;
      else if (u < params.p_available + params.p_relative)
        inst.availability[d][k] = AvailabilityCode::RelativelyUnavailable;
      else
        inst.availability[d][k] = AvailabilityCode::AbsolutelyUnavailable;
    }
  }

  inst.mile.assign(params.num_cities, std::vector<int>(params.num_cities, 0));
  for (int i = 0; i < params.num_cities; ++i)
    for (int j = 0; j < params.num_cities; ++j)
      if (i != j) inst.mile[i][j] = uniform_int(rng, params.mile_min, params.mile_max);

  inst.day = params.symmetric_days ? symmetrized_day_matrix(inst.mile, params.travel_limit)
                                   : derive_day_matrix(inst.mile, params.travel_limit);
  validate_instance(inst);
  return inst;
}

void write_availability_csv(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  for (int pass = 0; pass < 2; ++pass) {  // venue row, then city row (identical here)
    for (int k = 0; k < inst.num_cities; ++k) {
      if (k) out << ',';
      out << inst.city_names[k];
    }
    out << '\n';
  }
  for (int d = 0; d < inst.num_days; ++d) {
    for (int k = 0; k < inst.num_cities; ++k) {
      if (k) out << ',';
      switch (inst.availability[d][k]) {
        case AvailabilityCode::Available: out << "o"; break;
        case AvailabilityCode::RelativelyUnavailable: out << "4h"; break;
        case AvailabilityCode::AbsolutelyUnavailable: out << "c"; break;
      }
    }
    out << '\n';
  }
}

void write_mile_csv(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  for (int k = 0; k < inst.num_cities; ++k) {
    if (k) out << ',';
    out << inst.city_names[k];
  }
  out << '\n';
  for (int i = 0; i < inst.num_cities; ++i) {
    for (int j = 0; j < inst.num_cities; ++j) {
      if (j) out << ',';
      out << inst.mile[i][j];
    }
    out << '\n';
  }
}

}  // namespace tourcast
