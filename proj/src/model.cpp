#include "tourcast/model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tourcast {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

const char* weekday_name(Weekday d) {
  static const char* names[] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
  return names[static_cast<int>(d)];
}

Weekday parse_weekday(const std::string& token) {
  const std::string t = lowercase(token);
  static const char* names[] = {"mon", "tue", "wed", "thu", "fri", "sat", "sun"};
  static const char* full[] = {"monday", "tuesday", "wednesday", "thursday",
                               "friday", "saturday", "sunday"};
  for (int i = 0; i < 7; ++i) {
    if (t == names[i] || t == full[i]) return static_cast<Weekday>(i);
  }
  throw std::invalid_argument("unknown weekday: '" + token + "'");
}

void validate_instance(const Instance& inst) {
  const int n = inst.num_days;
  const int m = inst.num_cities;
  if (n < 1) throw std::invalid_argument("instance needs at least one day");
  if (m < 0) throw std::invalid_argument("negative city count");
  if (inst.travel_limit <= 0) throw std::invalid_argument("travel limit must be positive");
  if (static_cast<int>(inst.city_names.size()) != m)
    throw std::invalid_argument("city name list does not match city count");

  auto check_square = [m](const IntMatrix& mat, const char* which) {
    if (static_cast<int>(mat.size()) != m)
      throw std::invalid_argument(std::string(which) + " matrix row count != city count");
    for (const auto& row : mat)
      if (static_cast<int>(row.size()) != m)
        throw std::invalid_argument(std::string(which) + " matrix is not square");
  };
  check_square(inst.mile, "mile");
  check_square(inst.day, "day");

  for (int i = 0; i < m; ++i) {
    if (inst.mile[i][i] != 0 || inst.day[i][i] != 0)
      throw std::invalid_argument("distance matrix diagonal must be zero");
    for (int j = 0; j < m; ++j) {
      if (inst.mile[i][j] < 0) throw std::invalid_argument("negative mile entry");
      // The day matrix is floored mile/limit; a symmetrized instance may use
      // the larger of the two directions, so accept anything in that range.
      const int lo = inst.mile[i][j] / inst.travel_limit;
      const int hi = std::max(inst.mile[i][j], inst.mile[j][i]) / inst.travel_limit;
      if (inst.day[i][j] < lo || inst.day[i][j] > hi)
        throw std::invalid_argument("day matrix entry inconsistent with mile matrix");
    }
  }

  if (static_cast<int>(inst.availability.size()) != n)
    throw std::invalid_argument("availability must have one row per day");
  for (const auto& row : inst.availability)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("availability must have one column per city");
}

std::vector<std::string> weight_warnings(const Weights& w) {
  std::vector<std::string> out;
  if (w.mile <= 0) out.push_back("mile weight is not positive; miles will not be minimized");
  if (w.good >= 0) out.push_back("good-day weight is not negative; good days will not be rewarded");
  if (w.bad <= 0) out.push_back("bad-day weight is not positive; bad days will not be penalized");
  return out;
}

std::vector<std::string> penalty_warnings(const Penalties& p) {
  std::vector<std::string> out;
  if (p.avail1 < 0 || p.avail2 < 0 || p.brk < 0 || p.sep1 < 0 || p.sep2 < 0)
    out.push_back("negative penalty rewards violations");
  if (p.avail2 <= p.avail1)
    out.push_back("type 2 availability violations should cost more than type 1");
  if (p.sep2 <= p.sep1)
    out.push_back("type 2 separation violations should cost more than type 1");
  return out;
}

Weekday day_of_week(const Instance& inst, int day_index) {
  if (day_index < 0 || day_index >= inst.num_days)
    throw std::out_of_range("day index out of range");
  return static_cast<Weekday>((static_cast<int>(inst.start_weekday) + day_index) % 7);
}

bool is_good_day(const Instance& inst, int day_index) {
  const Weekday d = day_of_week(inst, day_index);
  return d == Weekday::Thu || d == Weekday::Fri;
}

bool is_bad_day(const Instance& inst, int day_index) {
  const Weekday d = day_of_week(inst, day_index);
  return d == Weekday::Mon || d == Weekday::Tue;
}

bool is_complete(const Tour& tour, const Instance& inst) {
  if (static_cast<int>(tour.size()) != inst.num_days)
    throw std::invalid_argument("tour length does not match the calendar");
  std::vector<int> seen(inst.num_cities + 1, 0);
  for (int code : tour) {
    if (code == 0) continue;
    if (code < 0 || code > inst.num_cities) return false;
    if (++seen[code] > 1) return false;
  }
  for (int k = 1; k <= inst.num_cities; ++k)
    if (seen[k] != 1) return false;
  return true;
}

}  // namespace tourcast
