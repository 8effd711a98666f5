#pragma once

#include <string>
#include <vector>

namespace tourcast {

using IntMatrix = std::vector<std::vector<int>>;

enum class Weekday { Mon = 0, Tue, Wed, Thu, Fri, Sat, Sun };

const char* weekday_name(Weekday d);
// Accepts "mon".."sun" and full names, case-insensitive. Throws std::invalid_argument.
Weekday parse_weekday(const std::string& token);

// Per-city, per-day availability after merging the venues of a city.
// The numeric values are part of the file formats and must not change.
enum class AvailabilityCode : int {
  Available = 1,
  RelativelyUnavailable = 0,
  AbsolutelyUnavailable = -1,
};

// A tour assigns at most one city to each day of the calendar:
// v[i] = 0 means a rest or travel day, v[i] = k > 0 a performance in city k.
using Tour = std::vector<int>;

struct Instance {
  int num_days = 0;  // n
  Weekday start_weekday = Weekday::Mon;
  int num_cities = 0;  // m
  int travel_limit = 500;  // miles the band can cover in one day
  std::vector<std::string> city_names;  // size m, city k -> city_names[k-1]
  IntMatrix mile;  // m x m road miles, not necessarily symmetric
  IntMatrix day;   // m x m desirable travel days, floor(mile / travel_limit)
  std::vector<std::vector<AvailabilityCode>> availability;  // n rows x m columns

  const std::string& city_name(int code) const { return city_names[code - 1]; }
};

// Checks dimensions, zero diagonals and the mile/day consistency bound.
// Throws std::invalid_argument with a description of the first failure.
void validate_instance(const Instance& inst);

// Objective weights of the scalar cost. Minimization wants mile > 0,
// bad > 0 and good < 0; other signs are legal but worth a warning.
struct Weights {
  double mile = 20.0;
  double good = -200.0;
  double bad = 200.0;
};

std::vector<std::string> weight_warnings(const Weights& w);

// Penalty weight per violation, by type.
struct Penalties {
  double avail1 = 10000.0;
  double avail2 = 1000000.0;
  double brk = 10000.0;
  double sep1 = 10000.0;
  double sep2 = 2000000.0;
};

std::vector<std::string> penalty_warnings(const Penalties& p);

struct Objectives {
  long long total_miles = 0;  // x1
  int good_days = 0;          // x2: performances on Thu/Fri
  int bad_days = 0;           // x3: performances on Mon/Tue
};

// Weekday of a calendar day, derived from the start weekday alone.
Weekday day_of_week(const Instance& inst, int day_index);
bool is_good_day(const Instance& inst, int day_index);  // Thu or Fri
bool is_bad_day(const Instance& inst, int day_index);   // Mon or Tue

// True iff every city 1..m performs exactly once in the tour.
// Throws std::invalid_argument if the tour length does not match.
bool is_complete(const Tour& tour, const Instance& inst);

}  // namespace tourcast
