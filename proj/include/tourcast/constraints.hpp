#pragma once

#include <vector>

#include "tourcast/model.hpp"

namespace tourcast {

// Maximum run of consecutive performance days before a break is required.
inline constexpr int kDefaultBreakLimit = 4;

enum class ViolationKind {
  AvailabilityType1,  // performance on a relatively unavailable day
  AvailabilityType2,  // performance on an absolutely unavailable day
  Break,              // break_limit + 1 consecutive performances
  SeparationType1,    // arrives exactly one day early
  SeparationType2,    // arrives two or more days early
};

struct Violation {
  ViolationKind kind;
  int day = 0;        // day the violation is charged to (window start for breaks)
  int city = 0;       // city performing that day, 0 for break windows
  int next_day = -1;  // separation only: day of the following performance
  int next_city = 0;  // separation only: its city
  int required = 0;   // separation only: day-matrix requirement for the leg
};

struct ViolationReport {
  int avail_type1 = 0;  // y1
  int avail_type2 = 0;  // y2
  int break_count = 0;  // y3
  int sep_type1 = 0;    // y4
  int sep_type2 = 0;    // y5
  std::vector<Violation> locations;

  int total() const { return avail_type1 + avail_type2 + break_count + sep_type1 + sep_type2; }
};

struct Evaluation {
  Objectives objectives;
  ViolationReport violations;
};

// Each counter returns a report carrying only its own counts and locations.
// Preconditions (unchecked): tour length equals inst.num_days and every
// entry is a valid city code in [0, m].

ViolationReport count_availability_violations(const Tour& tour, const Instance& inst);

// One violation per window of break_limit + 1 consecutive performance days;
// overlapping windows each count.
ViolationReport count_break_violations(const Tour& tour, int break_limit);

// For each performance and its successor, the gap in days must reach the
// day-matrix requirement. One day short is type 1, two or more type 2.
ViolationReport count_separation_violations(const Tour& tour, const Instance& inst);

Objectives objectives(const Tour& tour, const Instance& inst);

Evaluation evaluate(const Tour& tour, const Instance& inst,
                    int break_limit = kDefaultBreakLimit);

// Zero violations of all five types and every performance on a day coded
// Available (relative availability is not enough).
bool is_strictly_feasible(const Tour& tour, const Instance& inst,
                          int break_limit = kDefaultBreakLimit);

}  // namespace tourcast
