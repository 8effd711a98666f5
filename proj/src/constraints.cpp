#include "tourcast/constraints.hpp"

#include <stdexcept>

namespace tourcast {

ViolationReport count_availability_violations(const Tour& tour, const Instance& inst) {
  ViolationReport report;
  for (int i = 0; i < static_cast<int>(tour.size()); ++i) {
    const int city = tour[i];
    if (city == 0) continue;
    switch (inst.availability[i][city - 1]) {
      case AvailabilityCode::Available:
        break;
      case AvailabilityCode::RelativelyUnavailable:
        ++report.avail_type1;
        report.locations.push_back({ViolationKind::AvailabilityType1, i, city});
        break;
      case AvailabilityCode::AbsolutelyUnavailable:
        ++report.avail_type2;
        report.locations.push_back({ViolationKind::AvailabilityType2, i, city});
        break;
    }
  }
  return report;
}

ViolationReport count_break_violations(const Tour& tour, int break_limit) {
  if (break_limit < 1) throw std::invalid_argument("break limit must be >= 1");
  ViolationReport report;
  const int n = static_cast<int>(tour.size());
  for (int i = 0; i + break_limit < n; ++i) {
    bool all_performances = true;
    for (int k = i; k <= i + break_limit; ++k) {
      if (tour[k] == 0) {
        all_performances = false;
        break;
      }
    }
    if (all_performances) {
      ++report.break_count;
      report.locations.push_back({ViolationKind::Break, i, 0, i + break_limit, 0, break_limit});
    }
  }
  return report;
}

ViolationReport count_separation_violations(const Tour& tour, const Instance& inst) {
  ViolationReport report;
  const int n = static_cast<int>(tour.size());
  int prev_day = -1;
  for (int i = 0; i < n; ++i) {
    if (tour[i] == 0) continue;
    if (prev_day >= 0) {
      const int from = tour[prev_day];
      const int to = tour[i];
      const int required = inst.day[from - 1][to - 1];
      const int deficit = required - (i - prev_day);
      if (deficit == 1) {
        ++report.sep_type1;
        report.locations.push_back(
            {ViolationKind::SeparationType1, prev_day, from, i, to, required});
      } else if (deficit >= 2) {
        ++report.sep_type2;
        report.locations.push_back(
            {ViolationKind::SeparationType2, prev_day, from, i, to, required});
      }
    }
    prev_day = i;
  }
  return report;
}

Objectives objectives(const Tour& tour, const Instance& inst) {
  Objectives obj;
  int prev_day = -1;
  for (int i = 0; i < static_cast<int>(tour.size()); ++i) {
    if (tour[i] == 0) continue;
    if (prev_day >= 0) obj.total_miles += inst.mile[tour[prev_day] - 1][tour[i] - 1];
    if (is_good_day(inst, i)) ++obj.good_days;
    if (is_bad_day(inst, i)) ++obj.bad_days;
    prev_day = i;
  }
  return obj;
}

Evaluation evaluate(const Tour& tour, const Instance& inst, int break_limit) {
  Evaluation ev;
  ev.objectives = objectives(tour, inst);
  ev.violations = count_availability_violations(tour, inst);

  ViolationReport breaks = count_break_violations(tour, break_limit);
  ev.violations.break_count = breaks.break_count;
  ev.violations.locations.insert(ev.violations.locations.end(), breaks.locations.begin(),
                                 breaks.locations.end());

  ViolationReport sep = count_separation_violations(tour, inst);
  ev.violations.sep_type1 = sep.sep_type1;
  ev.violations.sep_type2 = sep.sep_type2;
  ev.violations.locations.insert(ev.violations.locations.end(), sep.locations.begin(),
                                 sep.locations.end());
  return ev;
}

bool is_strictly_feasible(const Tour& tour, const Instance& inst, int break_limit) {
  if (evaluate(tour, inst, break_limit).violations.total() != 0) return false;
  for (int i = 0; i < static_cast<int>(tour.size()); ++i) {
    if (tour[i] != 0 && inst.availability[i][tour[i] - 1] != AvailabilityCode::Available)
      return false;
  }
  return true;
}

}  // namespace tourcast
