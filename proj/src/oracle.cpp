#include "tourcast/oracle.hpp"

#include <limits>

#include "tourcast/errors.hpp"

namespace tourcast {

std::uint64_t complete_tour_count(int num_days, int num_cities) {
  if (num_cities > num_days) return 0;
  std::uint64_t count = 1;
  for (int i = 0; i < num_cities; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(num_days - i);
    if (count > std::numeric_limits<std::uint64_t>::max() / factor)
      return std::numeric_limits<std::uint64_t>::max();
    count *= factor;
  }
  return count;
}

namespace {

void assign_city(Tour& tour, int city, int num_cities,
                 const std::function<void(const Tour&)>& fn) {
  if (city > num_cities) {
    fn(tour);
    return;
  }
  for (size_t d = 0; d < tour.size(); ++d) {
    if (tour[d] != 0) continue;
    tour[d] = city;
    assign_city(tour, city + 1, num_cities, fn);
    tour[d] = 0;
  }
}

}  // namespace

void enumerate_complete_tours(const Instance& inst, std::uint64_t cap,
                              const std::function<void(const Tour&)>& fn) {
  const std::uint64_t count = complete_tour_count(inst.num_days, inst.num_cities);
  if (count > cap)
    throw EnumerationCapError("enumeration of " + std::to_string(count) +
                              " complete tours exceeds the cap of " + std::to_string(cap));
  Tour tour(inst.num_days, 0);
  assign_city(tour, 1, inst.num_cities, fn);
}

// Deliberately written with different loop structure from the evaluate()
// path: performance-day lists and run lengths instead of day-by-day scans.
Evaluation recount_evaluation(const Tour& tour, const Instance& inst, int break_limit) {
  Evaluation ev;
  const int n = static_cast<int>(tour.size());

  std::vector<int> perf_days;
  for (int d = 0; d < n; ++d)
    if (tour[d] != 0) perf_days.push_back(d);

  // Availability, counted city by city.
  for (int city = 1; city <= inst.num_cities; ++city) {
    for (int d : perf_days) {
      if (tour[d] != city) continue;
      const AvailabilityCode code = inst.availability[d][city - 1];
      if (code == AvailabilityCode::RelativelyUnavailable) ++ev.violations.avail_type1;
      if (code == AvailabilityCode::AbsolutelyUnavailable) ++ev.violations.avail_type2;
    }
  }

  // Breaks: a run of L consecutive performance days holds L - X windows of
  // X + 1 straight performances.
  int run = 0;
  for (int d = 0; d <= n; ++d) {
    if (d < n && tour[d] != 0) {
      ++run;
    } else {
      if (run > break_limit) ev.violations.break_count += run - break_limit;
      run = 0;
    }
  }

  // Separation and miles over adjacent performances.
  for (size_t k = 0; k + 1 < perf_days.size(); ++k) {
    const int from = tour[perf_days[k]];
    const int to = tour[perf_days[k + 1]];
    const int gap = perf_days[k + 1] - perf_days[k];
    const int short_by = inst.day[from - 1][to - 1] - gap;
    if (short_by == 1) ++ev.violations.sep_type1;
    if (short_by > 1) ++ev.violations.sep_type2;
    ev.objectives.total_miles += inst.mile[from - 1][to - 1];
  }

  // Good and bad days from the start weekday alone.
  for (int d : perf_days) {
    const int weekday = (static_cast<int>(inst.start_weekday) + d) % 7;
    if (weekday == 3 || weekday == 4) ++ev.objectives.good_days;  // Thu, Fri
    if (weekday == 0 || weekday == 1) ++ev.objectives.bad_days;   // Mon, Tue
  }
  return ev;
}

OracleResult brute_force_best(const Instance& inst, const Weights& w, const Penalties& p,
                              int break_limit, std::uint64_t cap) {
  OracleResult result;
  enumerate_complete_tours(inst, cap, [&](const Tour& tour) {
    const Evaluation ev = recount_evaluation(tour, inst, break_limit);
    const double cost = w.mile * static_cast<double>(ev.objectives.total_miles) +
                        w.good * ev.objectives.good_days + w.bad * ev.objectives.bad_days +
                        p.avail1 * ev.violations.avail_type1 +
                        p.avail2 * ev.violations.avail_type2 +
                        p.brk * ev.violations.break_count + p.sep1 * ev.violations.sep_type1 +
                        p.sep2 * ev.violations.sep_type2;
    if (result.num_enumerated == 0 || cost < result.best_cost) {
      result.best_tour = tour;
      result.best_cost = cost;
      result.ties = 1;
    } else if (cost == result.best_cost) {
      ++result.ties;
      if (tour < result.best_tour) result.best_tour = tour;
    }
    ++result.num_enumerated;
  });
  return result;
}

}  // namespace tourcast
