#pragma once

#include <cstdint>
#include <functional>

#include "tourcast/constraints.hpp"
#include "tourcast/model.hpp"

namespace tourcast {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

struct OracleResult {
  Tour best_tour;
  double best_cost = 0.0;
  std::uint64_t num_enumerated = 0;
  std::uint64_t ties = 0;  // tours sharing the best cost
};

// n * (n-1) * ... * (n-m+1), saturating at UINT64_MAX.
std::uint64_t complete_tour_count(int num_days, int num_cities);

// Calls fn with every tour that performs each city exactly once.
// Throws EnumerationCapError up front when the count exceeds the cap.
void enumerate_complete_tours(const Instance& inst, std::uint64_t cap,
                              const std::function<void(const Tour&)>& fn);

// Ground-truth recount of objectives and violations, coded from scratch with
// run/pair scans so it shares no logic with the evaluate() path it checks.
Evaluation recount_evaluation(const Tour& tour, const Instance& inst,
                              int break_limit = kDefaultBreakLimit);

// Exact minimizer of the relaxed cost over all complete tours; ties break
// toward the lexicographically smallest tour vector.
OracleResult brute_force_best(const Instance& inst, const Weights& w, const Penalties& p,
                              int break_limit = kDefaultBreakLimit,
                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace tourcast
