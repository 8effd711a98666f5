#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tourcast/constraints.hpp"
#include "tourcast/cost.hpp"
#include "tourcast/model.hpp"
#include "tourcast/rng.hpp"

namespace tourcast {

// Moves are budgeted logically so a run replays bit-for-bit from its seed:
// a wall-clock budget is converted once to a move count at this assumed
// rate, and the clock itself is only a secondary emergency stop.
inline constexpr std::uint64_t kNominalMovesPerSecond = 200000;

struct SAParams {
  double initial_temp = 5000.0;
  double temp_limit = 500.0;
  int iters_per_temp = 5000;
  double alpha = 0.95;
  double time_budget_seconds = 30.0;
  std::uint64_t max_moves = 0;  // 0: derive from the time budget
  std::uint64_t seed = 0;
  bool restart_reset = true;  // reset to the initial tour at each outer restart
};

// Throws std::invalid_argument on out-of-range parameters.
void validate_params(const SAParams& params);

// Resolved logical move budget (max_moves, or time budget times the nominal rate).
std::uint64_t logical_move_budget(const SAParams& params);

// Number of temperature stages one restart runs: cooling steps from
// initial_temp by factor alpha while above temp_limit.
int cooling_stage_count(const SAParams& params);

// Swap of two day slots; at least one of them holds a performance.
struct Move {
  int i = 0;
  int j = 0;
};

// Uniform over all valid moves. Throws std::invalid_argument when no move
// exists (all rest days, or fewer than two days).
Move propose_move(const Tour& tour, Rng& rng);

// Downhill moves always pass; uphill moves pass when u < exp(-delta / t).
bool sa_accept(double delta, double temperature, double u);

struct TraceEntry {
  std::uint64_t move_index = 0;
  double elapsed_seconds = 0.0;
  double temperature = 0.0;
  double current_cost = 0.0;
  double best_cost = 0.0;
  bool improved = false;  // entry records a new best tour
};

struct BestSnapshot {
  std::uint64_t move_index = 0;
  double cost = 0.0;
  Tour tour;
  Evaluation eval;
};

struct RunTrace {
  std::vector<TraceEntry> entries;       // start, stage ends, and improvements
  std::vector<BestSnapshot> improvements;
  std::uint64_t total_moves = 0;
  int restarts = 0;
  std::vector<int> stages_per_restart;
  bool wallclock_cutoff = false;
  std::string rng_algorithm;
};

struct SAResult {
  Tour best;
  double best_cost = 0.0;
  Evaluation best_eval;
  RunTrace trace;
};

// Relaxed cost of a tour; the quantity the annealer minimizes.
double cost_of(const Tour& tour, const Instance& inst, const Weights& w,
               const Penalties& p, int break_limit = kDefaultBreakLimit);

// Restarted simulated annealing from the given initial tour. Deterministic
// for a fixed seed and logical budget.
SAResult simulated_annealing(const Instance& inst, const Tour& initial, const Weights& w,
                             const Penalties& p, const SAParams& params,
                             int break_limit = kDefaultBreakLimit);

}  // namespace tourcast
