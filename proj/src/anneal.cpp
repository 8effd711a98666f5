#include "tourcast/anneal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace tourcast {

void validate_params(const SAParams& params) {
  if (params.initial_temp <= 0) throw std::invalid_argument("initial temperature must be > 0");
  if (params.temp_limit <= 0) throw std::invalid_argument("temperature limit must be > 0");
  if (params.temp_limit >= params.initial_temp)
    throw std::invalid_argument("temperature limit must be below the initial temperature");
  if (params.iters_per_temp < 1) throw std::invalid_argument("iterations per stage must be >= 1");
  if (params.alpha <= 0 || params.alpha >= 1) throw std::invalid_argument("alpha must be in (0,1)");
  if (params.time_budget_seconds < 0) throw std::invalid_argument("time budget must be >= 0");
}

std::uint64_t logical_move_budget(const SAParams& params) {
  if (params.max_moves > 0) return params.max_moves;
  if (params.time_budget_seconds <= 0) return 0;
  return static_cast<std::uint64_t>(params.time_budget_seconds *
                                    static_cast<double>(kNominalMovesPerSecond));
}

int cooling_stage_count(const SAParams& params) {
  // Same float recurrence as the run loop, so counts always agree with it.
  int stages = 0;
  for (double t = params.initial_temp; t > params.temp_limit; t *= params.alpha) ++stages;
  return stages;
}

Move propose_move(const Tour& tour, Rng& rng) {
  const int n = static_cast<int>(tour.size());
  if (n < 2) throw std::invalid_argument("no two-exchange move exists on fewer than two days");
  if (std::all_of(tour.begin(), tour.end(), [](int c) { return c == 0; }))
    throw std::invalid_argument("no two-exchange move exists on an all-rest tour");
  while (true) {
    const int i = static_cast<int>(uniform_index(rng, n));
    int j = static_cast<int>(uniform_index(rng, n - 1));
    if (j >= i) ++j;
    if (tour[i] == 0 && tour[j] == 0) continue;
    return {std::min(i, j), std::max(i, j)};
  }
}

bool sa_accept(double delta, double temperature, double u) {
  if (temperature <= 0) throw std::invalid_argument("temperature must be positive");
  if (delta < 0) return true;
  return u < std::exp(-delta / temperature);
}

double cost_of(const Tour& tour, const Instance& inst, const Weights& w, const Penalties& p,
               int break_limit) {
  return relaxed_cost(evaluate(tour, inst, break_limit), w, p).total;
}

SAResult simulated_annealing(const Instance& inst, const Tour& initial, const Weights& w,
                             const Penalties& p, const SAParams& params, int break_limit) {
  validate_params(params);
  if (static_cast<int>(initial.size()) != inst.num_days)
    throw std::invalid_argument("initial tour length does not match the calendar");
  if (initial.empty()) throw std::invalid_argument("initial tour is empty");

  const std::uint64_t budget = logical_move_budget(params);
  const auto t_start = std::chrono::steady_clock::now();
  auto elapsed = [&t_start]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  };

  SAResult result;
  result.best = initial;
  result.best_cost = cost_of(initial, inst, w, p, break_limit);
  result.best_eval = evaluate(initial, inst, break_limit);
  RunTrace& trace = result.trace;
  trace.rng_algorithm = kRngAlgorithm;
  trace.entries.push_back(
      {0, 0.0, params.initial_temp, result.best_cost, result.best_cost, false});

  const bool movable =
      initial.size() >= 2 && std::any_of(initial.begin(), initial.end(), [](int c) { return c != 0; });
  if (budget == 0 || !movable) return result;

  Rng rng(params.seed);
  const double initial_cost = result.best_cost;
  Tour current = initial;
  double current_cost = initial_cost;
  std::uint64_t moves = 0;

  while (moves < budget && !trace.wallclock_cutoff) {
    if (params.restart_reset) {
      current = initial;
      current_cost = initial_cost;
    }
    ++trace.restarts;
    int stages = 0;
    for (double t = params.initial_temp; t > params.temp_limit; t *= params.alpha) {
      ++stages;
      for (int it = 0; it < params.iters_per_temp && moves < budget; ++it) {
        const Move mv = propose_move(current, rng);
        std::swap(current[mv.i], current[mv.j]);
        const double candidate_cost = cost_of(current, inst, w, p, break_limit);
        const double delta = candidate_cost - current_cost;
        bool accepted;
        if (delta < 0) {
          accepted = true;
        } else {
          accepted = sa_accept(delta, t, uniform_unit(rng));
        }
        ++moves;
        if (accepted) {
          current_cost = candidate_cost;
          if (current_cost < result.best_cost) {
            result.best = current;
            result.best_cost = current_cost;
            result.best_eval = evaluate(current, inst, break_limit);
            trace.entries.push_back(
                {moves, elapsed(), t, current_cost, result.best_cost, true});
            trace.improvements.push_back({moves, result.best_cost, current, result.best_eval});
          }
        } else {
          std::swap(current[mv.i], current[mv.j]);  // undo
        }
      }
      trace.entries.push_back({moves, elapsed(), t, current_cost, result.best_cost, false});
      if (moves >= budget) break;
      if (params.time_budget_seconds > 0 && elapsed() > params.time_budget_seconds) {
        trace.wallclock_cutoff = true;
        break;
      }
    }
    trace.stages_per_restart.push_back(stages);
  }
  trace.total_moves = moves;
  return result;
}

}  // namespace tourcast
