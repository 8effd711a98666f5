#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "helpers.hpp"
#include "tourcast/anneal.hpp"
#include "tourcast/construct.hpp"
#include "tourcast/ingest.hpp"
#include "tourcast/model.hpp"

using namespace tourcast;
using test_helpers::tiny_instance;

TEST_CASE("default cooling ladder has 45 stages") {
  SAParams params;
  CHECK(cooling_stage_count(params) == 45);
  params.alpha = 0.5;
  params.initial_temp = 8.0;
  params.temp_limit = 1.0;
  CHECK(cooling_stage_count(params) == 3);  // 8 -> 4 -> 2 -> 1 stops
}

TEST_CASE("logical move budget comes from the nominal rate or an override") {
  SAParams params;
  params.time_budget_seconds = 30.0;
  CHECK(logical_move_budget(params) == 30 * kNominalMovesPerSecond);
  params.time_budget_seconds = 0.25;
  CHECK(logical_move_budget(params) == kNominalMovesPerSecond / 4);
  params.max_moves = 123;
  CHECK(logical_move_budget(params) == 123);
  params.max_moves = 0;
  params.time_budget_seconds = 0.0;
  CHECK(logical_move_budget(params) == 0);
}

TEST_CASE("parameter validation rejects out-of-range settings") {
  SAParams ok;
  CHECK_NOTHROW(validate_params(ok));
  auto reject = [](auto mutate) {
    SAParams p;
    mutate(p);
    CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  };
  reject([](SAParams& p) { p.initial_temp = 0; });
  reject([](SAParams& p) { p.temp_limit = 0; });
  reject([](SAParams& p) { p.temp_limit = p.initial_temp; });
  reject([](SAParams& p) { p.iters_per_temp = 0; });
  reject([](SAParams& p) { p.alpha = 1.0; });
  reject([](SAParams& p) { p.alpha = 0.0; });
  reject([](SAParams& p) { p.time_budget_seconds = -1; });
}

TEST_CASE("proposed moves are uniform over valid slot pairs") {
  const Tour tour = {1, 2, 0};
  Rng rng(99);
  std::map<std::pair<int, int>, int> seen;
  const int draws = 30000;
  for (int k = 0; k < draws; ++k) {
    const Move mv = propose_move(tour, rng);
    CHECK(mv.i < mv.j);
    CHECK((tour[mv.i] != 0 || tour[mv.j] != 0));
    ++seen[{mv.i, mv.j}];
  }
  CHECK(seen.size() == 3);  // (0,1) (0,2) (1,2)
  for (const auto& [pair, count] : seen) {
    const double freq = static_cast<double>(count) / draws;
    CHECK(freq == doctest::Approx(1.0 / 3.0).epsilon(0.15));
  }
}

TEST_CASE("proposed moves never pair two rest days") {
  const Tour tour = {1, 0, 0, 0, 0};
  Rng rng(7);
  for (int k = 0; k < 2000; ++k) {
    const Move mv = propose_move(tour, rng);
    CHECK(mv.i == 0);  // only slot 0 holds a performance
    CHECK(mv.j >= 1);
  }
}

TEST_CASE("proposing a move on a degenerate tour throws") {
  Rng rng(1);
  CHECK_THROWS_AS(propose_move({0, 0, 0}, rng), std::invalid_argument);
  CHECK_THROWS_AS(propose_move({1}, rng), std::invalid_argument);
  CHECK_THROWS_AS(propose_move({}, rng), std::invalid_argument);
}

TEST_CASE("acceptance rule: downhill always, uphill by temperature") {
  CHECK(sa_accept(-1.0, 1000.0, 0.999999));
  CHECK(sa_accept(-1e-9, 1.0, 0.999999));
  // Zero delta accepts for every u below 1.
  CHECK(sa_accept(0.0, 5000.0, 0.0));
  CHECK(sa_accept(0.0, 5000.0, 0.9999999));
  // delta == t accepts exactly when u < exp(-1).
  const double e1 = std::exp(-1.0);
  CHECK(sa_accept(5000.0, 5000.0, e1 - 1e-9));
  CHECK_FALSE(sa_accept(5000.0, 5000.0, e1 + 1e-9));
  // Hot runs accept nearly everything, cold runs nearly nothing.
  CHECK(sa_accept(10.0, 1e9, 0.99));
  CHECK_FALSE(sa_accept(1e9, 10.0, 1e-6));
  CHECK_THROWS_AS(sa_accept(1.0, 0.0, 0.5), std::invalid_argument);
}

namespace {

SAParams quick_params(std::uint64_t max_moves, std::uint64_t seed) {
  SAParams params;
  params.max_moves = max_moves;
  params.seed = seed;
  params.time_budget_seconds = 600;  // generous; the logical budget governs
  return params;
}

}  // namespace

TEST_CASE("zero budget hands back the initial tour") {
  const Instance inst = tiny_instance();
  const Tour initial = construct_initial(inst, 3);
  SAParams params;
  params.max_moves = 0;
  params.time_budget_seconds = 0;
  const SAResult res = simulated_annealing(inst, initial, Weights{}, Penalties{}, params);
  CHECK(res.best == initial);
  CHECK(res.best_cost == cost_of(initial, inst, Weights{}, Penalties{}));
  CHECK(res.trace.total_moves == 0);
  CHECK(res.trace.restarts == 0);
  CHECK(res.trace.entries.size() == 1);
}

TEST_CASE("annealing replays bit for bit from the seed") {
  const Instance inst = tiny_instance();
  const Tour initial = construct_initial(inst, 5);
  const SAParams params = quick_params(40000, 42);
  const SAResult a = simulated_annealing(inst, initial, Weights{}, Penalties{}, params);
  const SAResult b = simulated_annealing(inst, initial, Weights{}, Penalties{}, params);
  CHECK(a.best == b.best);
  CHECK(a.best_cost == b.best_cost);
  CHECK(a.trace.total_moves == b.trace.total_moves);
  CHECK(a.trace.restarts == b.trace.restarts);
  CHECK(a.trace.improvements.size() == b.trace.improvements.size());
  CHECK(a.trace.rng_algorithm == "mt19937_64/reject-index/53bit-unit");
  CHECK_FALSE(a.trace.wallclock_cutoff);
}

TEST_CASE("best cost never rises along the trace") {
  const Instance inst = tiny_instance();
  const Tour initial = construct_initial(inst, 11);
  const SAResult res =
      simulated_annealing(inst, initial, Weights{}, Penalties{}, quick_params(60000, 8));
  CHECK(res.best_cost <= cost_of(initial, inst, Weights{}, Penalties{}));
  double prev = res.trace.entries.front().best_cost;
  for (const TraceEntry& e : res.trace.entries) {
    CHECK(e.best_cost <= prev);
    CHECK(e.best_cost <= e.current_cost + 1e-9);
    prev = e.best_cost;
  }
  // Improvement snapshots decrease strictly and end at the reported best.
  double last = res.trace.entries.front().best_cost;
  for (const BestSnapshot& s : res.trace.improvements) {
    CHECK(s.cost < last);
    last = s.cost;
  }
  if (!res.trace.improvements.empty())
    CHECK(res.trace.improvements.back().cost == res.best_cost);
}

TEST_CASE("every finished restart runs the full cooling ladder") {
  const Instance inst = tiny_instance();
  const Tour initial = construct_initial(inst, 2);
  // 45 stages x 5000 iterations = 225000 moves per restart; budget two exactly.
  const SAResult res =
      simulated_annealing(inst, initial, Weights{}, Penalties{}, quick_params(450000, 17));
  CHECK(res.trace.restarts == 2);
  CHECK(res.trace.total_moves == 450000);
  REQUIRE(res.trace.stages_per_restart.size() == 2);
  for (int stages : res.trace.stages_per_restart) CHECK(stages == 45);
}

TEST_CASE("a budget cut mid-restart truncates only the last ladder") {
  const Instance inst = tiny_instance();
  const Tour initial = construct_initial(inst, 2);
  const SAResult res =
      simulated_annealing(inst, initial, Weights{}, Penalties{}, quick_params(230000, 17));
  REQUIRE(res.trace.stages_per_restart.size() == 2);
  CHECK(res.trace.stages_per_restart[0] == 45);
  CHECK(res.trace.stages_per_restart[1] == 1);  // 5000 leftover moves, first stage
  CHECK(res.trace.total_moves == 230000);
}

TEST_CASE("disabling the restart reset keeps the walk going") {
  const Instance inst = tiny_instance();
  const Tour initial = construct_initial(inst, 4);
  SAParams params = quick_params(450000, 23);
  params.restart_reset = false;
  const SAResult res = simulated_annealing(inst, initial, Weights{}, Penalties{}, params);
  CHECK(res.trace.restarts == 2);
  CHECK(res.best_cost <= cost_of(initial, inst, Weights{}, Penalties{}));
  const SAResult again = simulated_annealing(inst, initial, Weights{}, Penalties{}, params);
  CHECK(res.best == again.best);
}

TEST_CASE("annealing preserves completeness") {
  GeneratorParams gp;
  gp.num_cities = 5;
  gp.num_days = 12;
  for (int seed = 1; seed <= 5; ++seed) {
    const Instance inst = generate_random_instance(gp, 7000 + seed);
    const Tour initial = construct_initial(inst, seed);
    const SAResult res =
        simulated_annealing(inst, initial, Weights{}, Penalties{}, quick_params(30000, seed));
    CHECK(is_complete(res.best, inst));
    CHECK(res.best_cost == cost_of(res.best, inst, Weights{}, Penalties{}));
  }
}

TEST_CASE("mismatched initial tour length is rejected") {
  const Instance inst = tiny_instance();
  CHECK_THROWS_AS(
      simulated_annealing(inst, Tour{1, 2, 3}, Weights{}, Penalties{}, quick_params(100, 1)),
      std::invalid_argument);
}
