#include <doctest.h>

#include <cstdint>
#include <limits>
#include <vector>

#include "helpers.hpp"
#include "tourcast/cost.hpp"
#include "tourcast/errors.hpp"
#include "tourcast/ingest.hpp"
#include "tourcast/model.hpp"
#include "tourcast/oracle.hpp"
#include "tourcast/rng.hpp"

using namespace tourcast;
using test_helpers::tiny_instance;

namespace {

bool same_counts(const Evaluation& a, const Evaluation& b) {
  return a.objectives.total_miles == b.objectives.total_miles &&
         a.objectives.good_days == b.objectives.good_days &&
         a.objectives.bad_days == b.objectives.bad_days &&
         a.violations.avail_type1 == b.violations.avail_type1 &&
         a.violations.avail_type2 == b.violations.avail_type2 &&
         a.violations.break_count == b.violations.break_count &&
         a.violations.sep_type1 == b.violations.sep_type1 &&
         a.violations.sep_type2 == b.violations.sep_type2;
}

Tour random_tour(const Instance& inst, Rng& rng, bool complete) {
  Tour tour(inst.num_days, 0);
  if (complete) {
    std::vector<int> days(inst.num_days);
    for (int d = 0; d < inst.num_days; ++d) days[d] = d;
    for (int c = 1; c <= inst.num_cities; ++c) {
      const auto pick = uniform_index(rng, days.size());
      tour[days[pick]] = c;
      days.erase(days.begin() + static_cast<long>(pick));
    }
  } else {
    for (int d = 0; d < inst.num_days; ++d)
      tour[d] = uniform_int(rng, 0, inst.num_cities);
  }
  return tour;
}

}  // namespace

TEST_CASE("complete tour counts follow the falling factorial") {
  CHECK(complete_tour_count(2, 1) == 2);
  CHECK(complete_tour_count(2, 2) == 2);
  CHECK(complete_tour_count(6, 3) == 120);
  CHECK(complete_tour_count(7, 3) == 210);
  CHECK(complete_tour_count(42, 1) == 42);
  CHECK(complete_tour_count(5, 0) == 1);   // the all-rest tour
  CHECK(complete_tour_count(2, 3) == 0);   // more cities than days
  CHECK(complete_tour_count(42, 15) == std::numeric_limits<std::uint64_t>::max());
  CHECK(complete_tour_count(100, 20) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("enumeration visits every complete tour exactly once") {
  Instance inst = tiny_instance();  // 3 cities over 7 days: 210 tours
  std::vector<Tour> seen;
  enumerate_complete_tours(inst, kDefaultEnumerationCap,
                           [&](const Tour& t) { seen.push_back(t); });
  CHECK(seen.size() == 210);
  for (const Tour& t : seen) CHECK(is_complete(t, inst));
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("enumeration refuses to start past the cap") {
  const Instance inst = tiny_instance();
  CHECK_THROWS_AS(
      enumerate_complete_tours(inst, 100, [](const Tour&) {}),
      EnumerationCapError);
  // The callback must not have been entered at all for an oversized space.
  int calls = 0;
  try {
    enumerate_complete_tours(inst, 209, [&](const Tour&) { ++calls; });
  } catch (const EnumerationCapError&) {
  }
  CHECK(calls == 0);
}

TEST_CASE("no cities means one all-rest tour") {
  Instance inst;
  inst.num_cities = 0;
  inst.num_days = 4;
  inst.availability.assign(4, {});
  int calls = 0;
  Tour only;
  enumerate_complete_tours(inst, 10, [&](const Tour& t) {
    ++calls;
    only = t;
  });
  CHECK(calls == 1);
  CHECK(only == Tour{0, 0, 0, 0});
  const OracleResult res = brute_force_best(inst, Weights{}, Penalties{});
  CHECK(res.num_enumerated == 1);
  CHECK(res.best_cost == 0.0);
  CHECK(res.ties == 1);
}

TEST_CASE("recount agrees with the evaluator on random tours") {
  GeneratorParams gp;
  gp.num_cities = 6;
  gp.num_days = 16;
  Rng rng(314159);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = generate_random_instance(gp, 9000 + trial);
    const Tour complete = random_tour(inst, rng, true);
    CHECK(same_counts(recount_evaluation(complete, inst), evaluate(complete, inst)));
    const Tour loose = random_tour(inst, rng, false);
    CHECK(same_counts(recount_evaluation(loose, inst), evaluate(loose, inst)));
    // Alternate break limits must agree too.
    CHECK(recount_evaluation(loose, inst, 2).violations.break_count ==
          evaluate(loose, inst, 2).violations.break_count);
  }
}

TEST_CASE("brute force result is a true lower bound") {
  const Instance inst = tiny_instance();
  const Weights w;
  const Penalties p;
  const OracleResult res = brute_force_best(inst, w, p);
  CHECK(res.num_enumerated == 210);
  std::uint64_t at_best = 0;
  enumerate_complete_tours(inst, kDefaultEnumerationCap, [&](const Tour& t) {
    const Evaluation ev = recount_evaluation(t, inst);
    const double cost = relaxed_cost(ev, w, p).total;
    CHECK(cost >= res.best_cost);
    if (cost == res.best_cost) ++at_best;
  });
  CHECK(at_best == res.ties);
  CHECK(relaxed_cost(recount_evaluation(res.best_tour, inst), w, p).total == res.best_cost);
  // Default penalties dwarf the objective range here, so the optimum is clean.
  CHECK(recount_evaluation(res.best_tour, inst).violations.total() == 0);
}

TEST_CASE("ties break toward the lexicographically smallest vector") {
  Instance inst;
  inst.num_cities = 1;
  inst.num_days = 2;
  inst.city_names = {"Solo"};
  inst.mile = {{0}};
  inst.day = {{0}};
  inst.availability.assign(2, {AvailabilityCode::Available});
  const OracleResult res =
      brute_force_best(inst, Weights{0, 0, 0}, Penalties{0, 0, 0, 0, 0});
  CHECK(res.num_enumerated == 2);  // [1,0] and [0,1]
  CHECK(res.ties == 2);
  CHECK(res.best_tour == Tour{0, 1});
}

TEST_CASE("a good-day-only objective maximizes Thursday and Friday shows") {
  const Instance inst = tiny_instance();  // Monday start: good slots are days 3 and 4
  const OracleResult res =
      brute_force_best(inst, Weights{0, -1, 0}, Penalties{0, 0, 0, 0, 0});
  CHECK(res.best_cost == -2.0);
  CHECK(recount_evaluation(res.best_tour, inst).objectives.good_days == 2);
}

TEST_CASE("the enumeration cap is an argument, not a constant") {
  const Instance inst = tiny_instance();  // 210 complete tours
  CHECK_THROWS_AS(brute_force_best(inst, Weights{}, Penalties{}, kDefaultBreakLimit, 100),
                  EnumerationCapError);
  CHECK_NOTHROW(brute_force_best(inst, Weights{}, Penalties{}, kDefaultBreakLimit, 210));
  GeneratorParams gp;
  gp.num_cities = 8;
  gp.num_days = 12;  // 19958400 complete tours, past the default cap
  const Instance big = generate_random_instance(gp, 77);
  CHECK_THROWS_AS(brute_force_best(big, Weights{}, Penalties{}), EnumerationCapError);
}
