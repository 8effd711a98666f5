#include "tourcast/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "tourcast/errors.hpp"
#include "tourcast/rng.hpp"

namespace tourcast {

CityOrder nearest_neighbor_order(const Instance& inst, int start_city) {
  const int m = inst.num_cities;
  if (start_city < 1 || start_city > m) throw std::invalid_argument("start city out of range");
  CityOrder order;
  order.reserve(m);
  std::vector<bool> visited(m + 1, false);
  int current = start_city;
  order.push_back(current);
  visited[current] = true;
  for (int step = 1; step < m; ++step) {
    int next = 0;
    int best = 0;
    for (int c = 1; c <= m; ++c) {
      if (visited[c]) continue;
      const int d = inst.day[current - 1][c - 1];
      if (next == 0 || d < best) {  // scanning upward makes ties pick the smaller code
        next = c;
        best = d;
      }
    }
    order.push_back(next);
    visited[next] = true;
    current = next;
  }
  return order;
}

long long order_distance(const CityOrder& order, const IntMatrix& matrix) {
  long long total = 0;
  for (size_t k = 0; k + 1 < order.size(); ++k)
    total += matrix[order[k] - 1][order[k + 1] - 1];
  return total;
}

CityOrder improve_order_two_exchange(CityOrder order, const Instance& inst) {
  long long best = order_distance(order, inst.day);
  bool improved = true;
  while (improved) {
    improved = false;
    for (size_t i = 0; i + 1 < order.size(); ++i) {
      for (size_t j = i + 1; j < order.size(); ++j) {
        std::swap(order[i], order[j]);
        const long long candidate = order_distance(order, inst.day);
        if (candidate < best) {
          best = candidate;
          improved = true;
        } else {
          std::swap(order[i], order[j]);  // undo
        }
      }
    }
  }
  return order;
}

Tour place_by_separation(const CityOrder& order, const Instance& inst) {
  Tour tour(inst.num_days, 0);
  if (order.empty()) return tour;
  int day = 0;
  tour[0] = order[0];
  for (size_t k = 1; k < order.size(); ++k) {
    day += std::max(1, inst.day[order[k - 1] - 1][order[k] - 1]);
    if (day >= inst.num_days)
      throw PlacementError("placement needs day " + std::to_string(day) +
                           " but the calendar ends at day " +
                           std::to_string(inst.num_days - 1));
    tour[day] = order[k];
  }
  return tour;
}

Tour backward_swap(Tour tour, const Instance& inst, int break_limit) {
  const int n = static_cast<int>(tour.size());
  auto last_performance = [&tour, n]() {
    for (int d = n - 1; d >= 0; --d)
      if (tour[d] != 0) return d;
    return -1;
  };

  int breaks = count_break_violations(tour, break_limit).break_count;
  for (int d = 0; d < n; ++d) {
    const int city = tour[d];
    if (city == 0) continue;
    if (inst.availability[d][city - 1] == AvailabilityCode::Available) continue;
    const int last = last_performance();
    int target = -1;
    for (int z = n - 1; z > last; --z) {
      if (tour[z] == 0 && inst.availability[z][city - 1] == AvailabilityCode::Available) {
        target = z;
        break;
      }
    }
    if (target < 0) continue;
    tour[d] = 0;
    tour[target] = city;
    const int breaks_after = count_break_violations(tour, break_limit).break_count;
    if (breaks_after > breaks) {  // relocation must not create a longer run
      tour[target] = 0;
      tour[d] = city;
    } else {
      breaks = breaks_after;
    }
  }
  return tour;
}

Tour construct_initial(const Instance& inst, std::uint64_t seed, int break_limit) {
  if (inst.num_cities == 0) return Tour(inst.num_days, 0);
  Rng rng(seed);
  const int first = 1 + static_cast<int>(uniform_index(rng, inst.num_cities));
  for (int attempt = 0; attempt < inst.num_cities; ++attempt) {
    const int start = 1 + (first - 1 + attempt) % inst.num_cities;
    const CityOrder order =
        improve_order_two_exchange(nearest_neighbor_order(inst, start), inst);
    try {
      return backward_swap(place_by_separation(order, inst), inst, break_limit);
    } catch (const PlacementError&) {
      // try the next start city
    }
  }
  throw PlacementError("no start city admits a placement within " +
                       std::to_string(inst.num_days) + " days");
}

}  // namespace tourcast
