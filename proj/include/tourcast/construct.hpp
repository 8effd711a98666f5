#pragma once

#include <cstdint>
#include <vector>

#include "tourcast/constraints.hpp"
#include "tourcast/model.hpp"

namespace tourcast {

// Order in which the cities will be visited: a permutation of 1..m.
using CityOrder = std::vector<int>;

// Greedy chain over the day matrix from start_city; ties go to the
// smaller city code.
CityOrder nearest_neighbor_order(const Instance& inst, int start_city);

// Sum of matrix entries over consecutive pairs; open path, no return leg.
long long order_distance(const CityOrder& order, const IntMatrix& matrix);

// Applies position swaps that strictly reduce the day distance, sweeping all
// pairs in lexicographic order until a full pass finds no improvement.
CityOrder improve_order_two_exchange(CityOrder order, const Instance& inst);

// First city on day 0, each next city after the day-matrix gap (at least one
// day, since a day holds one performance). Throws PlacementError when the
// placement runs past the last day.
Tour place_by_separation(const CityOrder& order, const Instance& inst);

// Moves availability-violating performances (scanned left to right) to the
// latest free available day after the current last performance. Skips a move
// that would add break violations. Never increases the violation count and
// never changes which cities perform.
Tour backward_swap(Tour tour, const Instance& inst, int break_limit = kDefaultBreakLimit);

// Full construction pipeline from a seeded random start city; retries every
// other start city if placement overflows before giving up.
Tour construct_initial(const Instance& inst, std::uint64_t seed,
                       int break_limit = kDefaultBreakLimit);

}  // namespace tourcast
