#pragma once

#include "tourcast/constraints.hpp"
#include "tourcast/model.hpp"

namespace tourcast {

struct CostBreakdown {
  double objective_term = 0.0;
  double penalty_term = 0.0;
  double total = 0.0;
};

// Weighted sum of miles, good days and bad days.
double strict_cost(const Objectives& obj, const Weights& w);

// Strict cost plus the weighted violation counts.
CostBreakdown relaxed_cost(const Evaluation& ev, const Weights& w, const Penalties& p);

}  // namespace tourcast
