#include "tourcast/cost.hpp"

namespace tourcast {

double strict_cost(const Objectives& obj, const Weights& w) {
  return w.mile * static_cast<double>(obj.total_miles) + w.good * obj.good_days +
         w.bad * obj.bad_days;
}

CostBreakdown relaxed_cost(const Evaluation& ev, const Weights& w, const Penalties& p) {
  CostBreakdown out;
  out.objective_term = strict_cost(ev.objectives, w);
  const ViolationReport& v = ev.violations;
  out.penalty_term = p.avail1 * v.avail_type1 + p.avail2 * v.avail_type2 +
                     p.brk * v.break_count + p.sep1 * v.sep_type1 + p.sep2 * v.sep_type2;
  out.total = out.objective_term + out.penalty_term;
  return out;
}

}  // namespace tourcast
