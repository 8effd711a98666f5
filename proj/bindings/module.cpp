#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "tourcast/anneal.hpp"
#include "tourcast/constraints.hpp"
#include "tourcast/construct.hpp"
#include "tourcast/cost.hpp"
#include "tourcast/errors.hpp"
#include "tourcast/ingest.hpp"
#include "tourcast/manifest.hpp"
#include "tourcast/model.hpp"
#include "tourcast/oracle.hpp"
#include "tourcast/report.hpp"

namespace py = pybind11;
using namespace tourcast;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Concert tour scheduling: instances, violation counting, construction "
            "heuristics, simulated annealing and a brute-force oracle.";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<PlacementError>(m, "PlacementError");
  py::register_exception<EnumerationCapError>(m, "EnumerationCapError");

  py::enum_<Weekday>(m, "Weekday")
      .value("Mon", Weekday::Mon)
      .value("Tue", Weekday::Tue)
      .value("Wed", Weekday::Wed)
      .value("Thu", Weekday::Thu)
      .value("Fri", Weekday::Fri)
      .value("Sat", Weekday::Sat)
      .value("Sun", Weekday::Sun);

  py::enum_<AvailabilityCode>(m, "AvailabilityCode")
      .value("Available", AvailabilityCode::Available)
      .value("RelativelyUnavailable", AvailabilityCode::RelativelyUnavailable)
      .value("AbsolutelyUnavailable", AvailabilityCode::AbsolutelyUnavailable);

  py::enum_<ViolationKind>(m, "ViolationKind")
      .value("AvailabilityType1", ViolationKind::AvailabilityType1)
      .value("AvailabilityType2", ViolationKind::AvailabilityType2)
      .value("Break", ViolationKind::Break)
      .value("SeparationType1", ViolationKind::SeparationType1)
      .value("SeparationType2", ViolationKind::SeparationType2);

  py::class_<Instance>(m, "Instance")
      .def(py::init<>())
      .def_readwrite("num_days", &Instance::num_days)
      .def_readwrite("start_weekday", &Instance::start_weekday)
      .def_readwrite("num_cities", &Instance::num_cities)
      .def_readwrite("travel_limit", &Instance::travel_limit)
      .def_readwrite("city_names", &Instance::city_names)
      .def_readwrite("mile", &Instance::mile)
      .def_readwrite("day", &Instance::day)
      .def_readwrite("availability", &Instance::availability)
      .def("city_name", &Instance::city_name, py::arg("code"));

  py::class_<Weights>(m, "Weights")
      .def(py::init<>())
      .def(py::init([](double mile, double good, double bad) {
             return Weights{mile, good, bad};
           }),
           py::arg("mile"), py::arg("good"), py::arg("bad"))
      .def_readwrite("mile", &Weights::mile)
      .def_readwrite("good", &Weights::good)
      .def_readwrite("bad", &Weights::bad);

  py::class_<Penalties>(m, "Penalties")
      .def(py::init<>())
      .def(py::init([](double a1, double a2, double br, double s1, double s2) {
             return Penalties{a1, a2, br, s1, s2};
           }),
           py::arg("avail1"), py::arg("avail2"), py::arg("brk"), py::arg("sep1"),
           py::arg("sep2"))
      .def_readwrite("avail1", &Penalties::avail1)
      .def_readwrite("avail2", &Penalties::avail2)
      .def_readwrite("brk", &Penalties::brk)
      .def_readwrite("sep1", &Penalties::sep1)
      .def_readwrite("sep2", &Penalties::sep2);

  py::class_<Objectives>(m, "Objectives")
      .def(py::init<>())
      .def_readwrite("total_miles", &Objectives::total_miles)
      .def_readwrite("good_days", &Objectives::good_days)
      .def_readwrite("bad_days", &Objectives::bad_days);

  py::class_<Violation>(m, "Violation")
      .def_readonly("kind", &Violation::kind)
      .def_readonly("day", &Violation::day)
      .def_readonly("city", &Violation::city)
      .def_readonly("next_day", &Violation::next_day)
      .def_readonly("next_city", &Violation::next_city)
      .def_readonly("required", &Violation::required);

  py::class_<ViolationReport>(m, "ViolationReport")
      .def(py::init<>())
      .def_readonly("avail_type1", &ViolationReport::avail_type1)
      .def_readonly("avail_type2", &ViolationReport::avail_type2)
      .def_readonly("break_count", &ViolationReport::break_count)
      .def_readonly("sep_type1", &ViolationReport::sep_type1)
      .def_readonly("sep_type2", &ViolationReport::sep_type2)
      .def_readonly("locations", &ViolationReport::locations)
      .def("total", &ViolationReport::total);

  py::class_<Evaluation>(m, "Evaluation")
      .def(py::init<>())
      .def_readonly("objectives", &Evaluation::objectives)
      .def_readonly("violations", &Evaluation::violations);

  py::class_<CostBreakdown>(m, "CostBreakdown")
      .def_readonly("objective_term", &CostBreakdown::objective_term)
      .def_readonly("penalty_term", &CostBreakdown::penalty_term)
      .def_readonly("total", &CostBreakdown::total);

  py::class_<Calendar>(m, "Calendar")
      .def(py::init<>())
      .def_readwrite("num_days", &Calendar::num_days)
      .def_readwrite("start_weekday", &Calendar::start_weekday);

  py::class_<ParseOptions>(m, "ParseOptions")
      .def(py::init<>())
      .def_readwrite("travel_limit", &ParseOptions::travel_limit)
      .def_readwrite("waitlist_cutoff", &ParseOptions::waitlist_cutoff)
      .def_readwrite("symmetric_days", &ParseOptions::symmetric_days);

  py::class_<GeneratorParams>(m, "GeneratorParams")
      .def(py::init<>())
      .def_readwrite("num_cities", &GeneratorParams::num_cities)
      .def_readwrite("num_days", &GeneratorParams::num_days)
      .def_readwrite("start_weekday", &GeneratorParams::start_weekday)
      .def_readwrite("p_available", &GeneratorParams::p_available)
      .def_readwrite("p_relative", &GeneratorParams::p_relative)
      .def_readwrite("mile_min", &GeneratorParams::mile_min)
      .def_readwrite("mile_max", &GeneratorParams::mile_max)
      .def_readwrite("travel_limit", &GeneratorParams::travel_limit)
      .def_readwrite("symmetric_days", &GeneratorParams::symmetric_days);

  py::class_<SAParams>(m, "SAParams")
      .def(py::init<>())
      .def_readwrite("initial_temp", &SAParams::initial_temp)
      .def_readwrite("temp_limit", &SAParams::temp_limit)
      .def_readwrite("iters_per_temp", &SAParams::iters_per_temp)
      .def_readwrite("alpha", &SAParams::alpha)
      .def_readwrite("time_budget_seconds", &SAParams::time_budget_seconds)
      .def_readwrite("max_moves", &SAParams::max_moves)
      .def_readwrite("seed", &SAParams::seed)
      .def_readwrite("restart_reset", &SAParams::restart_reset);

  py::class_<TraceEntry>(m, "TraceEntry")
      .def_readonly("move_index", &TraceEntry::move_index)
      .def_readonly("elapsed_seconds", &TraceEntry::elapsed_seconds)
      .def_readonly("temperature", &TraceEntry::temperature)
      .def_readonly("current_cost", &TraceEntry::current_cost)
      .def_readonly("best_cost", &TraceEntry::best_cost)
      .def_readonly("improved", &TraceEntry::improved);

  py::class_<BestSnapshot>(m, "BestSnapshot")
      .def_readonly("move_index", &BestSnapshot::move_index)
      .def_readonly("cost", &BestSnapshot::cost)
      .def_readonly("tour", &BestSnapshot::tour)
      .def_readonly("eval", &BestSnapshot::eval);

  py::class_<RunTrace>(m, "RunTrace")
      .def_readonly("entries", &RunTrace::entries)
      .def_readonly("improvements", &RunTrace::improvements)
      .def_readonly("total_moves", &RunTrace::total_moves)
      .def_readonly("restarts", &RunTrace::restarts)
      .def_readonly("stages_per_restart", &RunTrace::stages_per_restart)
      .def_readonly("wallclock_cutoff", &RunTrace::wallclock_cutoff)
      .def_readonly("rng_algorithm", &RunTrace::rng_algorithm);

  py::class_<SAResult>(m, "SAResult")
      .def_readonly("best", &SAResult::best)
      .def_readonly("best_cost", &SAResult::best_cost)
      .def_readonly("best_eval", &SAResult::best_eval)
      .def_readonly("trace", &SAResult::trace);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("best_tour", &OracleResult::best_tour)
      .def_readonly("best_cost", &OracleResult::best_cost)
      .def_readonly("num_enumerated", &OracleResult::num_enumerated)
      .def_readonly("ties", &OracleResult::ties);

  py::class_<ScheduleLine>(m, "ScheduleLine")
      .def_readonly("day_index", &ScheduleLine::day_index)
      .def_readonly("weekday", &ScheduleLine::weekday)
      .def_readonly("city", &ScheduleLine::city)
      .def_readonly("city_name", &ScheduleLine::city_name);

  py::class_<TourReport>(m, "TourReport")
      .def_readonly("tour", &TourReport::tour)
      .def_readonly("eval", &TourReport::eval)
      .def_readonly("complete", &TourReport::complete)
      .def_readonly("performances", &TourReport::performances)
      .def_readonly("schedule", &TourReport::schedule);

  py::class_<PropertyBlock>(m, "PropertyBlock")
      .def(py::init<>())
      .def_readwrite("good_days", &PropertyBlock::good_days)
      .def_readwrite("bad_days", &PropertyBlock::bad_days)
      .def_readwrite("cities", &PropertyBlock::cities)
      .def_readwrite("total_miles", &PropertyBlock::total_miles)
      .def_readwrite("avail_type1", &PropertyBlock::avail_type1)
      .def_readwrite("avail_type2", &PropertyBlock::avail_type2)
      .def_readwrite("break_count", &PropertyBlock::break_count)
      .def_readwrite("sep_type1", &PropertyBlock::sep_type1)
      .def_readwrite("sep_type2", &PropertyBlock::sep_type2)
      .def("__eq__", [](const PropertyBlock& a, const PropertyBlock& b) { return a == b; });

  py::class_<SweepCell>(m, "SweepCell")
      .def(py::init<>())
      .def_readwrite("weights", &SweepCell::weights)
      .def_readwrite("penalties", &SweepCell::penalties);

  py::class_<RunManifest>(m, "RunManifest")
      .def(py::init<>())
      .def_readwrite("availability_path", &RunManifest::availability_path)
      .def_readwrite("miles_path", &RunManifest::miles_path)
      .def_readwrite("generator", &RunManifest::generator)
      .def_readwrite("generator_seed", &RunManifest::generator_seed)
      .def_readwrite("calendar", &RunManifest::calendar)
      .def_readwrite("parse_options", &RunManifest::parse_options)
      .def_readwrite("weights", &RunManifest::weights)
      .def_readwrite("penalties", &RunManifest::penalties)
      .def_readwrite("sa", &RunManifest::sa)
      .def_readwrite("break_limit", &RunManifest::break_limit)
      .def_readwrite("output_dir", &RunManifest::output_dir)
      .def_readwrite("sweep_cells", &RunManifest::sweep_cells);

  m.attr("DEFAULT_BREAK_LIMIT") = kDefaultBreakLimit;
  m.attr("DEFAULT_ENUMERATION_CAP") = kDefaultEnumerationCap;
  m.attr("DEFAULT_WAITLIST_CUTOFF") = kDefaultWaitlistCutoff;
  m.attr("DEFAULT_TRAVEL_LIMIT") = kDefaultTravelLimit;
  m.attr("NOMINAL_MOVES_PER_SECOND") = kNominalMovesPerSecond;
  m.attr("RNG_ALGORITHM") = kRngAlgorithm;

  m.def("weekday_name", &weekday_name, py::arg("weekday"));
  m.def("parse_weekday", &parse_weekday, py::arg("token"));
  m.def("validate_instance", &validate_instance, py::arg("instance"));
  m.def("is_complete", &is_complete, py::arg("tour"), py::arg("instance"));
  m.def("day_of_week", &day_of_week, py::arg("instance"), py::arg("day_index"));
  m.def("is_good_day", &is_good_day, py::arg("instance"), py::arg("day_index"));
  m.def("is_bad_day", &is_bad_day, py::arg("instance"), py::arg("day_index"));

  m.def("parse_instance", &parse_instance, py::arg("grid_path"), py::arg("mile_path"),
        py::arg("calendar"), py::arg("options") = ParseOptions{});
  m.def("generate_random_instance", &generate_random_instance, py::arg("params"),
        py::arg("seed"));
  m.def("write_availability_csv", &write_availability_csv, py::arg("instance"), py::arg("path"));
  m.def("write_mile_csv", &write_mile_csv, py::arg("instance"), py::arg("path"));
  m.def("derive_day_matrix", &derive_day_matrix, py::arg("mile"), py::arg("travel_limit"));

  m.def("evaluate", &evaluate, py::arg("tour"), py::arg("instance"),
        py::arg("break_limit") = kDefaultBreakLimit);
  m.def("objectives", &objectives, py::arg("tour"), py::arg("instance"));
  m.def("is_strictly_feasible", &is_strictly_feasible, py::arg("tour"), py::arg("instance"),
        py::arg("break_limit") = kDefaultBreakLimit);
  m.def("strict_cost", &strict_cost, py::arg("objectives"), py::arg("weights"));
  m.def("relaxed_cost", &relaxed_cost, py::arg("evaluation"), py::arg("weights"),
        py::arg("penalties"));

  m.def("nearest_neighbor_order", &nearest_neighbor_order, py::arg("instance"),
        py::arg("start_city"));
  m.def("improve_order_two_exchange", &improve_order_two_exchange, py::arg("order"),
        py::arg("instance"));
  m.def("place_by_separation", &place_by_separation, py::arg("order"), py::arg("instance"));
  m.def("backward_swap", &backward_swap, py::arg("tour"), py::arg("instance"),
        py::arg("break_limit") = kDefaultBreakLimit);
  m.def("construct_initial", &construct_initial, py::arg("instance"), py::arg("seed"),
        py::arg("break_limit") = kDefaultBreakLimit);

  m.def("cost_of", &cost_of, py::arg("tour"), py::arg("instance"), py::arg("weights"),
        py::arg("penalties"), py::arg("break_limit") = kDefaultBreakLimit);
  m.def("simulated_annealing", &simulated_annealing, py::arg("instance"), py::arg("initial"),
        py::arg("weights"), py::arg("penalties"), py::arg("params"),
        py::arg("break_limit") = kDefaultBreakLimit,
        py::call_guard<py::gil_scoped_release>());
  m.def("logical_move_budget", &logical_move_budget, py::arg("params"));
  m.def("cooling_stage_count", &cooling_stage_count, py::arg("params"));

  m.def("complete_tour_count", &complete_tour_count, py::arg("num_days"), py::arg("num_cities"));
  m.def("enumerate_complete_tours", &enumerate_complete_tours, py::arg("instance"),
        py::arg("cap"), py::arg("fn"));
  m.def("recount_evaluation", &recount_evaluation, py::arg("tour"), py::arg("instance"),
        py::arg("break_limit") = kDefaultBreakLimit);
  m.def("brute_force_best", &brute_force_best, py::arg("instance"), py::arg("weights"),
        py::arg("penalties"), py::arg("break_limit") = kDefaultBreakLimit,
        py::arg("cap") = kDefaultEnumerationCap, py::call_guard<py::gil_scoped_release>());

  m.def("make_report", &make_report, py::arg("tour"), py::arg("instance"),
        py::arg("break_limit") = kDefaultBreakLimit);
  m.def(
      "render_report",
      [](const TourReport& report, const Instance& inst, std::optional<std::string> start_date) {
        RenderOptions options;
        if (start_date) options.start_date = parse_civil_date(*start_date);
        return render_report(report, inst, options);
      },
      py::arg("report"), py::arg("instance"), py::arg("start_date") = std::nullopt);
  m.def(
      "report_json",
      [](const TourReport& report) { return report_to_json(report).dump(2); },
      py::arg("report"));
  m.def("property_block_of", &property_block_of, py::arg("report"));
  m.def("parse_property_block", &parse_property_block, py::arg("text"));

  m.def("load_manifest", &load_manifest, py::arg("path"));
  m.def("save_manifest", &save_manifest, py::arg("manifest"), py::arg("path"));
  m.def("load_instance", &load_instance, py::arg("manifest"));
}
