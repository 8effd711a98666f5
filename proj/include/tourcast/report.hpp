#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tourcast/constraints.hpp"
#include "tourcast/model.hpp"

namespace tourcast {

// Plain Gregorian date for schedule rendering.
struct CivilDate {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31
};

CivilDate parse_civil_date(const std::string& text);  // "YYYY-MM-DD", ParseError
CivilDate add_days(CivilDate date, int days);
Weekday weekday_of(const CivilDate& date);

struct ScheduleLine {
  int day_index = 0;
  Weekday weekday = Weekday::Mon;
  int city = 0;
  std::string city_name;
};

struct TourReport {
  Tour tour;
  Evaluation eval;
  bool complete = false;
  int performances = 0;
  std::vector<ScheduleLine> schedule;
};

TourReport make_report(const Tour& tour, const Instance& inst,
                       int break_limit = kDefaultBreakLimit);

struct RenderOptions {
  // When set, schedule lines carry real dates ("Thu 24-Oct") instead of
  // day offsets ("Thu, day 10").
  std::optional<CivilDate> start_date;
};

std::string render_report(const TourReport& report, const Instance& inst,
                          const RenderOptions& options = {});

nlohmann::json report_to_json(const TourReport& report);

// The numbers a rendered report states about its tour.
struct PropertyBlock {
  int good_days = 0;
  int bad_days = 0;
  int cities = 0;
  long long total_miles = 0;
  int avail_type1 = 0;
  int avail_type2 = 0;
  int break_count = 0;
  int sep_type1 = 0;
  int sep_type2 = 0;

  bool operator==(const PropertyBlock&) const = default;
};

PropertyBlock property_block_of(const TourReport& report);

// Reads the block back out of rendered text. Throws ParseError when a line
// is missing or malformed.
PropertyBlock parse_property_block(const std::string& text);

}  // namespace tourcast
