#include "tourcast/report.hpp"

#include <sstream>

#include "tourcast/errors.hpp"

namespace tourcast {

namespace {

bool is_leap(int year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

int days_in_month(int year, int month) {
  static const int table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap(year)) return 29;
  return table[month - 1];
}

const char* month_name(int month) {
  static const char* names[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  return names[month - 1];
}

}  // namespace

CivilDate parse_civil_date(const std::string& text) {
  CivilDate d;
  char dash1 = 0, dash2 = 0;
  std::istringstream in(text);
  in >> d.year >> dash1 >> d.month >> dash2 >> d.day;
  if (!in || dash1 != '-' || dash2 != '-' || d.month < 1 || d.month > 12 || d.day < 1 ||
      d.day > days_in_month(d.year, d.month))
    throw ParseError("expected a date like 2013-10-14, got '" + text + "'");
  return d;
}

CivilDate add_days(CivilDate date, int days) {
  while (days > 0) {
    const int room = days_in_month(date.year, date.month) - date.day;
    if (days <= room) {
      date.day += days;
      return date;
    }
    days -= room + 1;
    date.day = 1;
    if (++date.month > 12) {
      date.month = 1;
      ++date.year;
    }
  }
  return date;
}

Weekday weekday_of(const CivilDate& date) {
  // Sakamoto's method; 0 = Sunday there, shifted so 0 = Monday here.
  static const int offsets[] = {0, 3, 2, 5, 0, 3, 5, 1, 4, 6, 2, 4};
  int y = date.year;
  if (date.month < 3) --y;
  const int sunday0 =
      (y + y / 4 - y / 100 + y / 400 + offsets[date.month - 1] + date.day) % 7;
  return static_cast<Weekday>((sunday0 + 6) % 7);
}

TourReport make_report(const Tour& tour, const Instance& inst, int break_limit) {
  TourReport report;
  report.tour = tour;
  report.eval = evaluate(tour, inst, break_limit);
  report.complete = is_complete(tour, inst);
  for (int d = 0; d < static_cast<int>(tour.size()); ++d) {
    if (tour[d] == 0) continue;
    ++report.performances;
    report.schedule.push_back({d, day_of_week(inst, d), tour[d], inst.city_name(tour[d])});
  }
  return report;
}

std::string render_report(const TourReport& report, const Instance& inst,
                          const RenderOptions& options) {
  std::ostringstream out;

  out << "Tour: [";
  for (size_t i = 0; i < report.tour.size(); ++i) {
    if (i) out << ", ";
    out << report.tour[i];
  }
  out << "]\n\n";

  const ViolationReport& v = report.eval.violations;
  out << "Properties:\n";
  out << "Good days: " << report.eval.objectives.good_days << "\n";
  out << "Bad Days: " << report.eval.objectives.bad_days << "\n";
  out << "Number of cities in the tour: " << report.performances << "\n";
  out << "Total miles: " << report.eval.objectives.total_miles << "\n";
  out << "Availability violation Type 1: " << v.avail_type1 << "\n";
  out << "Availability violation Type 2: " << v.avail_type2 << "\n";
  out << "Break violation: " << v.break_count << "\n";
  out << "Separation violation 1 day: " << v.sep_type1 << "\n";
  out << "Separation violation more than 1 day: " << v.sep_type2 << "\n";
  if (!report.complete)
    out << "Warning: tour does not visit every city exactly once\n";

  out << "\nSchedule:\n";
  for (const ScheduleLine& line : report.schedule) {
    if (options.start_date) {
      const CivilDate date = add_days(*options.start_date, line.day_index);
      out << weekday_name(weekday_of(date)) << " " << date.day << "-"
          << month_name(date.month) << ", " << line.city_name << "\n";
    } else {
      out << weekday_name(line.weekday) << ", day " << line.day_index << ", "
          << line.city_name << "\n";
    }
  }

  bool header_done = false;
  for (const Violation& loc : v.locations) {
    switch (loc.kind) {
      case ViolationKind::AvailabilityType1:
      case ViolationKind::AvailabilityType2:
      case ViolationKind::Break:
        break;
      case ViolationKind::SeparationType1:
      case ViolationKind::SeparationType2:
        if (!header_done) {
          out << "\nSeparation Violation:\n";
          header_done = true;
        }
        out << "It normally takes " << loc.required << " days to travel from "
            << inst.city_name(loc.city) << " (city " << loc.city << ") to "
            << inst.city_name(loc.next_city) << " (city " << loc.next_city << ")\n";
        out << "Now it takes " << loc.next_day - loc.day << " days\n";
        break;
    }
  }
  header_done = false;
  for (const Violation& loc : v.locations) {
    switch (loc.kind) {
      case ViolationKind::AvailabilityType1:
      case ViolationKind::AvailabilityType2: {
        if (!header_done) {
          out << "\nAvailability Violation:\n";
          header_done = true;
        }
        const bool absolute = loc.kind == ViolationKind::AvailabilityType2;
        out << inst.city_name(loc.city) << " (city " << loc.city << ") is "
            << (absolute ? "absolutely" : "relatively") << " unavailable on day "
            << loc.day << "\n";
        break;
      }
      default:
        break;
    }
  }
  header_done = false;
  for (const Violation& loc : v.locations) {
    if (loc.kind != ViolationKind::Break) continue;
    if (!header_done) {
      out << "\nBreak Violation:\n";
      header_done = true;
    }
    out << "Days " << loc.day << " to " << loc.next_day << " are "
        << loc.required + 1 << " performances in a row\n";
  }
  return out.str();
}

nlohmann::json report_to_json(const TourReport& report) {
  const ViolationReport& v = report.eval.violations;
  nlohmann::json violations = {
      {"availability_type1", v.avail_type1}, {"availability_type2", v.avail_type2},
      {"break", v.break_count},              {"separation_type1", v.sep_type1},
      {"separation_type2", v.sep_type2},
  };
  nlohmann::json schedule = nlohmann::json::array();
  for (const ScheduleLine& line : report.schedule) {
    schedule.push_back({{"day", line.day_index},
                        {"weekday", weekday_name(line.weekday)},
                        {"city", line.city},
                        {"city_name", line.city_name}});
  }
  return {
      {"tour", report.tour},
      {"complete", report.complete},
      {"performances", report.performances},
      {"good_days", report.eval.objectives.good_days},
      {"bad_days", report.eval.objectives.bad_days},
      {"total_miles", report.eval.objectives.total_miles},
      {"violations", violations},
      {"schedule", schedule},
  };
}

PropertyBlock property_block_of(const TourReport& report) {
  const ViolationReport& v = report.eval.violations;
  return {report.eval.objectives.good_days,
          report.eval.objectives.bad_days,
          report.performances,
          report.eval.objectives.total_miles,
          v.avail_type1,
          v.avail_type2,
          v.break_count,
          v.sep_type1,
          v.sep_type2};
}

namespace {

long long field_after(const std::string& text, const std::string& key) {
  const size_t pos = text.find(key);
  if (pos == std::string::npos) throw ParseError("property block is missing '" + key + "'");
  std::istringstream in(text.substr(pos + key.size()));
  long long value = 0;
  if (!(in >> value)) throw ParseError("no number after '" + key + "'");
  return value;
}

}  // namespace

PropertyBlock parse_property_block(const std::string& text) {
  PropertyBlock block;
  block.good_days = static_cast<int>(field_after(text, "Good days:"));
  block.bad_days = static_cast<int>(field_after(text, "Bad Days:"));
  block.cities = static_cast<int>(field_after(text, "Number of cities in the tour:"));
  block.total_miles = field_after(text, "Total miles:");
  block.avail_type1 = static_cast<int>(field_after(text, "Availability violation Type 1:"));
  block.avail_type2 = static_cast<int>(field_after(text, "Availability violation Type 2:"));
  block.break_count = static_cast<int>(field_after(text, "Break violation:"));
  block.sep_type1 = static_cast<int>(field_after(text, "Separation violation 1 day:"));
  block.sep_type2 =
      static_cast<int>(field_after(text, "Separation violation more than 1 day:"));
  return block;
}

}  // namespace tourcast
