#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tourcast/model.hpp"

namespace tourcast {

inline constexpr int kDefaultWaitlistCutoff = 3;
inline constexpr int kDefaultTravelLimit = 500;

// Raw booking status of one venue on one day, as found in availability grids.
struct VenueStatus {
  enum class Kind { Open, Confirmed, OpenHold, Pending, Waitlist, NoInfo };
  Kind kind = Kind::NoInfo;
  int waitlist_position = 0;  // >= 1 when kind == Waitlist

  bool operator==(const VenueStatus&) const = default;
};

// Tokens: "o", "c", "o/h", "p", "<k>h" with k >= 1, or empty. Case-insensitive,
// surrounding whitespace ignored. Throws ParseError on anything else.
VenueStatus parse_status(const std::string& token);
std::string status_token(const VenueStatus& status);

// Open, open/hold and a waitlist position within the cutoff count as
// available; confirmed, pending and blank are absolutely unavailable;
// deeper waitlist positions are relatively unavailable.
AvailabilityCode classify_status(const VenueStatus& status,
                                 int waitlist_cutoff = kDefaultWaitlistCutoff);

// City availability over its venues: available if any venue is, absolutely
// unavailable only if all are, otherwise relatively unavailable.
AvailabilityCode merge_city(const std::vector<AvailabilityCode>& codes);

// day[i][j] = floor(mile[i][j] / travel_limit).
IntMatrix derive_day_matrix(const IntMatrix& mile, int travel_limit);

struct VenueGrid {
  int num_days = 0;
  std::vector<std::pair<std::string, std::string>> venues;  // (venue name, city name)
  std::vector<std::vector<VenueStatus>> statuses;           // num_days x venues
};

// Availability grid CSV: row 1 venue names, row 2 the city of each venue,
// then one row of status tokens per day.
VenueGrid read_venue_grid(const std::string& path);

struct Calendar {
  int num_days = 42;
  Weekday start_weekday = Weekday::Mon;
};

struct ParseOptions {
  int travel_limit = kDefaultTravelLimit;
  int waitlist_cutoff = kDefaultWaitlistCutoff;
  // Derive each day entry from the larger of the two directions so the day
  // matrix comes out symmetric even when the miles are not.
  bool symmetric_days = false;
};

// Builds an Instance from an availability grid and a mile matrix CSV.
// Cities are numbered by the column order of first appearance in the grid;
// the mile CSV header must list the same cities in the same order.
Instance parse_instance(const std::string& grid_path, const std::string& mile_path,
                        const Calendar& calendar, const ParseOptions& options = {});

struct GeneratorParams {
  int num_cities = 15;
  int num_days = 42;
  Weekday start_weekday = Weekday::Mon;
  double p_available = 0.6;  // per-cell probability of Available
  double p_relative = 0.2;   // ... of RelativelyUnavailable; remainder is absolute
  int mile_min = 60;
  int mile_max = 1800;
  int travel_limit = kDefaultTravelLimit;
  bool symmetric_days = false;
};

// Availability cells are drawn i.i.d., miles uniformly and independently per
// direction (diagonal zero). Identical (params, seed) give identical instances.
Instance generate_random_instance(const GeneratorParams& params, std::uint64_t seed);

// Writers for the same CSV formats parse_instance reads. Availability is
// written as one venue per city with tokens o / 4h / c.
void write_availability_csv(const Instance& inst, const std::string& path);
void write_mile_csv(const Instance& inst, const std::string& path);

}  // namespace tourcast
