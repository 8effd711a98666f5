#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "tourcast/model.hpp"

namespace test_helpers {

// Hand-built 3-city week starting on a Monday; every expected value in the
// tests referencing it was worked out against this exact layout.
inline tourcast::Instance tiny_instance() {
  using tourcast::AvailabilityCode;
  tourcast::Instance inst;
  inst.num_days = 7;
  inst.start_weekday = tourcast::Weekday::Mon;
  inst.num_cities = 3;
  inst.travel_limit = 500;
  inst.city_names = {"Alder", "Birch", "Cedar"};
  inst.mile = {{0, 400, 1200}, {450, 0, 700}, {1100, 650, 0}};
  inst.day = {{0, 0, 2}, {0, 0, 1}, {2, 1, 0}};
  const AvailabilityCode Y = AvailabilityCode::Available;
  const AvailabilityCode R = AvailabilityCode::RelativelyUnavailable;
  const AvailabilityCode X = AvailabilityCode::AbsolutelyUnavailable;
  inst.availability = {
      {Y, X, R},  // Mon
      {Y, Y, Y},  // Tue
      {R, Y, Y},  // Wed
      {Y, Y, X},  // Thu
      {Y, R, Y},  // Fri
      {X, Y, Y},  // Sat
      {Y, Y, Y},  // Sun
  };
  return inst;
}

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    std::string name = (std::filesystem::temp_directory_path() / "tourcast_test_XXXXXX").string();
    path = mkdtemp(name.data());
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline bool same_instance(const tourcast::Instance& a, const tourcast::Instance& b) {
  return a.num_days == b.num_days && a.start_weekday == b.start_weekday &&
         a.num_cities == b.num_cities && a.travel_limit == b.travel_limit &&
         a.city_names == b.city_names && a.mile == b.mile && a.day == b.day &&
         a.availability == b.availability;
}

}  // namespace test_helpers
