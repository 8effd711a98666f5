#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tourcast/anneal.hpp"
#include "tourcast/ingest.hpp"
#include "tourcast/model.hpp"

namespace tourcast {

struct SweepCell {
  Weights weights;
  Penalties penalties;
};

// Everything one solver run needs, loadable from a sectioned key-value file.
// See data/sample/instance.manifest for a commented example.
struct RunManifest {
  // Instance source: CSV paths, or generator parameters, never both.
  std::string availability_path;
  std::string miles_path;
  std::optional<GeneratorParams> generator;
  std::uint64_t generator_seed = 1;

  Calendar calendar;
  ParseOptions parse_options;
  Weights weights;
  Penalties penalties;
  SAParams sa;
  int break_limit = kDefaultBreakLimit;
  std::string output_dir = "out";
  std::vector<SweepCell> sweep_cells;
};

RunManifest load_manifest(const std::string& path);  // throws ParseError
void save_manifest(const RunManifest& manifest, const std::string& path);

// Parses the CSVs or runs the generator, per the manifest.
Instance load_instance(const RunManifest& manifest);

}  // namespace tourcast
