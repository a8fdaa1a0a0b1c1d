#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "forge/operations.hpp"
#include "forge/rational.hpp"

namespace forge {

/// Inputs of one pipeline run.
///
/// INI layout (JSON uses the same sections as nested objects):
///   [pipeline] id = conn|random|isolated|mader, seed = <u64>
///   [inputs]   graph = <file, g6:code or name>   (comma separated for several)
///   [params]   epsilon, delta, p, D, n, k, attempts, samples, max_sample_order
///   [output]   dir = <run directory>
struct ExperimentConfig {
  std::string pipeline;
  std::vector<std::string> graphs;
  std::optional<Rational> epsilon;
  std::optional<Rational> delta;
  std::optional<Rational> p;
  std::optional<Rational> d_override;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> seed;
  std::size_t attempts = 50;
  std::size_t samples = 300;
  std::size_t max_sample_order = 8;
  std::string output_dir;

  /// Domain checks; throws std::invalid_argument.
  void validate() const;
  /// Only the fields that influence results, so the output dir does not
  /// change the determinism hash.
  Json to_json() const;
};

ExperimentConfig config_from_json(const Json& j);
/// .json files are read as JSON, anything else as INI.
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace forge
