#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "forge/operations.hpp"

namespace forge {

/// One executed operation. Replaying (op, inputs, params) must give result.
struct StepRecord {
  std::string id;
  std::string op;
  Json inputs;
  Json params;
  Json result;
  double runtime_ms = 0;
};

/// A value a claim depends on: step result at a JSON pointer.
struct ClaimCheck {
  std::string step;
  std::string pointer;
  Json equals;
};

/// "witness" or "exhaustive".
struct Claim {
  std::string statement;
  std::string backing;
  std::vector<ClaimCheck> checks;
};

struct RunReport {
  std::string pipeline;
  Json config = Json::object();
  std::optional<std::uint64_t> seed;
  std::vector<StepRecord> steps;
  /// Verified at this instance; each is backed by replayable steps.
  std::vector<Claim> certified;
  /// Consequences that rely on results outside this program, or asymptotic targets.
  std::vector<std::string> not_certified;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
  Json summary = Json::object();

  /// Runs the operation, records it and returns its result.
  const Json& run(const std::string& id, const std::string& op, Json inputs, Json params);
  const StepRecord& step(const std::string& id) const;
  void certify(std::string statement, std::string backing, std::vector<ClaimCheck> checks);

  /// Without timing the dump is a pure function of config and seed.
  Json to_json(bool include_timing = true) const;
  std::uint64_t determinism_hash() const;
};

std::string version_string();

/// FNV-1a 64.
std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t x);

struct ReplayOutcome {
  std::size_t steps = 0;
  std::size_t claims = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  Json to_json() const;
};

/// Re-runs every stored step, compares results, then re-evaluates each
/// certified claim against the fresh results and checks the stored hash.
ReplayOutcome replay_report(const Json& report);

/// Exclusive claim on a run directory through dir/.lock, created with
/// O_EXCL semantics and removed on destruction. A lock left by a crashed
/// run has to be deleted by hand.
class DirectoryLock {
 public:
  explicit DirectoryLock(const std::filesystem::path& dir);
  ~DirectoryLock();
  DirectoryLock(const DirectoryLock&) = delete;
  DirectoryLock& operator=(const DirectoryLock&) = delete;

 private:
  std::filesystem::path path_;
};

/// Writes report.json and appends a row to summary.csv under dir. The caller
/// holds the DirectoryLock.
void persist_report(const RunReport& report, const std::filesystem::path& dir);

}  // namespace forge
