#include "forge/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

namespace forge {

std::string version_string() { return FORGE_VERSION; }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

const Json& RunReport::run(const std::string& id, const std::string& op, Json inputs, Json params) {
  for (const auto& s : steps)
    if (s.id == id) throw std::logic_error("duplicate step id '" + id + "'");
  const auto start = std::chrono::steady_clock::now();
  Json result = run_operation(op, inputs, params);
  const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
  steps.push_back({id, op, std::move(inputs), std::move(params), std::move(result), took.count()});
  return steps.back().result;
}

const StepRecord& RunReport::step(const std::string& id) const {
  for (const auto& s : steps)
    if (s.id == id) return s;
  throw std::out_of_range("no step '" + id + "'");
}

void RunReport::certify(std::string statement, std::string backing, std::vector<ClaimCheck> checks) {
  if (backing != "witness" && backing != "exhaustive") throw std::invalid_argument("unknown backing '" + backing + "'");
  for (const auto& c : checks) {
    const Json& value = step(c.step).result.at(Json::json_pointer(c.pointer));
    if (value != c.equals)
      throw std::logic_error("claim '" + statement + "' does not hold: " + c.pointer + " is " + value.dump());
  }
  certified.push_back({std::move(statement), std::move(backing), std::move(checks)});
}

Json RunReport::to_json(bool include_timing) const {
  Json j;
  j["pipeline"] = pipeline;
  j["config"] = config;
  j["environment"] = {{"version", version_string()}, {"seed", seed ? Json(*seed) : Json(nullptr)}};
  Json s = Json::array();
  double total = 0;
  for (const auto& st : steps) {
    Json rec = {{"id", st.id}, {"op", st.op}, {"inputs", st.inputs}, {"params", st.params}, {"result", st.result}};
    if (include_timing) rec["runtime_ms"] = float_to_json(st.runtime_ms);
    total += st.runtime_ms;
    s.push_back(std::move(rec));
  }
  j["steps"] = std::move(s);
  Json claims = Json::array();
  for (const auto& c : certified) {
    Json checks = Json::array();
    for (const auto& k : c.checks) checks.push_back({{"step", k.step}, {"pointer", k.pointer}, {"equals", k.equals}});
    claims.push_back({{"statement", c.statement}, {"backing", c.backing}, {"checks", checks}});
  }
  j["certified"] = std::move(claims);
  j["not_certified"] = not_certified;
  j["warnings"] = warnings;
  j["notes"] = notes;
  j["summary"] = summary;
  if (include_timing) {
    j["runtime_ms"] = float_to_json(total);
    j["determinism_hash"] = hex64(determinism_hash());
  }
  return j;
}

std::uint64_t RunReport::determinism_hash() const { return fnv1a64(to_json(false).dump()); }

Json ReplayOutcome::to_json() const { return {{"steps", steps}, {"claims", claims}, {"failures", failures}, {"ok", ok()}}; }

ReplayOutcome replay_report(const Json& report) {
  ReplayOutcome out;
  std::map<std::string, Json> fresh;
  for (const auto& st : report.at("steps")) {
    const std::string id = st.at("id").get<std::string>();
    ++out.steps;
    try {
      Json result = run_operation(st.at("op").get<std::string>(), st.at("inputs"), st.at("params"));
      if (result != st.at("result")) out.failures.push_back("step " + id + ": result differs on replay");
      fresh[id] = std::move(result);
    } catch (const std::exception& e) {
      out.failures.push_back("step " + id + ": " + e.what());
    }
  }
  for (const auto& c : report.at("certified")) {
    ++out.claims;
    const std::string statement = c.at("statement").get<std::string>();
    const std::string backing = c.at("backing").get<std::string>();
    if (backing != "witness" && backing != "exhaustive") out.failures.push_back("claim '" + statement + "': bad backing");
    if (c.at("checks").empty()) out.failures.push_back("claim '" + statement + "': no checks");
    for (const auto& k : c.at("checks")) {
      const auto it = fresh.find(k.at("step").get<std::string>());
      if (it == fresh.end()) {
        out.failures.push_back("claim '" + statement + "': missing step");
        continue;
      }
      const Json::json_pointer ptr(k.at("pointer").get<std::string>());
      if (!it->second.contains(ptr) || it->second.at(ptr) != k.at("equals"))
        out.failures.push_back("claim '" + statement + "': " + ptr.to_string() + " does not match");
      if (backing == "exhaustive" && it->second.value("exhaustive", false) != true)
        out.failures.push_back("claim '" + statement + "': step is not exhaustive");
    }
  }
  if (report.contains("determinism_hash")) {
    Json stripped = report;
    stripped.erase("determinism_hash");
    stripped.erase("runtime_ms");
    for (auto& st : stripped.at("steps")) st.erase("runtime_ms");
    if (hex64(fnv1a64(stripped.dump())) != report.at("determinism_hash").get<std::string>())
      out.failures.push_back("determinism hash does not match the report body");
  }
  return out;
}

DirectoryLock::DirectoryLock(const std::filesystem::path& dir) : path_(dir / ".lock") {
  std::filesystem::create_directories(dir);
  std::FILE* f = std::fopen(path_.c_str(), "wx");
  if (!f) throw std::runtime_error("output directory " + dir.string() + " is locked by another run (" + path_.string() + ")");
  std::fclose(f);
}

DirectoryLock::~DirectoryLock() {
  std::error_code ec;
  std::filesystem::remove(path_, ec);
}

namespace {

std::string csv_field(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void persist_report(const RunReport& report, const std::filesystem::path& dir) {
  const Json j = report.to_json(true);
  {
    std::ofstream out(dir / "report.json");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + (dir / "report.json").string());
  }
  const auto csv = dir / "summary.csv";
  const bool fresh = !std::filesystem::exists(csv);
  std::ofstream out(csv, std::ios::app);
  if (fresh) out << "pipeline,n,params_hash,certified_bound,target_bound,verdict,seed,runtime_ms\n";
  const Json& s = report.summary;
  out << report.pipeline << ',' << csv_field(s.value("n", Json())) << ',' << hex64(fnv1a64(report.config.dump())) << ','
      << csv_field(s.value("certified_bound", Json())) << ',' << csv_field(s.value("target_bound", Json())) << ','
      << csv_field(s.value("verdict", Json())) << ',' << (report.seed ? std::to_string(*report.seed) : "") << ','
      << j.at("runtime_ms").dump() << '\n';
  if (!out) throw std::runtime_error("cannot append " + csv.string());
}

}  // namespace forge
