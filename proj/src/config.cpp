#include "forge/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace forge {

namespace {

const std::vector<std::string> kPipelines = {"conn", "random", "isolated", "mader"};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-')
    throw std::invalid_argument(key + " must be a non-negative integer, got '" + text + "'");
  return v;
}

/// JSON scalars are accepted as numbers or strings.
std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

void ExperimentConfig::validate() const {
  if (std::find(kPipelines.begin(), kPipelines.end(), pipeline) == kPipelines.end())
    throw std::invalid_argument("unknown pipeline '" + pipeline + "'");
  if (pipeline != "random" && graphs.size() != 1)
    throw std::invalid_argument("pipeline " + pipeline + " takes exactly one input graph");
  if (pipeline != "mader" && !seed) throw std::invalid_argument("pipeline " + pipeline + " is randomized and needs a seed");
  if (pipeline == "conn" || pipeline == "random") {
    if (!epsilon) throw std::invalid_argument("pipeline " + pipeline + " needs epsilon");
    if (*epsilon <= 0 || *epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (pipeline == "random" && !n) throw std::invalid_argument("pipeline random needs n");
  if (pipeline == "isolated" && !k) throw std::invalid_argument("pipeline isolated needs k");
  if (delta && (*delta <= 0 || *delta >= 1)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (p && (*p < 0 || *p > 1)) throw std::invalid_argument("p must lie in [0, 1]");
  if (d_override && *d_override <= 0) throw std::invalid_argument("D must be positive");
  if (attempts == 0) throw std::invalid_argument("attempts must be positive");
  if (max_sample_order == 0) throw std::invalid_argument("max_sample_order must be positive");
}

Json ExperimentConfig::to_json() const {
  auto opt = [](const auto& v) -> Json {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, Rational>)
      return rational_to_json(*v);
    else
      return *v;
  };
  return {{"pipeline", pipeline},
          {"graphs", graphs},
          {"epsilon", opt(epsilon)},
          {"delta", opt(delta)},
          {"p", opt(p)},
          {"D", opt(d_override)},
          {"n", opt(n)},
          {"k", opt(k)},
          {"seed", opt(seed)},
          {"attempts", attempts},
          {"samples", samples},
          {"max_sample_order", max_sample_order}};
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  const Json empty = Json::object();
  const Json& pipe = j.contains("pipeline") ? j.at("pipeline") : empty;
  const Json& inputs = j.contains("inputs") ? j.at("inputs") : empty;
  const Json& params = j.contains("params") ? j.at("params") : empty;
  const Json& output = j.contains("output") ? j.at("output") : empty;

  c.pipeline = pipe.value("id", "");
  if (pipe.contains("seed")) c.seed = parse_u64("seed", scalar_text(pipe.at("seed")));
  if (inputs.contains("graph")) {
    const Json& g = inputs.at("graph");
    c.graphs = g.is_array() ? g.get<std::vector<std::string>>() : split_list(g.get<std::string>());
  }
  auto rat = [&](const char* key, std::optional<Rational>& dst) {
    if (params.contains(key)) dst = parse_rational(scalar_text(params.at(key)));
  };
  rat("epsilon", c.epsilon);
  rat("delta", c.delta);
  rat("p", c.p);
  rat("D", c.d_override);
  auto count = [&](const char* key, auto& dst) {
    if (params.contains(key)) dst = parse_u64(key, scalar_text(params.at(key)));
  };
  count("n", c.n);
  count("k", c.k);
  count("attempts", c.attempts);
  count("samples", c.samples);
  count("max_sample_order", c.max_sample_order);
  c.output_dir = output.value("dir", "");
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  if (path.extension() == ".json") return config_from_json(Json::parse(in));

  boost::property_tree::ptree tree;
  boost::property_tree::read_ini(in, tree);
  Json j = Json::object();
  for (const auto& [section, body] : tree) {
    Json& dst = j[section];
    dst = Json::object();
    for (const auto& [key, value] : body) dst[key] = value.data();
  }
  return config_from_json(j);
}

}  // namespace forge
