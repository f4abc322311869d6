// JSON round-trip for experiment configurations (nlohmann::json).

#include "acor/config.hpp"

#include <stdexcept>

#include "json.hpp"

namespace acor {

namespace {
using nlohmann::json;
}  // namespace

std::string to_json_string(const ExperimentConfig& c) {
  json j;
  j["subcommand"] = c.subcommand;
  j["domain"] = c.domain;
  j["x"] = c.x;
  j["y"] = c.y;
  j["q"] = c.q;
  j["r"] = c.r;
  j["fn"] = c.fn;
  j["shifts"] = c.shifts;
  j["terms"] = c.terms;
  j["weight"] = c.weight;
  j["name"] = c.name;
  j["which"] = c.which;
  j["param"] = c.param;
  j["hypothesis_b"] = c.hypothesis_b;
  j["cutoff"] = c.cutoff;
  j["lo"] = c.lo;
  j["hi"] = c.hi;
  j["mod_q"] = c.mod_q;
  j["format"] = c.format;
  j["threads"] = c.threads;
  j["segment"] = c.segment;
  if (c.cache_dir)
    j["cache_dir"] = *c.cache_dir;
  else
    j["cache_dir"] = nullptr;
  return j.dump(2);
}

ExperimentConfig config_from_json(const std::string& text) {
  const json j = json::parse(text);
  ExperimentConfig c;
  c.subcommand = j.value("subcommand", c.subcommand);
  c.domain = j.value("domain", c.domain);
  c.x = j.value("x", c.x);
  c.y = j.value("y", c.y);
  c.q = j.value("q", c.q);
  c.r = j.value("r", c.r);
  c.fn = j.value("fn", c.fn);
  if (j.contains("shifts")) c.shifts = j["shifts"].get<std::vector<i64>>();
  c.terms = j.value("terms", c.terms);
  c.weight = j.value("weight", c.weight);
  c.name = j.value("name", c.name);
  c.which = j.value("which", c.which);
  c.param = j.value("param", c.param);
  c.hypothesis_b = j.value("hypothesis_b", c.hypothesis_b);
  c.cutoff = j.value("cutoff", c.cutoff);
  c.lo = j.value("lo", c.lo);
  c.hi = j.value("hi", c.hi);
  c.mod_q = j.value("mod_q", c.mod_q);
  c.format = j.value("format", c.format);
  c.threads = j.value("threads", c.threads);
  c.segment = j.value("segment", c.segment);
  if (j.contains("cache_dir") && !j["cache_dir"].is_null())
    c.cache_dir = j["cache_dir"].get<std::string>();
  return c;
}

}  // namespace acor
