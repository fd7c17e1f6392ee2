#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "buildings.hpp"
#include "counterexamples.hpp"
#include "pipeline.hpp"
#include "walks.hpp"

namespace hdx {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "hdx-report/1";

/// Doubles at 12 significant digits so reports are byte-stable; non-finite values become null.
inline std::string format_report_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace detail {

inline void dump_json(const Json& j, int indent, int depth, std::string& out) {
  auto pad = [&](int d) { out.append(static_cast<std::size_t>(d * indent), ' '); };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        out += Json(it.key()).dump() + ": ";
        dump_json(it.value(), indent, depth + 1, out);
      }
      out += "\n";
      pad(depth);
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool scalars = true;
      for (const auto& e : j) scalars = scalars && !e.is_structured();
      if (scalars) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_json(j[i], indent, depth, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        pad(depth + 1);
        dump_json(j[i], indent, depth + 1, out);
      }
      out += "\n";
      pad(depth);
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_report_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace detail

inline std::string dump_report(const Json& j) {
  std::string out;
  detail::dump_json(j, 2, 0, out);
  return out + "\n";
}

/// Flat `key = value` config; `#` starts a comment, blank lines are skipped.
inline std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::ParseError, "config line " + std::to_string(lineno) + " has no '='");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key.empty()) fail(ErrorKind::ParseError, "config line " + std::to_string(lineno) + " has an empty key");
    kv[key] = val;
  }
  return kv;
}

/// Applies known keys to a pipeline config; unknown keys are a ParseError.
inline void apply_pipeline_config(const std::map<std::string, std::string>& kv, PipelineConfig& cfg) {
  for (const auto& [key, val] : kv) {
    try {
      if (key == "d1") cfg.d1 = std::stoi(val);
      else if (key == "tau") cfg.tau = std::stod(val);
      else if (key == "zeta") cfg.zeta = std::stod(val);
      else if (key == "gamma") cfg.gamma = std::stod(val);
      else if (key == "eta") cfg.eta = std::stod(val);
      else if (key == "separation") cfg.separation = std::stod(val);
      else if (key == "restrict_from_top") cfg.restrict_from_top = val == "true" || val == "1";
      else if (key == "candidate_budget") cfg.candidate_budget = std::stoull(val);
      else if (key == "cocycle_budget") cfg.cocycle_budget = std::stoull(val);
      else if (key == "triple_samples") cfg.triple_samples = std::stoull(val);
      else if (key == "check_well_connected") cfg.check_well_connected = val == "true" || val == "1";
      else if (key == "well_connected_ell_max") cfg.well_connected_ell_max = std::stoi(val);
      else if (key == "seed") cfg.seed = std::stoull(val);
      else fail(ErrorKind::ParseError, "unknown config key '" + key + "'");
    } catch (const std::logic_error&) {
      fail(ErrorKind::ParseError, "bad value '" + val + "' for config key '" + key + "'");
    }
  }
}

inline Json report_header(const std::string& command, std::uint64_t seed, Json config) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = std::move(config);
  return j;
}

inline Json to_json(const Interval& ci) { return Json::array({ci.low, ci.high}); }

inline Json to_json(const SpectralReport& r) {
  Json j;
  j["lambda2"] = r.lambda2;
  j["lambda_abs"] = r.lambda_abs;
  j["two_step"] = r.two_step;
  j["method"] = r.method;
  j["tolerance"] = r.tolerance;
  j["connected"] = r.connected;
  j["bipartite"] = r.bipartite;
  j["components"] = r.components;
  j["size"] = r.size;
  return j;
}

inline Json to_json(const HdxParameter& h) {
  Json j;
  j["lambda"] = h.lambda;
  j["worst_link"] = h.worst_link.str();
  j["level_max"] = h.level_max;
  j["all_links_connected"] = h.all_links_connected;
  return j;
}

inline Json to_json(const ConcentrationResult& c) {
  Json j;
  j["tail"] = c.tail;
  j["ci"] = to_json(c.ci);
  j["trials"] = c.trials;
  j["exceed"] = c.exceed;
  j["mean"] = c.mean;
  return j;
}

inline Json to_json(const AgreementResult& a) {
  Json j;
  j["agreement"] = a.agreement;
  j["ci_low"] = a.ci_low;
  j["ci_high"] = a.ci_high;
  j["trials"] = a.trials;
  j["exact"] = a.exact;
  return j;
}

inline Json to_json(const BogdanovReport& b) {
  Json j;
  j["radius"] = b.radius;
  j["girth"] = b.girth;
  j["lambda"] = b.lambda2;
  j["unique_propagation"] = b.unique_propagation;
  j["agreement"] = b.agreement_expected;
  j["ci"] = Json::array({b.ci_low, b.ci_high});
  j["agreement_fixed_ensemble"] = b.agreement_fixed;
  j["trials"] = b.trials;
  j["val"] = b.val;
  j["val_exact"] = b.val_exact;
  j["double_cover_val"] = b.cover_val;
  j["bipartite"] = b.bipartite;
  char line[160];
  std::snprintf(line, sizeof line, "agreement >= %.4f while val <= %.4f", b.ci_low, b.val);
  j["conclusion"] = b.bipartite ? std::string("bipartite instance: agreement explained by the trivial double cover (val = 1)") : std::string(line);
  return j;
}

inline Json to_json(const BuildingExpansion& b) {
  Json j;
  j["d"] = b.d;
  j["q"] = b.q;
  j["one_sided"] = to_json(b.one_sided);
  j["two_sided"] = to_json(b.two_sided);
  j["skeleton_lambda_abs"] = b.skeleton_lambda_abs;
  j["fitted_constant"] = b.fitted_constant;
  j["reference_inv_sqrt_q"] = b.reference;
  j["skeleton_two_sided"] = b.skeleton_two_sided;
  return j;
}

inline Json to_json(const PipelineConfig& c) {
  Json j;
  j["d1"] = c.d1;
  j["tau"] = c.tau;
  j["zeta"] = c.zeta;
  j["gamma"] = c.gamma;
  j["eta"] = c.eta;
  j["separation"] = c.separation;
  j["restrict_from_top"] = c.restrict_from_top;
  j["candidate_budget"] = c.candidate_budget;
  j["cocycle_budget"] = c.cocycle_budget;
  j["triple_samples"] = c.triple_samples;
  j["check_well_connected"] = c.check_well_connected;
  j["well_connected_ell_max"] = c.well_connected_ell_max;
  j["seed"] = c.seed;
  return j;
}

/// Timings are wall-clock and so are emitted only on request.
inline Json to_json(const PipelineReport& r, bool with_timings = false) {
  Json j;
  j["ell"] = r.ell;
  j["good_fraction"] = Json::array({r.good_fraction[0], r.good_fraction[1], r.good_fraction[2]});
  j["candidate_strategy"] = r.candidate_strategy;
  j["matching"] = {{"pairs", r.matching.pairs},
                   {"failures", r.matching.failures},
                   {"triples", r.matching.triples},
                   {"triple_consistency", r.matching.triple_consistency}};
  j["cochain_defects"] = r.cochain_defects;
  j["wt_delta_before"] = r.wt_delta_before;
  j["wt_delta_after"] = r.wt_delta_after;
  j["correction_dist"] = r.correction_dist;
  j["correction_strategy"] = r.correction_strategy;
  j["lift_ok"] = r.lift_ok;
  if (!r.lift_ok) j["lift_error"] = r.lift_error;
  j["cover_degree"] = r.cover_degree;
  j["iota_bijective"] = r.iota_bijective;
  j["degrees_preserved"] = r.degrees_preserved;
  if (r.isomorphic_to_plant) j["isomorphic_to_plant"] = *r.isomorphic_to_plant;
  if (r.well_connected) j["well_connected"] = *r.well_connected;
  j["h_consistency"] = r.h_consistency;
  j["final_agreement_lifted"] = r.final_agreement_raw;
  j["final_agreement"] = r.final_agreement;
  if (with_timings) {
    Json t;
    for (const auto& [name, ms] : r.timings_ms) t[name] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

}  // namespace hdx
