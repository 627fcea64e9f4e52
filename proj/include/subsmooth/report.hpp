#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subsmooth/determination.hpp"
#include "subsmooth/grid.hpp"
#include "subsmooth/semismooth.hpp"
#include "subsmooth/verdict.hpp"

namespace subsmooth {

using json = nlohmann::json;

json to_json(const ExtReal& v);
json to_json(const Verdict& v);
json to_json(const TailEstimate& t);
json to_json(const GridConfig& g);
json to_json(const DirectionalSamplingConfig& c);
json to_json(const RecoveryConfig& c);
json to_json(const ClassVerdict& c);
json to_json(const DeterminationReport& r);

// Machine-readable run record: the config echo suffices to reproduce the
// run bit-exactly (seed included).
struct RunReport {
  std::string command;
  json config_echo;
  json results = json::array();
  json timing = json::array();

  void add_result(const std::string& key, json value, double seconds);
  std::string dump() const;
};

// CSV with a header row; floats at 17 significant digits.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
std::string format_g17(double v);

}  // namespace subsmooth
