#include "spinctrl/schedule_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace spinctrl {

namespace {

double require_number(const nlohmann::json& node, const char* key) {
  if (!node.contains(key))
    throw std::runtime_error(std::string("schedule: missing key '") + key + "'");
  const auto& value = node.at(key);
  if (!value.is_number())
    throw std::runtime_error(std::string("schedule: key '") + key +
                             "' must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x))
    throw std::runtime_error(std::string("schedule: key '") + key +
                             "' must be finite");
  return x;
}

}  // namespace

nlohmann::json schedule_to_json(double omega0, const Schedule& schedule) {
  nlohmann::json doc;
  doc["omega0"] = omega0;
  doc["t0"] = schedule.t0;
  doc["segments"] = nlohmann::json::array();
  for (const PulseSegment& seg : schedule.segments) {
    doc["segments"].push_back({{"duration", seg.duration},
                               {"omega1", seg.omega1},
                               {"omega_rf", seg.omega_rf},
                               {"phi", seg.phi}});
  }
  return doc;
}

ScheduleFile schedule_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::runtime_error("schedule: document must be an object");
  ScheduleFile file;
  file.omega0 = require_number(doc, "omega0");
  if (!(file.omega0 > 0.0))
    throw std::runtime_error("schedule: omega0 must be positive");
  file.schedule.t0 = require_number(doc, "t0");
  if (!doc.contains("segments") || !doc.at("segments").is_array())
    throw std::runtime_error("schedule: missing 'segments' array");
  for (const auto& node : doc.at("segments")) {
    if (!node.is_object())
      throw std::runtime_error("schedule: each segment must be an object");
    PulseSegment seg;
    seg.duration = require_number(node, "duration");
    seg.omega1 = require_number(node, "omega1");
    seg.omega_rf = require_number(node, "omega_rf");
    seg.phi = require_number(node, "phi");
    if (seg.duration < 0.0)
      throw std::runtime_error("schedule: segment duration must be nonnegative");
    if (seg.omega1 < 0.0)
      throw std::runtime_error("schedule: segment omega1 must be nonnegative");
    if (!(seg.omega_rf > 0.0))
      throw std::runtime_error("schedule: segment omega_rf must be positive");
    file.schedule.segments.push_back(seg);
  }
  return file;
}

void write_schedule_file(const std::string& path, double omega0,
                         const Schedule& schedule) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("schedule: cannot open '" + path + "' for writing");
  out << schedule_to_json(omega0, schedule).dump(2) << '\n';
  if (!out) throw std::runtime_error("schedule: write to '" + path + "' failed");
}

ScheduleFile read_schedule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("schedule: cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("schedule: malformed JSON: ") + e.what());
  }
  return schedule_from_json(doc);
}

}  // namespace spinctrl
