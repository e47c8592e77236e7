#pragma once

#include <string>

#include <json.hpp>

#include "spinctrl/propagator.hpp"

namespace spinctrl {

// Schedules are stored together with omega0 so a file is self-contained for
// replay/verification.
struct ScheduleFile {
  double omega0 = 0.0;
  Schedule schedule;
};

nlohmann::json schedule_to_json(double omega0, const Schedule& schedule);

// Throws std::runtime_error on missing keys, wrong types, or out-of-range
// values (negative duration, omega1 < 0, omega_rf <= 0, non-finite numbers).
ScheduleFile schedule_from_json(const nlohmann::json& doc);

void write_schedule_file(const std::string& path, double omega0,
                         const Schedule& schedule);
ScheduleFile read_schedule_file(const std::string& path);

}  // namespace spinctrl
