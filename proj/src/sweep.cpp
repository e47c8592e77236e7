#include "spinctrl/sweep.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace spinctrl {

std::vector<SweepRow> sweep_grid(const PhysicalParams& params, int n,
                                 SweepQuantity quantity, double phi0, double phif) {
  params.validate();
  if (n < 2) throw std::invalid_argument("sweep: grid needs at least 2 points per axis");

  const double step = std::numbers::pi / static_cast<double>(n - 1);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta0 = static_cast<double>(i) * step;
    for (int j = 0; j < n; ++j) {
      const double thetaf = static_cast<double>(j) * step;
      const BlochAngles init{theta0, phi0};
      const BlochAngles target{thetaf, phif};
      const double ta = approx_apm1(params, init, target).time_estimate;
      const double tf = approx_fapm1(params, init, target).time_estimate;
      double value = 0.0;
      switch (quantity) {
        case SweepQuantity::Apm1: value = ta; break;
        case SweepQuantity::Fapm1: value = tf; break;
        case SweepQuantity::Diff: value = tf - ta; break;
        case SweepQuantity::HybridMin: value = std::min(ta, tf); break;
      }
      rows.push_back(SweepRow{theta0, thetaf, value});
    }
  }
  return rows;
}

}  // namespace spinctrl
