#pragma once

#include <vector>

#include "spinctrl/bounds.hpp"

namespace spinctrl {

enum class SweepQuantity { Apm1, Fapm1, Diff, HybridMin };

struct SweepRow {
  double theta0 = 0.0;
  double thetaf = 0.0;
  double value = 0.0;
};

// n x n grid over theta0, thetaf in [0, pi] (inclusive ends), theta0-major
// order. Values are the closed-form time estimates, so they depend on the polar
// angles only; phi0/phif are accepted for interface symmetry. Throws
// std::invalid_argument for n < 2.
std::vector<SweepRow> sweep_grid(const PhysicalParams& params, int n,
                                 SweepQuantity quantity, double phi0 = 0.0,
                                 double phif = 0.0);

}  // namespace spinctrl
