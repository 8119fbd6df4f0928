// Copyright 2026 The Gaussamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUSSAMP_SWEEP_HPP_
#define GAUSSAMP_SWEEP_HPP_

#include <vector>

#include "gaussamp/channel.hpp"
#include "gaussamp/separability.hpp"

namespace gaussamp {

enum class SweepStatus { ok, no_sign_change, boundary, regime_violation };

const char* sweep_status_name(SweepStatus s);

enum class SweptVariable { nbar0, eta1p };

/// One node of a separability border: the critical value of the swept
/// variable at which the governing criterion margin changes sign.
struct BorderPoint {
  double gamma3p = 0.0;
  double eta1p = 0.0;
  double eta0p = 0.0;
  double critical_value = 0.0;  // meaningful only when status == ok
  SweptVariable which_variable = SweptVariable::nbar0;
  RegimeClass regime{Tristate::weak, Tristate::weak};
  SweepStatus status = SweepStatus::ok;
};

/// Critical thermal occupancy at (gamma3p, eta1p, eta0p): bisection on the
/// governing stationary criterion (weak inter-mode for k < 1, asymptotic
/// strong for k > 1 when eta0p = 0; the eta3 = 0 quartic when eta0p != 0)
/// over nbar0 in [0, nbar_max], to |d nbar0| <= tol. The margin is entangled
/// (< 0) below the border and separable above. Throws NoSignChange when the
/// whole interval is one phase and RegimeViolation when the point selects no
/// criterion (k at its boundary, or a quartic point outside C2 > B1).
BorderPoint critical_noise(double gamma3p, double eta1p, double eta0p,
                           double nbar_max = 5.0, double tol = 1e-6);

struct SweepRange {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

struct SweepSpec {
  SweepRange gamma3p{0.0, 0.9, 0.05};
  SweepRange eta1p{0.05, 2.0, 0.05};
  double eta0p = 0.0;
  double nbar_max = 5.0;
  double tol = 1e-6;
};

/// One BorderPoint per grid node, row-major over (gamma3p, eta1p); per-point
/// failures become status markers, never aborting the sweep. Output order is
/// deterministic and independent of thread count (0 = auto).
std::vector<BorderPoint> sweep_grid(const SweepSpec& spec,
                                    unsigned threads = 0);

}  // namespace gaussamp

#endif  // GAUSSAMP_SWEEP_HPP_
