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

#include "gaussamp/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

namespace gaussamp {

const char* sweep_status_name(SweepStatus s) {
  switch (s) {
    case SweepStatus::ok: return "ok";
    case SweepStatus::no_sign_change: return "no-sign-change";
    case SweepStatus::boundary: return "boundary";
    case SweepStatus::regime_violation: return "regime-violation";
  }
  return "?";
}

namespace {

double quartic_margin_at(double eta0p, double gamma3p, double eta1p,
                         double nbar0) {
  const QuarticCoeffs c = symmetric_quartic_coeffs(eta0p, gamma3p, nbar0);
  const double u = eta1p * eta1p;
  return c.s2 * u * u + c.s1 * u + c.s0;
}

BorderPoint critical_noise_impl(double gamma3p, double eta1p, double eta0p,
                                double nbar_max, double tol) {
  BorderPoint bp;
  bp.gamma3p = gamma3p;
  bp.eta1p = eta1p;
  bp.eta0p = eta0p;
  bp.which_variable = SweptVariable::nbar0;
  bp.regime = classify_regime(
      ChannelParams::from_normalized(eta0p, eta1p, 0.0, gamma3p, 0.0));

  const double k = std::hypot(gamma3p, eta1p);
  std::function<double(double)> margin;
  if (eta0p != 0.0) {
    if (!(1.0 - eta0p > k + 1e-9)) {
      bp.status = SweepStatus::regime_violation;
      return bp;
    }
    margin = [=](double nb) {
      return quartic_margin_at(eta0p, gamma3p, eta1p, nb);
    };
  } else if (std::abs(k - 1.0) < 1e-9) {
    bp.status = SweepStatus::boundary;
    return bp;
  } else if (k < 1.0) {
    const double g2 = gamma3p * gamma3p;
    margin = [=](double nb) {
      const double w = 1.0 - g2 * (2.0 * nb + 1.0) * (2.0 * nb + 1.0);
      return 4.0 * nb * nb * (1.0 - g2) - w * eta1p * eta1p;
    };
  } else {
    const double g2 = gamma3p * gamma3p;
    margin = [=](double nb) {
      return 2.0 * nb *
                 (nb + g2 + std::sqrt(nb * nb + (2.0 * nb + 1.0) * g2)) -
             eta1p * eta1p;
    };
  }

  // entangled (margin < 0) below the border, separable above
  if (!(margin(0.0) < 0.0) || !(margin(nbar_max) > 0.0)) {
    bp.status = SweepStatus::no_sign_change;
    return bp;
  }
  double lo = 0.0, hi = nbar_max;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) < 0.0 ? lo : hi) = mid;
  }
  bp.critical_value = 0.5 * (lo + hi);
  bp.status = SweepStatus::ok;
  return bp;
}

}  // namespace

BorderPoint critical_noise(double gamma3p, double eta1p, double eta0p,
                           double nbar_max, double tol) {
  const BorderPoint bp =
      critical_noise_impl(gamma3p, eta1p, eta0p, nbar_max, tol);
  switch (bp.status) {
    case SweepStatus::ok:
      return bp;
    case SweepStatus::no_sign_change: {
      std::ostringstream os;
      os << "criterion margin does not change sign on nbar0 in [0, "
         << nbar_max << "] at gamma3p = " << gamma3p << ", eta1p = " << eta1p
         << ", eta0p = " << eta0p;
      throw NoSignChange(os.str());
    }
    case SweepStatus::boundary: {
      std::ostringstream os;
      os << "k = " << std::hypot(gamma3p, eta1p)
         << " is at the weak/strong boundary; no criterion applies";
      throw RegimeViolation(os.str());
    }
    case SweepStatus::regime_violation:
    default: {
      std::ostringstream os;
      os << "point (gamma3p = " << gamma3p << ", eta1p = " << eta1p
         << ", eta0p = " << eta0p
         << ") lies outside the weak symmetric regime 1 - eta0p > k";
      throw RegimeViolation(os.str());
    }
  }
}

std::vector<double> SweepRange::values() const {
  std::vector<double> out;
  if (!(step > 0.0)) {
    throw std::invalid_argument("sweep range step must be positive");
  }
  // rounded count keeps the endpoint when it lies on the lattice
  const long n = std::lround((max - min) / step);
  for (long i = 0; i <= n; ++i) {
    const double v = min + step * i;
    if (v > max + 0.5 * step) break;
    out.push_back(v);
  }
  if (out.empty()) out.push_back(min);
  return out;
}

std::vector<BorderPoint> sweep_grid(const SweepSpec& spec, unsigned threads) {
  const std::vector<double> g3s = spec.gamma3p.values();
  const std::vector<double> e1s = spec.eta1p.values();
  const std::size_t rows = g3s.size() * e1s.size();
  std::vector<BorderPoint> out(rows);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const double g3p = g3s[idx / e1s.size()];
      const double e1p = e1s[idx % e1s.size()];
      out[idx] =
          critical_noise_impl(g3p, e1p, spec.eta0p, spec.nbar_max, spec.tol);
    }
  };

  unsigned n = threads;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
  }
  n = static_cast<unsigned>(
      std::min<std::size_t>(n, std::max<std::size_t>(rows, 1)));

  if (n <= 1 || rows < 2) {
    work(0, rows);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (rows + n - 1) / n;
  for (unsigned i = 0; i < n; ++i) {
    const std::size_t begin = i * chunk;
    const std::size_t end = std::min(rows, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace gaussamp
