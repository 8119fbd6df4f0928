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

#ifndef GAUSSAMP_ORACLE_HPP_
#define GAUSSAMP_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gaussamp/channel.hpp"
#include "gaussamp/propagator.hpp"
#include "gaussamp/separability.hpp"

namespace gaussamp {

/// Classical fourth-order Runge-Kutta integration of the coupled (M, N)
/// system. Never calls the closed forms; this is the independent check.
Propagator integrate_mn_ode(const ChannelParams& params, double t, int steps);

/// Max-norm residuals of the stationary equations for a candidate pair:
///   r1 = ||2(eta a + a* eta) - Gamma b - b Gamma||_max,
///   r2 = ||Gamma a + a Gamma - 2 eta b - 2 b* eta
///         - Gamma(nbar+1/2) - (nbar+1/2)Gamma||_max.
std::pair<double, double> residual_alpha_beta(const ChannelParams& params,
                                              const ResiduePair& pair);

/// Deterministic pseudo-random channel draws: Gamma1, Gamma2 in [0.1, 2],
/// normalized amplifier components eta_ip in [-1, 1] (so |eta_i| <= Gamma0/2),
/// nbar0 in [0, 1], tprime in [0, 5]. Uniform mapping is explicit so output
/// bytes depend only on the seed.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : state_(seed ? seed : 1) {}

  double uniform(double lo, double hi);
  ChannelParams draw_params();
  double draw_tprime() { return uniform(0.0, 5.0); }

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

/// One logged sign disagreement between two criterion routes.
struct Disagreement {
  double gamma3p = 0.0;
  double eta1p = 0.0;
  double eta0p = 0.0;
  double nbar0 = 0.0;
  double tprime = 0.0;
  double margin_a = 0.0;  // first-named route
  double margin_b = 0.0;  // second-named route
};

/// Agreement statistics for one criterion pair over a grid. Points where
/// either margin lies within `band` of zero are counted separately and not
/// judged. For the finite-time pair, adjusted_disagree counts disagreements
/// that survive adding 8 g3p^2 nbar0^2 eta1p^2 (1-g3p^2)(K1 K2 - 1)^2 to the
/// polynomial route (zero means the two routes differ by exactly that term).
struct EquivalencePairReport {
  std::string name;
  long agree = 0;
  long disagree = 0;
  long within_band = 0;
  long adjusted_disagree = -1;  // -1: not applicable
  std::vector<Disagreement> disagreements;  // capped, deterministic order
  bool pass = false;
};

struct EquivalenceGrid {
  // weak pair: qw-weak criterion vs ppt_general on the inter-mode residue
  std::vector<double> weak_gamma3p;
  std::vector<double> weak_nbar0;
  int weak_eta1p_count = 20;

  // quartic pair: quartic vs ppt_general on the eta3 = 0 residue
  std::vector<double> quartic_eta0p;
  std::vector<double> quartic_gamma3p;
  std::vector<double> quartic_nbar0;
  std::vector<double> quartic_eta1p;

  // finite-time pair: closed-form polynomial vs direct state route
  std::vector<double> strong_k;
  std::vector<double> strong_gamma3p;
  std::vector<double> strong_tprime;
  std::vector<double> strong_nbar0;

  // asymptotic pair: asymptotic criterion vs finite-time at asym_tprime
  std::vector<double> asym_k;
  std::vector<double> asym_gamma3p;
  std::vector<double> asym_nbar0;
  double asym_tprime = 30.0;

  double band = 1e-9;
  std::size_t max_logged = 16;

  static EquivalenceGrid defaults();
};

struct EquivalenceReport {
  std::vector<EquivalencePairReport> pairs;

  bool all_pass() const;
};

/// Batch agreement runner for the four criterion pairs. Throws
/// RegimeViolation if a grid point lies outside its pair's regime.
EquivalenceReport criterion_equivalence_report(const EquivalenceGrid& grid);

}  // namespace gaussamp

#endif  // GAUSSAMP_ORACLE_HPP_
