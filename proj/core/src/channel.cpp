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

#include "gaussamp/channel.hpp"

#include <cmath>
#include <sstream>

namespace gaussamp {

ChannelParams ChannelParams::from_rates(double eta0, double eta1, double eta3,
                                        double gamma1, double gamma2,
                                        double nbar0) {
  return validate({eta0, eta1, eta3, gamma1, gamma2, nbar0});
}

ChannelParams ChannelParams::from_normalized(double eta0p, double eta1p,
                                             double eta3p, double gamma3p,
                                             double nbar0) {
  return validate({0.5 * eta0p, 0.5 * eta1p, 0.5 * eta3p, 1.0 + gamma3p,
                   1.0 - gamma3p, nbar0});
}

ChannelParams validate(const ChannelParams& p) {
  const double fields[] = {p.eta0, p.eta1, p.eta3, p.gamma1, p.gamma2,
                           p.nbar0};
  for (double f : fields) {
    if (!std::isfinite(f)) {
      throw ValidationError(ValidationError::Kind::NonFinite,
                            "channel parameter is not finite");
    }
  }
  if (!(p.gamma0() > 0.0)) {
    std::ostringstream os;
    os << "Gamma0 = (Gamma1+Gamma2)/2 must be positive, got " << p.gamma0();
    throw ValidationError(ValidationError::Kind::NonPositiveGamma0, os.str());
  }
  if (p.nbar0 < 0.0) {
    std::ostringstream os;
    os << "nbar0 must be non-negative, got " << p.nbar0;
    throw ValidationError(ValidationError::Kind::NegativeNoise, os.str());
  }
  return p;
}

const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::weak: return "weak";
    case Tristate::strong: return "strong";
    case Tristate::boundary: return "boundary";
  }
  return "?";
}

RegimeClass classify_regime(const ChannelParams& p) {
  RegimeClass r{};

  const double k = p.k();
  if (std::abs(k - 1.0) < 1e-9) {
    r.intermode = Tristate::boundary;
  } else {
    r.intermode = k < 1.0 ? Tristate::weak : Tristate::strong;
  }

  const double c2 = -p.eta0 + 0.5 * p.gamma0();
  const double b1 = std::hypot(p.eta1, 0.5 * p.gamma3() + p.eta3);
  if (std::abs(c2 - b1) < 1e-9 * p.gamma0()) {
    r.symmetric = Tristate::boundary;
  } else {
    r.symmetric = c2 > b1 ? Tristate::weak : Tristate::strong;
  }
  return r;
}

double ComplexCM::block_defect() const {
  const double herm = (X - X.adjoint()).cwiseAbs().maxCoeff();
  const double sym = (Y - Y.transpose()).cwiseAbs().maxCoeff();
  return std::max(herm, sym);
}

void ComplexCM::require_valid(double tol) const {
  const double d = block_defect();
  if (!(d <= tol)) {
    std::ostringstream os;
    os << "CM blocks violate X^dag = X, Y^T = Y by " << d;
    throw MalformedCM(os.str());
  }
}

}  // namespace gaussamp
