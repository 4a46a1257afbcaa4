// Copyright 2026 The nilcay Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILCAY_ORDER_HPP_
#define NILCAY_ORDER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nilcay/cayley.hpp"
#include "nilcay/pcgroup.hpp"
#include "nilcay/report.hpp"

namespace nilcay {

enum class Cmp { kLess, kEqual, kGreater };

std::string to_string(Cmp c);

/// Order from the declared filtration: x < y iff the first nonzero exponent
/// of x^-1 y, scanning the blocks in order, is positive.
class BiOrder {
 public:
  // Throws PreconditionError for torsion, a missing or partial filtration,
  // or a presentation not flagged nilpotent.
  explicit BiOrder(PcPresentation p);

  Cmp compare(const GroupElement& x, const GroupElement& y) const;
  bool less(const GroupElement& x, const GroupElement& y) const {
    return compare(x, y) == Cmp::kLess;
  }
  const PcPresentation& presentation() const noexcept { return p_; }

 private:
  PcPresentation p_;
  std::vector<std::size_t> scan_;
};

GroupElement max_generator(const BiOrder& order, const GenSet& s);

// dist(e, s^k) = k with a unique geodesic, for 1 <= k <= kmax.
Report convexity_check(const Ball& ball, const GroupElement& s, int kmax);

// Given a convex segment with some edge labelled by the central element s,
// checks that every edge is labelled s.
Report central_label_propagation(const Ball& ball, const GeodesicPath& segment,
                                 const GroupElement& s);

struct DistortionOptions {
  int start_radius = 4;
  BallOptions ball;
};

struct DistortionSample {
  long long k = 0;
  std::optional<int> dist;
  double ratio = 0;
  std::string method;  // "ball", "split", "character bound", "uncertified"
};

struct DistortionProfile {
  std::vector<DistortionSample> samples;
  int radius_used = 0;
  bool complete = false;
  std::string stop_reason;
};

enum class Distortion { kDistorted, kUndistorted, kInconclusive };
std::string to_string(Distortion d);

struct DistortionVerdict {
  Distortion verdict = Distortion::kInconclusive;
  DistortionProfile profile;
  bool analytic_in_isolator = false;
  // Set when the analytic table applies (nilpotent groups).
  std::optional<bool> agrees;
};

// Ratios dist(e, g^k)/k at k = 1, 2, 4, ..., kmax. Balls grow by half again
// each time a distance cannot be certified; a budget overrun ends the
// profile early.
DistortionProfile distortion_profile(const PcPresentation& p, const GenSet& s,
                                     const GroupElement& g, long long kmax,
                                     const DistortionOptions& opts = {});
// Throws Error if the verdict is conclusive and contradicts the analytic
// isolator table of a nilpotent group.
DistortionVerdict classify_distorted(const PcPresentation& p, const GenSet& s,
                                     const GroupElement& g, long long kmax = 64,
                                     double tol = 0.5,
                                     const DistortionOptions& opts = {});
Report distortion_report(const PcPresentation& p, const GenSet& s,
                         const GroupElement& g, const DistortionVerdict& v,
                         long long kmax, double tol);

}  // namespace nilcay

#endif  // NILCAY_ORDER_HPP_
