// Copyright 2026 The simgame Authors
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
#ifndef SIMGAME_DEVIATION_HPP_
#define SIMGAME_DEVIATION_HPP_

#include <string>

#include "simgame/errors.hpp"
#include "simgame/rational.hpp"

namespace simgame {

// Position of a P2 action d relative to a baseline value u_B, given
// x = u_2(baseline P1 policy, d) and y = u_2(br, d).
enum class DeviationClass {
  kGreater,     // x > u_B > y
  kEqual,       // x = u_B = y
  kLess,        // x < u_B < y
  kProfitable,  // a deviation that gains whatever P1 does
  kDominated,   // never better than the baseline
};

inline std::string to_string(DeviationClass c) {
  switch (c) {
    case DeviationClass::kGreater: return "greater";
    case DeviationClass::kEqual: return "equal";
    case DeviationClass::kLess: return "less";
    case DeviationClass::kProfitable: return "profitable";
    case DeviationClass::kDominated: return "dominated";
  }
  return "unknown";
}

inline DeviationClass classify_deviation(const Rational& x, const Rational& ub,
                                         const Rational& y) {
  if (x > ub && ub > y) return DeviationClass::kGreater;
  if (x < ub && ub < y) return DeviationClass::kLess;
  if (x == ub && y == ub) return DeviationClass::kEqual;
  if ((x > ub && y >= ub) || (x >= ub && y > ub)) return DeviationClass::kProfitable;
  return DeviationClass::kDominated;
}

// r_d for the greater class, r_d^{-1} for the less class.
inline Rational deviation_ratio(DeviationClass cls, const Rational& x,
                                const Rational& ub, const Rational& y) {
  if (cls == DeviationClass::kGreater) return (x - ub) / (ub - y);
  if (cls == DeviationClass::kLess) return (y - ub) / (ub - x);
  throw PreconditionError("ratio is defined only for the greater and less classes");
}

// Simulation probability that makes P2 indifferent between baseline and d.
inline Rational deviation_threshold(DeviationClass cls, const Rational& ratio) {
  if (cls == DeviationClass::kGreater) return ratio / (1 + ratio);
  if (cls == DeviationClass::kLess) return 1 / (1 + ratio);
  throw PreconditionError("threshold is defined only for the greater and less classes");
}

}  // namespace simgame

#endif  // SIMGAME_DEVIATION_HPP_
