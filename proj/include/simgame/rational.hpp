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
#ifndef SIMGAME_RATIONAL_HPP_
#define SIMGAME_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "simgame/errors.hpp"

namespace simgame {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using RationalVector = std::vector<Rational>;

namespace detail {

inline bool parse_integer(std::string_view text, Integer* out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') return false;
  }
  std::string digits(text.substr(i));
  *out = Integer(digits);
  if (text[0] == '-') *out = -*out;
  return true;
}

}  // namespace detail

// Parses "p/q" or an integer, with an optional sign on p.
inline Rational parse_rational(std::string_view text) {
  Integer num;
  Integer den(1);
  auto slash = text.find('/');
  std::string_view head = text.substr(0, slash);
  if (!detail::parse_integer(head, &num)) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  if (slash != std::string_view::npos) {
    std::string_view tail = text.substr(slash + 1);
    if (tail.empty() || tail[0] == '+' || tail[0] == '-' ||
        !detail::parse_integer(tail, &den)) {
      throw ParseError("not a rational: \"" + std::string(text) + "\"");
    }
    if (den == 0) {
      throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    }
  }
  return Rational(num, den);
}

// Always "n/d", e.g. "5/1" and "0/1".
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// "n" for integers, otherwise "n/d"; used in messages.
inline std::string to_display(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return to_string(r);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline Rational sum(const RationalVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace simgame

#endif  // SIMGAME_RATIONAL_HPP_
