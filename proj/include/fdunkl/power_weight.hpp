// Copyright 2026 The fdunkl Authors
//
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

#pragma once

#include <span>
#include <string>
#include <vector>

namespace fdunkl {

struct PowerFactor {
  double t;
  double gamma;
};

// prod_i |x - t_i|^{gamma_i}. Factors are kept sorted by t with equal t
// merged, so two weights compare equal iff they are the same function.
class PowerWeight {
 public:
  PowerWeight() = default;
  explicit PowerWeight(std::vector<PowerFactor> factors);

  // |x|^b (1-x)^A (1+x)^B.
  static PowerWeight corollary(double b, double A, double B);

  double operator()(double x) const;

  const std::vector<PowerFactor>& factors() const noexcept { return factors_; }
  // Exponent carried at t (0 when t is not a factor).
  double exponent_at(double t) const;
  bool is_unit() const noexcept { return factors_.empty(); }

  // Pointwise power w^s and product w * |x - t|^gamma.
  PowerWeight pow(double s) const;
  PowerWeight times(double t, double gamma) const;
  PowerWeight operator*(const PowerWeight& other) const;

  // Points t_i with non-zero exponent.
  std::vector<double> singular_points() const;

  // Parses "b,A,B" optionally followed by ";t:gamma" extra factors.
  static PowerWeight parse(const std::string& spec);

  friend bool operator==(const PowerWeight&, const PowerWeight&) = default;

 private:
  std::vector<PowerFactor> factors_;
};

inline bool operator==(const PowerFactor& a, const PowerFactor& b) {
  return a.t == b.t && a.gamma == b.gamma;
}

}  // namespace fdunkl
