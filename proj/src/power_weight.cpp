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

#include "fdunkl/power_weight.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fdunkl/error.hpp"

namespace fdunkl {

PowerWeight::PowerWeight(std::vector<PowerFactor> factors) {
  for (const auto& f : factors) {
    require(std::isfinite(f.t) && std::isfinite(f.gamma),
            ErrorCode::kInvalidArgument, "power weight factors must be finite");
  }
  std::sort(factors.begin(), factors.end(),
            [](const PowerFactor& a, const PowerFactor& b) { return a.t < b.t; });
  for (const auto& f : factors) {
    if (!factors_.empty() && factors_.back().t == f.t) {
      factors_.back().gamma += f.gamma;
    } else {
      factors_.push_back(f);
    }
  }
  std::erase_if(factors_, [](const PowerFactor& f) { return f.gamma == 0.0; });
}

PowerWeight PowerWeight::corollary(double b, double A, double B) {
  return PowerWeight({{0.0, b}, {1.0, A}, {-1.0, B}});
}

double PowerWeight::operator()(double x) const {
  double w = 1.0;
  for (const auto& f : factors_) w *= std::pow(std::abs(x - f.t), f.gamma);
  return w;
}

double PowerWeight::exponent_at(double t) const {
  for (const auto& f : factors_) {
    if (f.t == t) return f.gamma;
  }
  return 0.0;
}

PowerWeight PowerWeight::pow(double s) const {
  std::vector<PowerFactor> out = factors_;
  for (auto& f : out) f.gamma *= s;
  return PowerWeight(std::move(out));
}

PowerWeight PowerWeight::times(double t, double gamma) const {
  std::vector<PowerFactor> out = factors_;
  out.push_back({t, gamma});
  return PowerWeight(std::move(out));
}

PowerWeight PowerWeight::operator*(const PowerWeight& other) const {
  std::vector<PowerFactor> out = factors_;
  out.insert(out.end(), other.factors_.begin(), other.factors_.end());
  return PowerWeight(std::move(out));
}

std::vector<double> PowerWeight::singular_points() const {
  std::vector<double> pts;
  for (const auto& f : factors_) pts.push_back(f.t);
  return pts;
}

PowerWeight PowerWeight::parse(const std::string& spec) {
  const auto semi = spec.find(';');
  const std::string head = spec.substr(0, semi);
  std::vector<double> vals;
  std::stringstream ss(head);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(tok, &used));
      require(tok.find_first_not_of(" \t", used) == std::string::npos,
              ErrorCode::kInvalidArgument, "");
    } catch (const std::exception&) {
      fail(ErrorCode::kInvalidArgument, "bad weight component '" + tok + "'");
    }
  }
  require(vals.size() == 3, ErrorCode::kInvalidArgument,
          "weight spec must be \"b,A,B\" (got '" + head + "')");
  PowerWeight w = corollary(vals[0], vals[1], vals[2]);
  if (semi == std::string::npos) return w;

  std::stringstream rest(spec.substr(semi + 1));
  while (std::getline(rest, tok, ';')) {
    const auto colon = tok.find(':');
    require(colon != std::string::npos, ErrorCode::kInvalidArgument,
            "extra weight factor must read t:gamma (got '" + tok + "')");
    try {
      w = w.times(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
    } catch (const std::logic_error&) {
      fail(ErrorCode::kInvalidArgument, "bad extra weight factor '" + tok + "'");
    }
  }
  return w;
}

}  // namespace fdunkl
