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

#include <doctest.h>

#include <cmath>

#include "fdunkl/error.hpp"
#include "fdunkl/power_weight.hpp"

using namespace fdunkl;

TEST_SUITE("power_weight") {

TEST_CASE("factors are sorted, merged and zero exponents dropped") {
  const PowerWeight w({{0.5, 1.0}, {-0.2, 2.0}, {0.5, -0.25}, {0.1, 0.0}});
  REQUIRE(w.factors().size() == 2);
  CHECK(w.factors()[0] == PowerFactor{-0.2, 2.0});
  CHECK(w.factors()[1] == PowerFactor{0.5, 0.75});
  CHECK(w.exponent_at(0.5) == 0.75);
  CHECK(w.exponent_at(0.1) == 0.0);
  CHECK(PowerWeight({{0.3, 1.0}, {0.3, -1.0}}).is_unit());
}

TEST_CASE("evaluation, powers and products") {
  const PowerWeight w = PowerWeight::corollary(0.5, 1.0, -0.5);
  const double x = 0.3;
  const double expect = std::pow(0.3, 0.5) * (1 - x) * std::pow(1 + x, -0.5);
  CHECK(w(x) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(w.pow(2.0)(x) == doctest::Approx(expect * expect).epsilon(1e-14));
  CHECK((w * w.pow(-1.0)).is_unit());
  CHECK(w.times(0.0, -0.5).exponent_at(0.0) == 0.0);
  CHECK(PowerWeight{}(0.7) == 1.0);
}

TEST_CASE("weights equal as functions compare equal") {
  CHECK(PowerWeight({{1.0, 1.0}, {0.0, 2.0}}) == PowerWeight({{0.0, 2.0}, {1.0, 1.0}}));
  CHECK_FALSE(PowerWeight({{0.0, 2.0}}) == PowerWeight({{0.0, 1.0}}));
}

TEST_CASE("parse accepts b,A,B with extra factors and rejects malformed input") {
  const PowerWeight w = PowerWeight::parse("0.4,0,-0.5;0.5:0.25;-0.3:1");
  CHECK(w.exponent_at(0.0) == 0.4);
  CHECK(w.exponent_at(-1.0) == -0.5);
  CHECK(w.exponent_at(0.5) == 0.25);
  CHECK(w.exponent_at(-0.3) == 1.0);
  CHECK(PowerWeight::parse("0,0,0").is_unit());
  for (const char* bad : {"", "1,2", "1,2,3,4", "a,0,0", "0,0,0;0.5", "0,0,0;x:1", "1e,0,0"}) {
    CHECK_THROWS_AS(PowerWeight::parse(bad), Error);
  }
}

TEST_CASE("singular points list the non-zero exponents") {
  const auto pts = PowerWeight::corollary(0.0, 1.0, -0.5).singular_points();
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == -1.0);
  CHECK(pts[1] == 1.0);
}

}  // TEST_SUITE
