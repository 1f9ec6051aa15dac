// Copyright 2026 The Chaoslab Authors
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

#include <boost/multiprecision/cpp_int.hpp>
#include <doctest.h>
#include <limits>
#include <random>

#include "chaoslab/dyadic.hpp"
#include "chaoslab/errors.hpp"

using namespace chaoslab;

namespace {

using boost::multiprecision::cpp_rational;

// Independent model of a dyadic value for oracle comparisons.
cpp_rational to_rational(const dyadic& d) {
  cpp_rational r(d.magnitude());
  if (d.exponent() >= 0) {
    r *= cpp_rational(bigint(1) << d.exponent());
  } else {
    r /= cpp_rational(bigint(1) << -d.exponent());
  }
  if (d.sign() < 0) r = -r;
  return r;
}

dyadic random_small_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> mant(-4096, 4096);
  std::uniform_int_distribution<std::int64_t> expd(-20, 20);
  const std::int64_t m = mant(rng);
  const int sign = m == 0 ? 0 : (m < 0 ? -1 : 1);
  return dyadic::from_parts(sign, bigint(m < 0 ? -m : m), expd(rng));
}

}  // namespace

TEST_CASE("arithmetic agrees with the rational model") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 2000; ++i) {
    const dyadic a = random_small_dyadic(rng);
    const dyadic b = random_small_dyadic(rng);
    CHECK(to_rational(a + b) == to_rational(a) + to_rational(b));
    CHECK(to_rational(a - b) == to_rational(a) - to_rational(b));
    CHECK(to_rational(a * b) == to_rational(a) * to_rational(b));
    const int model = to_rational(a) < to_rational(b)
                          ? -1
                          : (to_rational(a) == to_rational(b) ? 0 : 1);
    CHECK(dyadic::compare(a, b) == model);
  }
}

TEST_CASE("canonical form keeps mantissas odd") {
  const dyadic d = dyadic::from_parts(1, bigint(12), 3);
  CHECK(d.magnitude() == 3);
  CHECK(d.exponent() == 5);
  CHECK(d.sign() == 1);

  const dyadic z = dyadic::from_parts(1, bigint(0), 7);
  CHECK(z.is_zero());
  CHECK(z.exponent() == 0);

  std::mt19937_64 rng(102);
  for (int i = 0; i < 500; ++i) {
    const dyadic a = random_small_dyadic(rng);
    if (!a.is_zero()) CHECK(a.magnitude() % 2 == 1);
  }
}

TEST_CASE("integer constructor covers the full 64-bit range") {
  const long long lo = std::numeric_limits<long long>::min();
  const dyadic d(lo);
  CHECK(d.sign() == -1);
  CHECK(to_rational(d) == -cpp_rational(bigint(1) << 63));
  CHECK(dyadic(0).is_zero());
  CHECK(to_rational(dyadic(-6)) == cpp_rational(-6));
}

TEST_CASE("addition round-trips") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 1000; ++i) {
    const dyadic a = random_small_dyadic(rng);
    const dyadic b = random_small_dyadic(rng);
    CHECK((a + b) - b == a);
    CHECK(a + dyadic(0) == a);
    CHECK(a - a == dyadic(0));
    CHECK(-(-a) == a);
  }
}

TEST_CASE("pow2 and position") {
  CHECK(dyadic::pow2(0) == dyadic(1));
  CHECK(dyadic::pow2(10) == dyadic(1024));
  CHECK(dyadic::pow2(-2) * dyadic(4) == dyadic(1));
  CHECK(dyadic::pow2(5).position() == 5);
  CHECK(dyadic(3).position() == 1);
  CHECK(dyadic::from_parts(-1, bigint(5), -4).position() == -2);
  CHECK_THROWS_AS((void)dyadic(0).position(), std::exception);
}

TEST_CASE("pow raises exactly") {
  const dyadic d = dyadic::parse("-3/8");
  CHECK(to_rational(d.pow(3)) == cpp_rational(-27, 512));
  CHECK(d.pow(1) == d);
  CHECK(dyadic(0).pow(4) == dyadic(0));
}

TEST_CASE("rendering picks the friendliest exact form") {
  CHECK(dyadic(42).str() == "42");
  CHECK(dyadic(-42).str() == "-42");
  CHECK(dyadic(0).str() == "0");
  CHECK(dyadic::parse("-0.75").str() == "-0.75");
  CHECK(dyadic::parse("3/8").str() == "0.375");
  CHECK(dyadic::pow2(-4).str() == "0.0625");
  CHECK(dyadic::pow2(10).str() == "1024");
  // Extreme exponents fall back to the mantissa * 2^exponent form.
  CHECK(dyadic::pow2(-80).str() == "1*2^-80");
  CHECK(dyadic::from_parts(1, bigint(3), 100).str() == "3*2^100");
}

TEST_CASE("parsing accepts every rendered form") {
  std::mt19937_64 rng(104);
  for (int i = 0; i < 500; ++i) {
    const dyadic a = random_small_dyadic(rng);
    CHECK(dyadic::parse(a.str()) == a);
  }
  CHECK(dyadic::parse("3/8") == dyadic::from_parts(1, bigint(3), -3));
  CHECK(dyadic::parse("-0.5") == dyadic::from_parts(-1, bigint(1), -1));
  CHECK(dyadic::parse("7*2^-3") == dyadic::from_parts(1, bigint(7), -3));
  CHECK(dyadic::parse(" 12 ") == dyadic(12));
  CHECK(dyadic::parse(dyadic::pow2(-500).str()) == dyadic::pow2(-500));
}

TEST_CASE("parsing rejects non-dyadic input") {
  CHECK_THROWS_AS((void)dyadic::parse("1/3"), malformed_input);
  CHECK_THROWS_AS((void)dyadic::parse("x"), malformed_input);
  CHECK_THROWS_AS((void)dyadic::parse(""), malformed_input);
  CHECK_THROWS_AS((void)dyadic::parse("1.2.3"), malformed_input);
  CHECK_THROWS_AS((void)dyadic::parse("2^"), malformed_input);
  CHECK_THROWS_AS((void)dyadic::parse("1/0"), malformed_input);
}

TEST_CASE("comparisons never materialize distant scales") {
  const dyadic big = dyadic::pow2(std::int64_t{1} << 40);
  const dyadic small = dyadic::pow2(-(std::int64_t{1} << 40));
  CHECK(small < big);
  CHECK(big > small);
  CHECK(abs(-big) == big);
}

TEST_CASE("additions across astronomical separations are refused") {
  const dyadic big(1);
  const dyadic tiny = dyadic::pow2(-(std::int64_t{1} << 29));
  CHECK_THROWS_AS((void)(big + tiny), resource_limit);
  // Same-scale addition is unaffected.
  CHECK(tiny + tiny == dyadic::pow2(1 - (std::int64_t{1} << 29)));
}

TEST_CASE("from_parts validates the sign") {
  CHECK_THROWS_AS((void)dyadic::from_parts(2, bigint(1), 0), malformed_input);
  CHECK_THROWS_AS((void)dyadic::from_parts(1, bigint(-1), 0), malformed_input);
}
