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

#ifndef CHAOSLAB_DYADIC_HPP
#define CHAOSLAB_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace chaoslab {

using bigint = boost::multiprecision::cpp_int;

namespace detail {

/// Checked 64-bit arithmetic for exponents; throws exponent_overflow.
std::int64_t checked_add_i64(std::int64_t a, std::int64_t b);
std::int64_t checked_sub_i64(std::int64_t a, std::int64_t b);
std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b);

}  // namespace detail

/// Exact dyadic rational, value = sign * mantissa * 2^exponent.
///
/// Canonical form: the mantissa is odd and positive, or the value is zero
/// with sign = 0, mantissa = 0 and exponent = 0. Every constructor and
/// operation canonicalizes, so structural equality of the three fields is
/// value equality. Mantissas are arbitrary-precision; exponents are signed
/// 64-bit and every exponent computation is overflow-checked. Addition of
/// values whose binary scales are separated by more than ~2^28 bits is
/// refused (resource_limit) instead of silently allocating gigabytes; the
/// sequence-space layer provides a non-materializing comparison for such
/// sums.
class dyadic {
 public:
  dyadic() = default;
  dyadic(long long value);  // NOLINT: implicit by design, mirrors int literals

  /// 2^e, exactly.
  static dyadic pow2(std::int64_t e);

  /// sign * magnitude * 2^exponent, canonicalized. sign must be -1, 0 or +1
  /// and magnitude non-negative; a zero magnitude forces the zero value.
  static dyadic from_parts(int sign, bigint magnitude, std::int64_t exponent);

  /// Accepts "42", "-0.75", "3/8" (denominator a power of two) and "m*2^e".
  /// Throws malformed_input for anything that is not an exact dyadic.
  static dyadic parse(std::string_view text);

  int sign() const noexcept { return sign_; }
  const bigint& magnitude() const noexcept { return mag_; }
  std::int64_t exponent() const noexcept { return exp_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  /// floor(log2(|value|)). Requires a non-zero value.
  std::int64_t position() const;

  /// Total order on values; returns -1, 0 or +1.
  static int compare(const dyadic& a, const dyadic& b);

  /// p-th power, p >= 1.
  dyadic pow(unsigned p) const;

  /// Decimal rendering for |exponent| <= 64, "m*2^e" otherwise.
  std::string str() const;

  /// Nearest-double approximation (diagnostics only; may over/underflow to
  /// inf/0 for extreme exponents).
  double to_double() const noexcept;

  friend dyadic operator+(const dyadic& a, const dyadic& b);
  friend dyadic operator-(const dyadic& a, const dyadic& b);
  friend dyadic operator*(const dyadic& a, const dyadic& b);
  dyadic operator-() const;

  friend bool operator==(const dyadic& a, const dyadic& b) noexcept {
    return a.sign_ == b.sign_ && a.exp_ == b.exp_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const dyadic& a, const dyadic& b) noexcept {
    return !(a == b);
  }
  friend bool operator<(const dyadic& a, const dyadic& b) { return compare(a, b) < 0; }
  friend bool operator<=(const dyadic& a, const dyadic& b) { return compare(a, b) <= 0; }
  friend bool operator>(const dyadic& a, const dyadic& b) { return compare(a, b) > 0; }
  friend bool operator>=(const dyadic& a, const dyadic& b) { return compare(a, b) >= 0; }

 private:
  void normalize();
  static dyadic from_signed(bigint value, std::int64_t exponent);
  static int compare_magnitude(const dyadic& a, const dyadic& b);

  int sign_ = 0;
  bigint mag_;  // non-negative; odd unless zero
  std::int64_t exp_ = 0;
};

dyadic abs(const dyadic& d);
std::ostream& operator<<(std::ostream& os, const dyadic& d);

}  // namespace chaoslab

#endif  // CHAOSLAB_DYADIC_HPP
