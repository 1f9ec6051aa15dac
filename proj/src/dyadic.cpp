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

#include "chaoslab/dyadic.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace mp = boost::multiprecision;

namespace detail {

std::int64_t checked_add_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw exponent_overflow("64-bit exponent addition overflowed");
  }
  return r;
}

std::int64_t checked_sub_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw exponent_overflow("64-bit exponent subtraction overflowed");
  }
  return r;
}

std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw exponent_overflow("64-bit exponent multiplication overflowed");
  }
  return r;
}

}  // namespace detail

namespace {

// Hard cap on any single mantissa shift: 2^28 bits = 32 MiB of mantissa.
// Exact additions across wider binary separations are refused; callers that
// need such comparisons use the term-wise machinery in seqspace.
constexpr std::int64_t kMaxShiftBits = std::int64_t{1} << 28;

void guard_shift(std::int64_t bits) {
  if (bits < 0 || bits > kMaxShiftBits) {
    throw resource_limit(
        "dyadic addition would span more than 2^28 binary places; "
        "use the term-wise sum comparison instead of materializing");
  }
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Parses an optionally signed decimal integer into (sign, magnitude digits).
// Throws malformed_input on anything else.
std::pair<int, std::string_view> split_sign(std::string_view s) {
  if (s.empty()) throw malformed_input("empty numeric literal");
  int sign = 1;
  if (s.front() == '+') {
    s.remove_prefix(1);
  } else if (s.front() == '-') {
    sign = -1;
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw malformed_input("invalid decimal digits in numeric literal");
  }
  return {sign, s};
}

bigint parse_magnitude(std::string_view digits) {
  // cpp_int's string constructor treats a leading 0 as an octal prefix;
  // trim the zeros so "03125" reads as decimal.
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return bigint(std::string(digits));
}

std::int64_t parse_i64(std::string_view s) {
  auto [sign, digits] = split_sign(s);
  bigint v = parse_magnitude(digits);
  if (v > bigint(std::numeric_limits<std::int64_t>::max())) {
    throw malformed_input("integer literal does not fit in 64 bits");
  }
  return sign * v.convert_to<std::int64_t>();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

dyadic::dyadic(long long value) {
  if (value != 0) {
    sign_ = value < 0 ? -1 : 1;
    mag_ = value < 0 ? bigint(-(value + 1)) + 1 : bigint(value);
    exp_ = 0;
    normalize();
  }
}

dyadic dyadic::pow2(std::int64_t e) { return from_parts(1, bigint(1), e); }

dyadic dyadic::from_parts(int sign, bigint magnitude, std::int64_t exponent) {
  if (sign < -1 || sign > 1) throw malformed_input("dyadic sign must be -1, 0 or +1");
  if (magnitude < 0) throw malformed_input("dyadic magnitude must be non-negative");
  dyadic d;
  if (magnitude == 0 || sign == 0) {
    if (sign != 0 && magnitude != 0) {
      throw malformed_input("dyadic with sign 0 must have magnitude 0");
    }
    return d;
  }
  d.sign_ = sign;
  d.mag_ = std::move(magnitude);
  d.exp_ = exponent;
  d.normalize();
  return d;
}

void dyadic::normalize() {
  if (mag_ == 0) {
    sign_ = 0;
    exp_ = 0;
    return;
  }
  const auto tz = static_cast<std::int64_t>(mp::lsb(mag_));
  if (tz > 0) {
    mag_ >>= static_cast<std::size_t>(tz);
    exp_ = detail::checked_add_i64(exp_, tz);
  }
}

dyadic dyadic::from_signed(bigint value, std::int64_t exponent) {
  if (value == 0) return dyadic();
  int sign = value < 0 ? -1 : 1;
  if (sign < 0) value = -value;
  return from_parts(sign, std::move(value), exponent);
}

std::int64_t dyadic::position() const {
  if (sign_ == 0) throw malformed_input("position() of zero is undefined");
  return detail::checked_add_i64(exp_, static_cast<std::int64_t>(mp::msb(mag_)));
}

int dyadic::compare_magnitude(const dyadic& a, const dyadic& b) {
  const std::int64_t pa = a.position();
  const std::int64_t pb = b.position();
  if (pa != pb) return pa < pb ? -1 : 1;
  // Same leading binary place: align mantissas. The shift equals the
  // difference of mantissa widths, which is bounded by the wider mantissa.
  if (a.exp_ >= b.exp_) {
    bigint t = a.mag_ << static_cast<std::size_t>(a.exp_ - b.exp_);
    return t.compare(b.mag_);
  }
  bigint t = b.mag_ << static_cast<std::size_t>(b.exp_ - a.exp_);
  return -t.compare(a.mag_);
}

int dyadic::compare(const dyadic& a, const dyadic& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  if (a.sign_ == 0) return 0;
  const int cm = compare_magnitude(a, b);
  return a.sign_ > 0 ? cm : -cm;
}

dyadic operator+(const dyadic& a, const dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t e = std::min(a.exp_, b.exp_);
  const std::int64_t sa = a.exp_ - e;
  const std::int64_t sb = b.exp_ - e;
  guard_shift(sa);
  guard_shift(sb);
  bigint va = a.mag_ << static_cast<std::size_t>(sa);
  if (a.sign_ < 0) va = -va;
  bigint vb = b.mag_ << static_cast<std::size_t>(sb);
  if (b.sign_ < 0) vb = -vb;
  return dyadic::from_signed(va + vb, e);
}

dyadic operator-(const dyadic& a, const dyadic& b) { return a + (-b); }

dyadic operator*(const dyadic& a, const dyadic& b) {
  if (a.is_zero() || b.is_zero()) return dyadic();
  dyadic r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = a.mag_ * b.mag_;  // odd * odd stays odd
  r.exp_ = detail::checked_add_i64(a.exp_, b.exp_);
  return r;
}

dyadic dyadic::operator-() const {
  dyadic r = *this;
  r.sign_ = -r.sign_;
  return r;
}

dyadic dyadic::pow(unsigned p) const {
  if (p == 0) throw malformed_input("dyadic::pow requires p >= 1");
  if (sign_ == 0) return dyadic();
  dyadic r;
  r.sign_ = (sign_ < 0 && (p % 2 == 1)) ? -1 : 1;
  r.mag_ = mp::pow(mag_, p);
  r.exp_ = detail::checked_mul_i64(exp_, static_cast<std::int64_t>(p));
  return r;
}

std::string dyadic::str() const {
  if (sign_ == 0) return "0";
  std::string out = sign_ < 0 ? "-" : "";
  if (exp_ >= 0 && exp_ <= 64) {
    bigint v = mag_ << static_cast<std::size_t>(exp_);
    return out + v.str();
  }
  if (exp_ < 0 && exp_ >= -64) {
    const auto d = static_cast<std::size_t>(-exp_);
    const bigint ip = mag_ >> d;
    const bigint frac = mag_ - (ip << d);
    // frac / 2^d rendered exactly: frac * 5^d, left-padded to d digits.
    const bigint scaled = frac * mp::pow(bigint(5), static_cast<unsigned>(d));
    std::string digits = scaled.str();
    if (digits.size() < d) digits.insert(0, d - digits.size(), '0');
    return out + ip.str() + "." + digits;
  }
  return out + mag_.str() + "*2^" + std::to_string(exp_);
}

double dyadic::to_double() const noexcept {
  if (sign_ == 0) return 0.0;
  const auto bits = static_cast<std::int64_t>(mp::msb(mag_)) + 1;
  double m;
  std::int64_t e2 = exp_;
  if (bits > 62) {
    m = (mag_ >> static_cast<std::size_t>(bits - 62)).convert_to<double>();
    e2 += bits - 62;
  } else {
    m = mag_.convert_to<double>();
  }
  if (e2 > 4000) return sign_ * std::numeric_limits<double>::infinity();
  if (e2 < -4000) return sign_ * 0.0;
  return sign_ * std::ldexp(m, static_cast<int>(e2));
}

dyadic dyadic::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw malformed_input("empty dyadic literal");

  if (auto pos = s.find("*2^"); pos != std::string_view::npos) {
    auto [msign, mdigits] = split_sign(s.substr(0, pos));
    bigint mag = parse_magnitude(mdigits);
    std::int64_t e = parse_i64(s.substr(pos + 3));
    return from_parts(mag == 0 ? 0 : msign, std::move(mag), e);
  }

  if (auto pos = s.find('/'); pos != std::string_view::npos) {
    auto [nsign, ndigits] = split_sign(s.substr(0, pos));
    auto [dsign, ddigits] = split_sign(s.substr(pos + 1));
    if (dsign < 0) throw malformed_input("denominator must be positive");
    bigint num = parse_magnitude(ndigits);
    bigint den = parse_magnitude(ddigits);
    if (den == 0) throw malformed_input("zero denominator");
    if (mp::lsb(den) != mp::msb(den)) {
      throw malformed_input("denominator is not a power of two; value is not dyadic");
    }
    const auto t = static_cast<std::int64_t>(mp::msb(den));
    return from_parts(num == 0 ? 0 : nsign, std::move(num), -t);
  }

  if (auto pos = s.find('.'); pos != std::string_view::npos) {
    auto head = s.substr(0, pos);
    auto fracpart = s.substr(pos + 1);
    auto [isign, idigits] = split_sign(head);
    if (!all_digits(fracpart)) throw malformed_input("invalid fraction digits");
    const auto d = fracpart.size();
    bigint n = parse_magnitude(idigits);
    n *= mp::pow(bigint(10), static_cast<unsigned>(d));
    n += parse_magnitude(fracpart);
    if (n == 0) return dyadic();
    const bigint p5 = mp::pow(bigint(5), static_cast<unsigned>(d));
    bigint q = n / p5;
    if (q * p5 != n) {
      throw malformed_input("decimal literal is not an exact dyadic rational");
    }
    return from_parts(isign, std::move(q), -static_cast<std::int64_t>(d));
  }

  auto [sign, digits] = split_sign(s);
  bigint mag = parse_magnitude(digits);
  return from_parts(mag == 0 ? 0 : sign, std::move(mag), 0);
}

dyadic abs(const dyadic& d) {
  return d.sign() < 0 ? -d : d;
}

std::ostream& operator<<(std::ostream& os, const dyadic& d) { return os << d.str(); }

}  // namespace chaoslab
