#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "rz/errors.hpp"

namespace rz {

// Exact fraction, normalized so that gcd(|num|, den) = 1. The denominator
// is unsigned so that B_64's reduced denominator 2^63 still fits.
struct Rational {
  std::int64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) {
    if (d == 0) throw domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    num = n;
    den = static_cast<std::uint64_t>(d);
    normalize();
  }

  static Rational from_parts(std::int64_t n, std::uint64_t d) {
    Rational r;
    if (d == 0) throw domain_error("rational with zero denominator");
    r.num = n;
    r.den = d;
    r.normalize();
    return r;
  }

  void normalize() {
    std::uint64_t a = num < 0 ? static_cast<std::uint64_t>(-(num + 1)) + 1
                              : static_cast<std::uint64_t>(num);
    std::uint64_t g = std::gcd(a, den);
    if (g > 1) {
      num /= static_cast<std::int64_t>(g);
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  Rational operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Parses "p" or "p/q".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw config_error("cannot parse rational: " + s);
    }
  }
};

}  // namespace rz
