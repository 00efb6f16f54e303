#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "vscan/errors.hpp"

namespace vscan {

// Positive rational number, used for frame rates so that sampling index
// arithmetic stays exact (29.97 fps is really 30000/1001).
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den) {
    if (num <= 0 || den <= 0) {
      raise(ErrorCode::InvalidRate, "frame rate must be positive");
    }
    const std::int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

// floor(k * a / b), exact in integer arithmetic.
inline std::int64_t floor_ratio(std::int64_t k, const Rational& a, const Rational& b) {
  const __int128 numer = static_cast<__int128>(k) * a.num * b.den;
  const __int128 denom = static_cast<__int128>(a.den) * b.num;
  return static_cast<std::int64_t>(numer / denom);
}

// Accepts "30", "29.97" and "30000/1001".
inline Rational parse_rational(const std::string& text) {
  const auto fail = [&] {
    raise(ErrorCode::InvalidRate, "cannot parse frame rate '" + text + "'");
  };
  if (text.empty()) fail();
  const auto is_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const std::string a = text.substr(0, slash);
      const std::string b = text.substr(slash + 1);
      if (!is_digits(a) || !is_digits(b)) fail();
      return Rational::make(std::stoll(a), std::stoll(b));
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      const std::string whole = text.substr(0, dot);
      const std::string frac = text.substr(dot + 1);
      if (!is_digits(whole) || frac.size() > 9 || (!frac.empty() && !is_digits(frac))) fail();
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const std::int64_t num = std::stoll(whole) * den + (frac.empty() ? 0 : std::stoll(frac));
      return Rational::make(num, den);
    }
    if (!is_digits(text)) fail();
    return Rational::make(std::stoll(text), 1);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail();
  }
  return Rational{};  // unreachable
}

}  // namespace vscan
