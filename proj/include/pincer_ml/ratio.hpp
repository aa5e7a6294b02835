#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "pincer_ml/error.hpp"

namespace pincer_ml {

/// Exact non-negative rational used for confidences and fractional thresholds.
class Ratio {
 public:
  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(ErrorKind::InvalidConfig, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// ceil(this * n), exact.
  constexpr std::int64_t ceil_times(std::int64_t n) const noexcept {
    const __int128 p = static_cast<__int128>(num_) * n;
    __int128 q = p / den_;
    if (p % den_ != 0 && p > 0) ++q;
    return static_cast<std::int64_t>(q);
  }

  friend constexpr bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Parses "0.625", "5/8", or "1" without going through floating point.
  static Ratio parse(std::string_view text) {
    auto bad = [&] { return Error(ErrorKind::InvalidConfig, "not a number: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      return Ratio(parse_int(text.substr(0, slash), bad), parse_int(text.substr(slash + 1), bad));
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool seen_dot = false;
    bool seen_digit = false;
    for (char c : text) {
      if (c == '.' && !seen_dot) {
        seen_dot = true;
      } else if (c >= '0' && c <= '9') {
        seen_digit = true;
        if (num > (INT64_MAX - 9) / 10 || (seen_dot && den > INT64_MAX / 10)) throw bad();
        num = num * 10 + (c - '0');
        if (seen_dot) den *= 10;
      } else {
        throw bad();
      }
    }
    if (!seen_digit) throw bad();
    return Ratio(num, den);
  }

 private:
  template <typename Bad>
  static std::int64_t parse_int(std::string_view s, Bad bad) {
    if (s.empty()) throw bad();
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9' || v > (INT64_MAX - 9) / 10) throw bad();
      v = v * 10 + (c - '0');
    }
    return v;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

}  // namespace pincer_ml
