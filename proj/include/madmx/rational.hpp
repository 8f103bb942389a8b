#ifndef MADMX_RATIONAL_HPP
#define MADMX_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace madmx {

/// Exact small rational. Density thresholds drive set membership, so they are
/// compared by cross-multiplication instead of floating point: rho = 2/3
/// admits a pattern of density 2/3, always.
class Rational {
 public:
  constexpr Rational() = default;

  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
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

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend constexpr bool operator<=(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }
  friend constexpr bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend constexpr bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "2/3", "0.8", "1". Decimals are converted exactly
  /// (0.8 -> 4/5), so command-line thresholds behave like fractions.
  static std::optional<Rational> parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return std::nullopt;
    const std::int64_t den = std::stoll(std::string(d));
    if (den == 0) return std::nullopt;
    return Rational(std::stoll(std::string(n)), den);
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (!all_digits(whole) || frac.size() > 15 || (!frac.empty() && !all_digits(frac)))
      return std::nullopt;
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t f = frac.empty() ? 0 : std::stoll(std::string(frac));
    return Rational(std::stoll(std::string(whole)) * den + f, den);
  }
  if (!all_digits(text)) return std::nullopt;
  return Rational(std::stoll(std::string(text)), 1);
}

}  // namespace madmx

#endif
