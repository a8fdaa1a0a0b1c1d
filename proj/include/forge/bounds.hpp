#pragma once

#include <cstdint>

#include "forge/rational.hpp"

namespace forge {

/// Upper-tail bound exp(-δ²μ/3). Requires μ > 0 and 0 < δ <= 1.
double chernoff_upper(const Rational& mu, const Rational& delta);
/// Lower-tail bound exp(-δ²μ/2), same domain.
double chernoff_lower(const Rational& mu, const Rational& delta);

/// A constant that is exact when the exponent 1/δ² is an integer and
/// otherwise the exact value of the nearest double.
struct ConstantValue {
  Rational value;
  bool exact = true;
};

/// 1.01 · 4 · p^(-1/δ²): the fixed 1% margin above the required threshold.
/// Accepts 0 < δ <= 1 and 0 < p < 1.
ConstantValue constant_D(const Rational& delta, const Rational& p);
/// D² / δ² with D from constant_D.
ConstantValue constant_C(const Rational& delta, const Rational& p);

/// 4 - p^(1/δ²) · D; negative exactly when D > 4 p^(-1/δ²).
ConstantValue q_n_exponent(const Rational& delta, const Rational& p, const Rational& d);
/// 1 - exp((4 - p^(1/δ²) D) n ln n), clamped to [0, 1].
double q_n_bound(const Rational& delta, const Rational& p, const Rational& d, std::uint64_t n);

/// 3^n · exp(-(D-1)²/2 · n ln n), clamped to [0, 1]; evaluated in log space.
double propQ_failure_bound(const Rational& d, std::uint64_t n);

struct EdgeCount {
  std::uint64_t value = 0;
  /// ⌈C n ln n⌉ before clamping.
  std::uint64_t unclamped = 0;
  /// True when the value was cut down to n(n-1)/2.
  bool clamped = false;
};

/// ⌈C n ln n⌉, clamped at n(n-1)/2.
EdgeCount m_of(std::uint64_t n, const Rational& c);

/// ⌈factor · n · ln n⌉ evaluated with 50 significant digits, saturating at
/// the largest uint64.
std::uint64_t ceil_n_log_n(const Rational& factor, std::uint64_t n);

}  // namespace forge
