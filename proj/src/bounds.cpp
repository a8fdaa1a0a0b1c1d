#include "forge/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace forge {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

Float to_float(const Rational& r) { return Float(numerator(r)) / Float(denominator(r)); }

void check_chernoff_domain(const Rational& mu, const Rational& delta) {
  if (mu <= 0) throw std::domain_error("Chernoff bound needs mu > 0, got " + to_string(mu));
  if (delta <= 0 || delta > 1) throw std::domain_error("Chernoff bound needs 0 < delta <= 1, got " + to_string(delta));
}

void check_unit_open(const Rational& x, const char* name) {
  if (x <= 0 || x >= 1) throw std::domain_error(std::string(name) + " must lie in (0, 1), got " + to_string(x));
}

/// p^(1/δ²) as an exact rational when 1/δ² is an integer.
void check_delta(const Rational& delta) {
  if (delta <= 0 || delta > 1) throw std::domain_error("delta must lie in (0, 1], got " + to_string(delta));
}

ConstantValue p_power(const Rational& delta, const Rational& p) {
  const Rational inv_sq = 1 / (delta * delta);
  if (denominator(inv_sq) == 1 && numerator(inv_sq) <= 4096) {
    const auto e = numerator(inv_sq).convert_to<unsigned>();
    return {Rational(boost::multiprecision::pow(numerator(p), e), boost::multiprecision::pow(denominator(p), e)), true};
  }
  const Float value = boost::multiprecision::exp(to_float(inv_sq) * boost::multiprecision::log(to_float(p)));
  return {from_double(value.convert_to<double>()), false};
}

}  // namespace

double chernoff_upper(const Rational& mu, const Rational& delta) {
  check_chernoff_domain(mu, delta);
  return std::exp(-to_double(delta * delta * mu / 3));
}

double chernoff_lower(const Rational& mu, const Rational& delta) {
  check_chernoff_domain(mu, delta);
  return std::exp(-to_double(delta * delta * mu / 2));
}

ConstantValue constant_D(const Rational& delta, const Rational& p) {
  check_delta(delta);
  check_unit_open(p, "p");
  const ConstantValue power = p_power(delta, p);
  if (power.value == 0) throw std::domain_error("p^(1/delta^2) underflows");
  return {Rational(101, 100) * 4 / power.value, power.exact};
}

ConstantValue constant_C(const Rational& delta, const Rational& p) {
  const ConstantValue d = constant_D(delta, p);
  return {d.value * d.value / (delta * delta), d.exact};
}

ConstantValue q_n_exponent(const Rational& delta, const Rational& p, const Rational& d) {
  check_delta(delta);
  check_unit_open(p, "p");
  if (d <= 1) throw std::domain_error("D must exceed 1, got " + to_string(d));
  const ConstantValue power = p_power(delta, p);
  return {4 - power.value * d, power.exact};
}

double q_n_bound(const Rational& delta, const Rational& p, const Rational& d, std::uint64_t n) {
  if (n < 2) throw std::domain_error("q_n bound needs n >= 2");
  const ConstantValue coeff = q_n_exponent(delta, p, d);
  const Float nf(n);
  const Float exponent = to_float(coeff.value) * nf * boost::multiprecision::log(nf);
  const double value = (1 - boost::multiprecision::exp(exponent)).convert_to<double>();
  return std::clamp(value, 0.0, 1.0);
}

double propQ_failure_bound(const Rational& d, std::uint64_t n) {
  if (d <= 1) throw std::domain_error("D must exceed 1, got " + to_string(d));
  if (n < 2) throw std::domain_error("failure bound needs n >= 2");
  const Float nf(n);
  const Float dm = to_float(d - 1);
  const Float log_value = nf * boost::multiprecision::log(Float(3)) - dm * dm / 2 * nf * boost::multiprecision::log(nf);
  if (log_value >= 0) return 1.0;
  return boost::multiprecision::exp(log_value).convert_to<double>();
}

std::uint64_t ceil_n_log_n(const Rational& factor, std::uint64_t n) {
  if (n == 0) return 0;
  const Float nf(n);
  const Float value = to_float(factor) * nf * boost::multiprecision::log(nf);
  if (value <= 0) return 0;
  if (value >= Float(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
  return boost::multiprecision::ceil(value).convert_to<std::uint64_t>();
}

EdgeCount m_of(std::uint64_t n, const Rational& c) {
  if (n < 2) throw std::domain_error("m(n) needs n >= 2");
  if (c <= 0) throw std::domain_error("C must be positive");
  EdgeCount out;
  out.unclamped = ceil_n_log_n(c, n);
  const std::uint64_t cap = n * (n - 1) / 2;
  out.clamped = out.unclamped > cap;
  out.value = std::min(out.unclamped, cap);
  return out;
}

}  // namespace forge
