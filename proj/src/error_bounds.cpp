#include "sinc_expdecay/error_bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sinc_expdecay/csv.hpp"

namespace sinc {

namespace {

using std::numbers::pi;

void require_admissible(const DecayProfile& profile) {
  // DecayProfile already validates d; checked again so a bound is never
  // produced with cos(d/2) at or near zero.
  const double d = profile.d();
  if (!admissible_width(profile.map_kind(), d) || !(std::cos(0.5 * d) > 0.0)) {
    throw std::out_of_range("error bound: d = " + format_real(d) + " is not admissible");
  }
}

double cos_power(const DecayProfile& profile) {
  return std::pow(std::cos(0.5 * profile.d()), profile.alpha() + profile.beta());
}

}  // namespace

BoundVariant variant_for(MapKind kind) {
  return kind == MapKind::ArcsinhMap ? BoundVariant::ExistingPsi : BoundVariant::NewPhi;
}

double map_factor(const DecayProfile& profile) {
  if (profile.map_kind() == MapKind::ArcsinhMap) {
    return std::pow(2.0, 0.5 * (profile.alpha() + profile.beta()));
  }
  const double e = std::exp(1.0);
  return std::pow(e / (e - 1.0), 0.5 * profile.mu());
}

double bound_constant(const DecayProfile& profile, BoundVariant variant) {
  if (variant != variant_for(profile.map_kind())) {
    throw std::invalid_argument("bound_constant: bound variant does not match the profile's map");
  }
  require_admissible(profile);
  const double rate = std::sqrt(pi * profile.d() * profile.mu());
  const double inner = 2.0 * map_factor(profile) / (rate * (-std::expm1(-2.0 * rate)) * cos_power(profile));
  return 2.0 * profile.K() / rate * (inner + 1.0);
}

double total_bound(const DecayProfile& profile, BoundVariant variant, int n) {
  if (n < 1) throw std::invalid_argument("total_bound: n must be at least 1");
  const double c = bound_constant(profile, variant);
  const double rate = std::sqrt(pi * profile.d() * profile.mu() * n);
  return c * std::sqrt(static_cast<double>(n)) * std::exp(-rate);
}

double n1_norm_bound(const DecayProfile& profile) {
  require_admissible(profile);
  return 4.0 * profile.K() * map_factor(profile) / (profile.mu() * cos_power(profile));
}

double strip_discretization_estimate(double n1_norm, double d, double h) {
  if (!(h > 0.0) || !(d > 0.0)) throw std::invalid_argument("strip_discretization_estimate: d, h must be positive");
  const double q = pi * d / h;
  return n1_norm * std::exp(-q) / (pi * d * (-std::expm1(-2.0 * q)));
}

double discretization_bound(const DecayProfile& profile, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("discretization_bound: h must be positive");
  require_admissible(profile);
  const double d = profile.d();
  const double q = pi * d / h;
  return 4.0 * profile.K() * map_factor(profile) * std::exp(-q) /
         (pi * d * profile.mu() * (-std::expm1(-2.0 * q)) * cos_power(profile));
}

double truncation_bound(const DecayProfile& profile, double h, int n) {
  if (!(h > 0.0)) throw std::invalid_argument("truncation_bound: h must be positive");
  if (n < 1) throw std::invalid_argument("truncation_bound: n must be at least 1");
  const double mu = profile.mu();
  return 2.0 * profile.K() / (mu * h) * std::exp(-mu * n * h);
}

}  // namespace sinc
