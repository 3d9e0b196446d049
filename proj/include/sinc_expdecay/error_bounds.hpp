#pragma once

// Computable a-priori error bounds for the Sinc approximation composed with
// the arcsinh map and the logistic-log map:
//
//   sup |f(t) - approximant(t)| <= C sqrt(n) exp(-sqrt(pi d mu n)).
//
// All formulas are evaluated in double precision without directed rounding.

#include "sinc_expdecay/sinc_engine.hpp"

namespace sinc {

enum class BoundVariant { ExistingPsi, NewPhi };

BoundVariant variant_for(MapKind kind);

/// 2^{(alpha+beta)/2} for the arcsinh map, (e/(e-1))^{mu/2} for the logistic-log map.
double map_factor(const DecayProfile& profile);

/// C = (2K/sqrt(pi d mu)) { 2 factor / (sqrt(pi d mu)(1 - e^{-2 sqrt(pi d mu)}) cos^{alpha+beta}(d/2)) + 1 }.
/// Throws std::invalid_argument when the variant does not match the profile's
/// map and std::out_of_range on an inadmissible d.
double bound_constant(const DecayProfile& profile, BoundVariant variant);

/// C sqrt(n) e^{-sqrt(pi d mu n)}.
double total_bound(const DecayProfile& profile, BoundVariant variant, int n);

/// Bound on the strip norm N1(F, d) of F = f o map:
/// 4K factor / (mu cos^{alpha+beta}(d/2)).
double n1_norm_bound(const DecayProfile& profile);

/// Infinite-series discretization error for a function of strip norm `n1_norm`:
/// n1_norm e^{-pi d/h} / (pi d (1 - e^{-2 pi d/h})).
double strip_discretization_estimate(double n1_norm, double d, double h);

/// 4K factor e^{-pi d/h} / (pi d mu (1 - e^{-2 pi d/h}) cos^{alpha+beta}(d/2)).
double discretization_bound(const DecayProfile& profile, double h);

/// (2K/(mu h)) e^{-mu n h}.
double truncation_bound(const DecayProfile& profile, double h, int n);

}  // namespace sinc
