#pragma once

// Sampling oracles for the inequalities behind the logistic-log error bound,
// and for the decay condition of the example functions.
//
// Every check reports the worst margin RHS - LHS over its samples; a check
// passes when that margin is at least -kMarginTolerance. Samples come from a
// seeded std::mt19937_64, so a (samples, seed) pair reproduces a report bit
// for bit.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "sinc_expdecay/testbed.hpp"

namespace sinc {

inline constexpr double kMarginTolerance = 1e-12;

struct SampleReport {
  std::string check_name;
  std::size_t checked = 0;
  double worst_margin = 0.0;
  std::string worst_point;
  bool passed = false;
};

struct LemmaConstants {
  /// l = log(e/(e-1))
  double l;
};

LemmaConstants lemma_constants();

/// |log(1+e^z)/(1+log(1+e^z)) * (e^{-l} + e^z)/e^z| on the closed strip |Im z| <= pi.
/// On Im z = +-pi the logarithm is the limit from inside the strip.
double essential_expression(std::complex<double> zeta);

/// log(1+e^x)/(1+log(1+e^x)) * (1+e^x)/e^x.
double real_line_expression(double x);

/// p(t) = 1 + e^t (e^{t+1} - 1 + t + t^2 - e (1 + t + t^2)).
double p_polynomial(double t);

/// essential_expression on Im z = pi, x > 0, rewritten with t = log(e^x - 1):
/// g(t) = |(t + i pi)/(1 + t + i pi)| |1 - (e-1)/(e (e^t + 1))|.
double boundary_g(double t);

/// essential_expression on Im z = pi, x < 0, rewritten with t = log(1 - e^x):
/// h(t) = t e^{-1} expm1(1+t) / ((1+t) expm1(t)), free of cancellation at t = -1.
double boundary_h(double t);

struct LimitValues {
  double essential_at_origin;  // x -> 0 on Im z = pi, expected 1/e
  double h_at_zero;            // expected (e-1)/e
  double h_at_minus_one;       // expected 1/(e-1)
};

/// Values at the removable points, from symmetric offsets of 1e-7 (h) and
/// from t = -1e12 in g (x -> 0+ corresponds to t -> -inf, where g converges
/// like 1/|t|).
LimitValues limit_values();

SampleReport check_essential_inequality(std::size_t samples, std::uint64_t seed);
SampleReport check_real_line_bound(std::size_t samples, std::uint64_t seed);
SampleReport check_p_nonneg(std::size_t samples, std::uint64_t seed);
SampleReport check_exp_bound(std::size_t samples, std::uint64_t seed);

/// |f(z)| <= K |z/(1+z)|^alpha |e^{-z}|^beta (+ 1e-12 K) on (0, inf) and on the
/// image of the strip boundary, |Re| <= 30. Margins are divided by K.
SampleReport check_decay_condition(ExampleId id, MapKind kind, std::size_t samples, std::uint64_t seed);
SampleReport check_decay_condition(const std::string& name, const ComplexFunction& f, const DecayProfile& profile,
                                   std::size_t samples, std::uint64_t seed);

/// check_name,samples,worst_margin,worst_point,passed
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SampleReport& report);

}  // namespace sinc
