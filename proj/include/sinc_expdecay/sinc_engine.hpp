#pragma once

// Sinc approximation on (0, inf):
//
//   f(t) ~ sum_{k=-M}^{N} f(map(kh)) S(k,h)(map^{-1}(t))
//
// with (M, N, h) chosen from the decay profile of f.

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sinc_expdecay/conformal_maps.hpp"

namespace sinc {

/// Constants (K, alpha, beta, d) of the decay condition
///   |f(z)| <= K |z/(1+z)|^alpha |e^{-z}|^beta
/// on the image of the strip D_d under the given map.
class DecayProfile {
 public:
  /// Throws std::invalid_argument for non-positive constants and
  /// std::out_of_range when d is not admissible for the map.
  DecayProfile(double K, double alpha, double beta, double d, MapKind map_kind);

  double K() const { return K_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double d() const { return d_; }
  MapKind map_kind() const { return map_kind_; }
  double mu() const { return alpha_ < beta_ ? alpha_ : beta_; }

  /// Same constants with alpha and beta exchanged.
  DecayProfile swapped() const { return {K_, beta_, alpha_, d_, map_kind_}; }
  DecayProfile with_K(double K) const { return {K, alpha_, beta_, d_, map_kind_}; }

 private:
  double K_;
  double alpha_;
  double beta_;
  double d_;
  MapKind map_kind_;
};

struct SincParams {
  int n = 0;
  double h = 0.0;
  int M = 0;
  int N = 0;
};

/// S(k,h)(x) = sin(pi(x/h - k)) / (pi(x/h - k)).
/// Offsets within 1e-14 of an integer are treated as that integer, so the
/// kernel is exactly 1 at its own node and exactly 0 at every other node.
double sinc_kernel(int k, double h, double x);

/// Mesh and truncation limits for n: M = n, N = ceil(alpha n / beta) when
/// mu = alpha, otherwise N = n, M = ceil(beta n / alpha); h = sqrt(pi d / (mu n)).
/// Throws std::invalid_argument for n < 1.
SincParams select_params(const DecayProfile& profile, int n);

using RealFunction = std::function<double(double)>;

/// Raised when f is not finite at a sample point.
class SampleError : public std::runtime_error {
 public:
  SampleError(int k, double t, double value);
  int k() const { return k_; }

 private:
  int k_;
};

/// Raised by evaluate_batch; carries the index of the offending point.
class BatchEvaluationError : public std::domain_error {
 public:
  BatchEvaluationError(std::size_t index, const std::string& what);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class Approximant {
 public:
  Approximant(DecayProfile profile, SincParams params, std::vector<double> samples);

  const DecayProfile& profile() const { return profile_; }
  const SincParams& params() const { return params_; }
  MapKind map_kind() const { return profile_.map_kind(); }

  /// samples()[i] = f(map(k h)) with k = i - M.
  std::span<const double> samples() const { return samples_; }
  double sample(int k) const { return samples_.at(static_cast<std::size_t>(k + params_.M)); }

  /// The cardinal series in the strip variable x.
  double evaluate_strip(double x) const;

 private:
  DecayProfile profile_;
  SincParams params_;
  std::vector<double> samples_;
};

/// Samples f at map(kh), k = -M..N. Throws SampleError on a non-finite value.
Approximant build_approximant(const RealFunction& f, const DecayProfile& profile, int n);

/// Throws std::domain_error for t <= 0.
double evaluate(const Approximant& a, double t);

std::vector<double> evaluate_batch(const Approximant& a, std::span<const double> ts);

}  // namespace sinc
