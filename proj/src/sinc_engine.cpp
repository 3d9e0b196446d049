#include "sinc_expdecay/sinc_engine.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sinc_expdecay/csv.hpp"

namespace sinc {

namespace {

using std::numbers::pi;

constexpr double kNodeSnap = 1e-14;
constexpr double kCeilGuard = 1e-12;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      carry_ += (sum_ - t) + term;
    } else {
      carry_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

bool is_odd(double integral) { return std::fmod(integral, 2.0) != 0.0; }

// ceil(x) after snapping x to a nearby integer.
int guarded_ceil(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= kCeilGuard) return static_cast<int>(nearest);
  return static_cast<int>(std::ceil(x));
}

}  // namespace

DecayProfile::DecayProfile(double K, double alpha, double beta, double d, MapKind map_kind)
    : K_(K), alpha_(alpha), beta_(beta), d_(d), map_kind_(map_kind) {
  if (!(K > 0.0) || !(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(K) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw std::invalid_argument("DecayProfile: K, alpha and beta must be positive and finite");
  }
  if (!admissible_width(map_kind, d)) {
    throw std::out_of_range("DecayProfile: d = " + format_real(d) + " is not admissible for the " +
                            std::string(short_name(map_kind)) + " map");
  }
}

double sinc_kernel(int k, double h, double x) {
  if (!(h > 0.0)) throw std::invalid_argument("sinc_kernel: h must be positive");
  const double u = x / h - k;
  const double nearest = std::round(u);
  const double r = u - nearest;
  if (std::abs(r) < kNodeSnap) return nearest == 0.0 ? 1.0 : 0.0;
  const double s = std::sin(pi * r);
  return (is_odd(nearest) ? -s : s) / (pi * u);
}

SincParams select_params(const DecayProfile& profile, int n) {
  if (n < 1) throw std::invalid_argument("select_params: n must be at least 1");
  const double alpha = profile.alpha();
  const double beta = profile.beta();
  const double mu = profile.mu();
  SincParams p;
  p.n = n;
  if (alpha <= beta) {
    p.M = n;
    p.N = guarded_ceil(alpha * n / beta);
  } else {
    p.N = n;
    p.M = guarded_ceil(beta * n / alpha);
  }
  p.h = std::sqrt(pi * profile.d() / (mu * n));
  return p;
}

SampleError::SampleError(int k, double t, double value)
    : std::runtime_error("non-finite sample at k = " + std::to_string(k) + " (t = " + format_real(t) +
                         ", f(t) = " + format_real(value) + ")"),
      k_(k) {}

BatchEvaluationError::BatchEvaluationError(std::size_t index, const std::string& what)
    : std::domain_error("evaluate_batch: point " + std::to_string(index) + ": " + what), index_(index) {}

Approximant::Approximant(DecayProfile profile, SincParams params, std::vector<double> samples)
    : profile_(profile), params_(params), samples_(std::move(samples)) {
  if (samples_.size() != static_cast<std::size_t>(params_.M + params_.N + 1)) {
    throw std::invalid_argument("Approximant: expected M + N + 1 samples");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw SampleError(static_cast<int>(i) - params_.M, map_forward(profile_.map_kind(),
                                                                     (static_cast<int>(i) - params_.M) * params_.h),
                        samples_[i]);
    }
  }
}

double Approximant::evaluate_strip(double x) const {
  const double v = x / params_.h;
  const double nearest = std::round(v);
  const double r = v - nearest;
  if (std::abs(r) < kNodeSnap) {
    if (nearest < -params_.M || nearest > params_.N) return 0.0;
    return sample(static_cast<int>(nearest));
  }
  // sin(pi (v - k)) = (-1)^k sin(pi v)
  const double s = is_odd(nearest) ? -std::sin(pi * r) : std::sin(pi * r);
  CompensatedSum sum;
  for (int k = -params_.M; k <= params_.N; ++k) {
    const double w = samples_[static_cast<std::size_t>(k + params_.M)];
    const double signed_s = (k % 2 == 0) ? s : -s;
    sum.add(w * signed_s / (pi * (v - k)));
  }
  return sum.value();
}

Approximant build_approximant(const RealFunction& f, const DecayProfile& profile, int n) {
  const SincParams params = select_params(profile, n);
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(params.M + params.N + 1));
  for (int k = -params.M; k <= params.N; ++k) {
    const double t = map_forward(profile.map_kind(), k * params.h);
    const double value = f(t);
    if (!std::isfinite(value)) throw SampleError(k, t, value);
    samples.push_back(value);
  }
  return Approximant(profile, params, std::move(samples));
}

double evaluate(const Approximant& a, double t) {
  if (!(t > 0.0)) throw std::domain_error("evaluate: t must be positive");
  return a.evaluate_strip(map_inverse(a.map_kind(), t));
}

std::vector<double> evaluate_batch(const Approximant& a, std::span<const double> ts) {
  std::vector<double> out;
  out.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    try {
      out.push_back(evaluate(a, ts[i]));
    } catch (const std::domain_error& e) {
      throw BatchEvaluationError(i, e.what());
    }
  }
  return out;
}

}  // namespace sinc
