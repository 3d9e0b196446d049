#pragma once

// The three exponentially decaying test functions, each with a decay profile
// for the arcsinh map and one for the logistic-log map, and the convergence
// sweep that measures the observed maximum error on a dyadic grid.

#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sinc_expdecay/error_bounds.hpp"
#include "sinc_expdecay/sinc_engine.hpp"

namespace sinc {

enum class ExampleId { F1, F2, F3 };

inline constexpr ExampleId kAllExamples[] = {ExampleId::F1, ExampleId::F2, ExampleId::F3};

std::string_view short_name(ExampleId id);
std::optional<ExampleId> parse_example_id(std::string_view name);

using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

struct ExampleFunction {
  ExampleId id;
  RealFunction eval;
  /// Principal-branch analytic extension, used to check the decay condition off the real axis.
  ComplexFunction eval_complex;
  DecayProfile profile_psi;
  DecayProfile profile_phi;

  const DecayProfile& profile(MapKind kind) const {
    return kind == MapKind::ArcsinhMap ? profile_psi : profile_phi;
  }
};

/// f1(t) = t^{pi/4} e^{-t}
/// f2(t) = sqrt(e^t - 1) e^{-3t/2}
/// f3(t) = sqrt(1 + (1 - 2e^{-t})^2) t/(1+t) e^{-t}
ExampleFunction example(ExampleId id);

/// t_j = 2^{(j-100)/2}, j = 0..200.
std::vector<double> evaluation_grid();

/// Maximum absolute error of the approximant over evaluation_grid().
double observed_error(const RealFunction& f, const Approximant& a);
double observed_error(const ExampleFunction& ex, const Approximant& a);

struct ErrorReport {
  int n = 0;
  double h = 0.0;
  int M = 0;
  int N = 0;
  double observed_error = 0.0;
  double bound = 0.0;
};

/// Raised when building or evaluating the approximant for some n fails.
class SweepError : public std::runtime_error {
 public:
  SweepError(int n, const std::string& what);
  int n() const { return n_; }

 private:
  int n_;
};

std::vector<ErrorReport> convergence_sweep(const ExampleFunction& ex, MapKind kind, std::span<const int> n_list);

/// n_min, n_min + step, ... up to n_max inclusive.
std::vector<int> n_range(int n_min, int n_max, int n_step);

struct RateFit {
  double slope = 0.0;
  std::size_t points = 0;
};

/// Least-squares slope of ln(observed_error) against sqrt(n), using only the
/// reports whose error lies in [lo, hi].
RateFit fit_rate(std::span<const ErrorReport> reports, double lo = 1e-12, double hi = 1e-2);

/// -sqrt(pi d mu), the exponent the bound predicts for ln(error) vs sqrt(n).
double predicted_rate(const DecayProfile& profile);

/// CSV with header n,h,M,N,observed_error,bound.
void write_csv(std::ostream& out, std::span<const ErrorReport> reports);

}  // namespace sinc
