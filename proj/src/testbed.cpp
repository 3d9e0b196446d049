#include "sinc_expdecay/testbed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "sinc_expdecay/csv.hpp"

namespace sinc {

namespace {

using std::numbers::pi;
using cplx = std::complex<double>;

constexpr double kF1Alpha = pi / 4.0;

double f1(double t) { return std::exp(kF1Alpha * std::log(t) - t); }

double f2(double t) {
  // sqrt(e^t - 1) e^{-3t/2} = sqrt(1 - e^{-t}) e^{-t}
  if (t <= 1.0) return std::sqrt(std::expm1(t)) * std::exp(-1.5 * t);
  return std::sqrt(-std::expm1(-t)) * std::exp(-t);
}

double f3(double t) {
  const double u = 1.0 - 2.0 * std::exp(-t);
  return std::sqrt(1.0 + u * u) * (t / (1.0 + t)) * std::exp(-t);
}

cplx f1_complex(cplx z) { return std::exp(kF1Alpha * std::log(z) - z); }

cplx f2_complex(cplx z) {
  if (z.real() > 1.0) {
    const cplx ez = std::exp(-z);
    return std::sqrt(1.0 - ez) * ez;
  }
  // e^z - 1 = 2 e^{z/2} sinh(z/2)
  const cplx em1 = 2.0 * std::exp(0.5 * z) * std::sinh(0.5 * z);
  return std::sqrt(em1) * std::exp(-1.5 * z);
}

cplx f3_complex(cplx z) {
  const cplx u = 1.0 - 2.0 * std::exp(-z);
  return std::sqrt(1.0 + u * u) * (z / (1.0 + z)) * std::exp(-z);
}

ExampleFunction make_f1() {
  const double alpha = kF1Alpha;
  const DecayProfile psi(std::pow(1.0 + (pi / 2) * (pi / 2), alpha / 2), alpha, 1.0 - alpha / pi, pi / 2,
                         MapKind::ArcsinhMap);
  const double d = 3.0;
  const double gamma = -std::log(std::cos(d / 2));
  const double K = std::pow(((1.0 - gamma) * (1.0 - gamma) + pi * pi) * std::exp(gamma / pi), alpha / 2);
  const DecayProfile phi(K, alpha, 1.0 - alpha / (2 * pi), d, MapKind::LogisticLogMap);
  return {ExampleId::F1, f1, f1_complex, psi, phi};
}

ExampleFunction make_f2() {
  const double alpha = 0.5;
  const DecayProfile psi(std::pow(4.0, alpha), alpha, 1.0, pi / 2, MapKind::ArcsinhMap);
  const double d = 3.0;
  const double gamma = 1.0 + 1.0 / std::cos(d / 2);
  const double lg = std::log1p(gamma);
  const DecayProfile phi(std::pow(gamma * (1.0 + lg) / lg, alpha), alpha, 1.0, d, MapKind::LogisticLogMap);
  return {ExampleId::F2, f2, f2_complex, psi, phi};
}

ExampleFunction make_f3() {
  const DecayProfile psi(std::sqrt(2.0), 1.0, 1.0, std::atan(3.0), MapKind::ArcsinhMap);
  const DecayProfile phi(2.0, 1.0, 1.0, pi / 2, MapKind::LogisticLogMap);
  return {ExampleId::F3, f3, f3_complex, psi, phi};
}

}  // namespace

std::string_view short_name(ExampleId id) {
  switch (id) {
    case ExampleId::F1:
      return "f1";
    case ExampleId::F2:
      return "f2";
    case ExampleId::F3:
      return "f3";
  }
  return "?";
}

std::optional<ExampleId> parse_example_id(std::string_view name) {
  for (ExampleId id : kAllExamples) {
    if (short_name(id) == name) return id;
  }
  return std::nullopt;
}

ExampleFunction example(ExampleId id) {
  switch (id) {
    case ExampleId::F1:
      return make_f1();
    case ExampleId::F2:
      return make_f2();
    case ExampleId::F3:
      return make_f3();
  }
  throw std::invalid_argument("unknown example id");
}

std::vector<double> evaluation_grid() {
  std::vector<double> grid;
  grid.reserve(201);
  for (int j = 0; j <= 200; ++j) {
    // Even j are exact powers of two.
    grid.push_back(j % 2 == 0 ? std::ldexp(1.0, (j - 100) / 2) : std::exp2(0.5 * (j - 100)));
  }
  return grid;
}

double observed_error(const RealFunction& f, const Approximant& a) {
  double worst = 0.0;
  for (double t : evaluation_grid()) {
    worst = std::max(worst, std::abs(f(t) - evaluate(a, t)));
  }
  return worst;
}

double observed_error(const ExampleFunction& ex, const Approximant& a) { return observed_error(ex.eval, a); }

SweepError::SweepError(int n, const std::string& what)
    : std::runtime_error("n = " + std::to_string(n) + ": " + what), n_(n) {}

std::vector<ErrorReport> convergence_sweep(const ExampleFunction& ex, MapKind kind, std::span<const int> n_list) {
  if (n_list.empty()) throw std::invalid_argument("convergence_sweep: n_list is empty");
  if (!std::is_sorted(n_list.begin(), n_list.end())) {
    throw std::invalid_argument("convergence_sweep: n_list must be sorted ascending");
  }
  const DecayProfile& profile = ex.profile(kind);
  std::vector<ErrorReport> reports;
  reports.reserve(n_list.size());
  for (int n : n_list) {
    try {
      const Approximant a = build_approximant(ex.eval, profile, n);
      const SincParams& p = a.params();
      reports.push_back({n, p.h, p.M, p.N, observed_error(ex, a), total_bound(profile, variant_for(kind), n)});
    } catch (const std::exception& e) {
      throw SweepError(n, e.what());
    }
  }
  return reports;
}

std::vector<int> n_range(int n_min, int n_max, int n_step) {
  if (n_min < 1 || n_step < 1 || n_min > n_max) {
    throw std::invalid_argument("n_range: need 1 <= n_min <= n_max and n_step >= 1");
  }
  std::vector<int> ns;
  for (int n = n_min; n <= n_max; n += n_step) ns.push_back(n);
  return ns;
}

RateFit fit_rate(std::span<const ErrorReport> reports, double lo, double hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const ErrorReport& r : reports) {
    if (!(r.observed_error >= lo && r.observed_error <= hi)) continue;
    const double x = std::sqrt(static_cast<double>(r.n));
    const double y = std::log(r.observed_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  RateFit fit;
  fit.points = m;
  if (m < 2) return fit;
  const double denom = m * sxx - sx * sx;
  fit.slope = (m * sxy - sx * sy) / denom;
  return fit;
}

double predicted_rate(const DecayProfile& profile) {
  return -std::sqrt(pi * profile.d() * profile.mu());
}

void write_csv(std::ostream& out, std::span<const ErrorReport> reports) {
  out << "n,h,M,N,observed_error,bound\n";
  for (const ErrorReport& r : reports) {
    out << r.n << ',' << format_real(r.h) << ',' << r.M << ',' << r.N << ',' << format_real(r.observed_error) << ','
        << format_real(r.bound) << '\n';
  }
}

}  // namespace sinc
