#include "sinc_expdecay/lemma_verification.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "sinc_expdecay/csv.hpp"

namespace sinc {

namespace {

using std::numbers::pi;
using cplx = std::complex<double>;

const double kE = std::exp(1.0);

// Uniform doubles in [lo, hi] from raw engine output, so the stream does not
// depend on the standard library's distribution implementation.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double next(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 engine_;
};

class MarginTracker {
 public:
  explicit MarginTracker(std::string name) { report_.check_name = std::move(name); }

  void record(double margin, const std::string& where) {
    ++report_.checked;
    // NaN margins count as failures.
    if (report_.checked == 1 || !(margin >= report_.worst_margin)) {
      report_.worst_margin = std::isnan(margin) ? -INFINITY : margin;
      report_.worst_point = where;
    }
  }
  void record(double margin, double x) { record(margin, format_real(x)); }
  void record(double margin, cplx z) { record(margin, format_real(z.real()) + (z.imag() < 0 ? "" : "+") +
                                                        format_real(z.imag()) + "i"); }

  SampleReport finish() {
    report_.passed = report_.checked >= 1 && report_.worst_margin >= -kMarginTolerance;
    return report_;
  }

 private:
  SampleReport report_;
};

cplx log1p_complex(cplx w) {
  const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  return {re, std::atan2(w.imag(), 1.0 + w.real())};
}

// log(1 + e^z) continued to the closed strip; on Im z = +-pi with Re z > 0 the
// imaginary part is +-pi (the side the boundary is approached from).
cplx log_one_plus_exp(cplx z) {
  if (z.real() > 0.0) {
    const cplx w = std::exp(-z);
    // On Im z = +-pi, 1 + e^{-z} is real positive up to rounding in sin(pi).
    const cplx inner = std::abs(z.imag()) == pi ? cplx(std::log1p(-std::exp(-z.real())), 0.0) : log1p_complex(w);
    return z + inner;
  }
  if (std::abs(z.imag()) == pi) return {std::log1p(-std::exp(z.real())), 0.0};
  return log1p_complex(std::exp(z));
}

double abs_recip_one_plus_exp(cplx z) { return 1.0 / std::abs(1.0 + std::exp(z)); }

// Real-axis samples for the decay check: log-uniform on [2^-50, 2^50].
double log_uniform_t(UniformSource& rng) { return std::exp2(rng.next(-50.0, 50.0)); }

double decay_rhs(const DecayProfile& p, cplx z) {
  const double ratio = std::abs(z / (1.0 + z));
  return p.K() * std::pow(ratio, p.alpha()) * std::exp(-p.beta() * z.real());
}

}  // namespace

LemmaConstants lemma_constants() { return {std::log(kE / (kE - 1.0))}; }

double essential_expression(cplx zeta) {
  const LemmaConstants c = lemma_constants();
  const cplx w = log_one_plus_exp(zeta);
  // (e^{-l} + e^z)/e^z = 1 + e^{-l} e^{-z}
  const cplx second = 1.0 + std::exp(-c.l - zeta);
  return std::abs(w / (1.0 + w) * second);
}

double real_line_expression(double x) {
  const double w = map_forward(MapKind::LogisticLogMap, x);
  return w / (1.0 + w) * (1.0 + std::exp(-x));
}

double p_polynomial(double t) {
  const double q = 1.0 + t + t * t;
  return 1.0 + std::exp(t) * (std::exp(t + 1.0) - 1.0 + t + t * t - kE * q);
}

double boundary_g(double t) {
  const double modulus = std::abs(cplx(t, pi) / cplx(1.0 + t, pi));
  return modulus * std::abs(1.0 - (kE - 1.0) / (kE * (std::exp(t) + 1.0)));
}

double boundary_h(double t) {
  // t/(1+t) (1 - (e-1)/(e(1-e^t))) = t expm1(1+t) / (e (1+t) expm1(t))
  const double s = 1.0 + t;
  const double ratio_s = s == 0.0 ? 1.0 : std::expm1(s) / s;
  const double ratio_t = t == 0.0 ? 1.0 : t / std::expm1(t);
  return std::abs(ratio_s * ratio_t / kE);
}

LimitValues limit_values() {
  constexpr double offset = 1e-7;
  LimitValues v;
  v.essential_at_origin = boundary_g(-1e12);
  v.h_at_zero = 0.5 * (boundary_h(-offset) + boundary_h(offset));
  v.h_at_minus_one = 0.5 * (boundary_h(-1.0 - offset) + boundary_h(-1.0 + offset));
  return v;
}

SampleReport check_essential_inequality(std::size_t samples, std::uint64_t seed) {
  MarginTracker tracker("essential_inequality");
  auto visit = [&](cplx z) { tracker.record(1.0 - essential_expression(z), z); };

  // Special points: the origin and the boundary where the supremum sits.
  visit({0.0, 0.0});
  constexpr int kBoundaryPoints = 2000;
  for (int j = 0; j <= kBoundaryPoints; ++j) {
    const double x = -50.0 + 100.0 * j / kBoundaryPoints;
    if (x == 0.0) continue;  // removable point, covered by limit_values()
    visit({x, pi});
    visit({x, -pi});
  }
  const LimitValues limits = limit_values();
  tracker.record(1.0 - limits.essential_at_origin, "limit(0+i pi)");
  tracker.record(1.0 - limits.h_at_zero, "limit(-inf+i pi)");
  tracker.record(1.0 - limits.h_at_minus_one, "limit(log(1-1/e)+i pi)");

  UniformSource rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = rng.next(-50.0, 50.0);
    const double y = rng.next(-pi, pi);
    if (std::abs(y) == pi && x == 0.0) continue;
    visit({x, y});
  }
  return tracker.finish();
}

SampleReport check_real_line_bound(std::size_t samples, std::uint64_t seed) {
  MarginTracker tracker("real_line_bound");
  auto visit = [&](double x) { tracker.record(1.0 - real_line_expression(x), x); };
  visit(-60.0);
  visit(0.0);
  visit(60.0);
  UniformSource rng(seed);
  for (std::size_t i = 0; i < samples; ++i) visit(rng.next(-60.0, 60.0));
  return tracker.finish();
}

SampleReport check_p_nonneg(std::size_t samples, std::uint64_t seed) {
  MarginTracker tracker("p_nonneg");
  auto visit = [&](double t) { tracker.record(p_polynomial(t), t); };
  visit(0.0);
  visit(-1.0);
  UniformSource rng(seed);
  for (std::size_t i = 0; i < samples; ++i) visit(rng.next(-60.0, 0.0));
  return tracker.finish();
}

SampleReport check_exp_bound(std::size_t samples, std::uint64_t seed) {
  MarginTracker tracker("exp_bound");
  auto visit = [&](double x, double y) {
    const double c = std::cos(0.5 * y);
    const cplx z(x, y);
    const double m1 = 1.0 / ((1.0 + std::exp(x)) * c) - abs_recip_one_plus_exp(z);
    const double m2 = 1.0 / ((1.0 + std::exp(-x)) * c) - abs_recip_one_plus_exp(-z);
    tracker.record(std::min(m1, m2), z);
  };
  visit(0.0, 0.0);
  visit(0.0, 0.5 * pi);
  visit(-50.0, 0.0);
  visit(50.0, 0.0);
  UniformSource rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = rng.next(-50.0, 50.0);
    double y = rng.next(-pi, pi);
    if (std::abs(y) == pi) y = 0.0;  // open interval
    visit(x, y);
  }
  return tracker.finish();
}

SampleReport check_decay_condition(const std::string& name, const ComplexFunction& f, const DecayProfile& profile,
                                   std::size_t samples, std::uint64_t seed) {
  MarginTracker tracker(name);
  const MapKind kind = profile.map_kind();
  const double d = profile.d();
  auto visit = [&](cplx z) {
    const cplx value = f(z);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      tracker.record(-INFINITY, z);
      return;
    }
    tracker.record((decay_rhs(profile, z) - std::abs(value)) / profile.K(), z);
  };
  auto visit_strip = [&](double x, double y) {
    try {
      visit(map_forward_complex(kind, ComplexPoint(x, y)).value());
    } catch (const SingularPointError&) {
      // x = 0 on the psi boundary at d = pi/2; its neighbours are sampled.
    }
  };

  visit({1.0, 0.0});
  const BoundaryCurve curve = domain_boundary(kind, d, -30.0, 30.0, 2000);
  for (std::size_t j = 0; j < curve.upper.size(); ++j) {
    visit(curve.upper[j].value());
    visit(curve.lower[j].value());
  }

  UniformSource rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    // Alternate real-axis and boundary samples.
    if (i % 2 == 0) {
      visit({log_uniform_t(rng), 0.0});
    } else {
      const double x = rng.next(-30.0, 30.0);
      const double sign = rng.next(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      visit_strip(x, sign * d);
    }
  }
  return tracker.finish();
}

SampleReport check_decay_condition(ExampleId id, MapKind kind, std::size_t samples, std::uint64_t seed) {
  const ExampleFunction ex = example(id);
  const std::string name = "decay_" + std::string(short_name(id)) + "_" + std::string(short_name(kind));
  return check_decay_condition(name, ex.eval_complex, ex.profile(kind), samples, seed);
}

void write_csv_header(std::ostream& out) { out << "check_name,samples,worst_margin,worst_point,passed\n"; }

void write_csv_row(std::ostream& out, const SampleReport& report) {
  out << report.check_name << ',' << report.checked << ',' << format_real(report.worst_margin) << ','
      << report.worst_point << ',' << (report.passed ? "true" : "false") << '\n';
}

}  // namespace sinc
