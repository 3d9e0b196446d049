#include "sinc_expdecay/conformal_maps.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "sinc_expdecay/csv.hpp"

namespace sinc {

namespace {

using std::numbers::pi;
using cplx = std::complex<double>;

// Beyond this |Re z| the exponentials are factored out before evaluation.
constexpr double kLargeRe = 20.0;

// log(1 + w) without losing the real part when |w| is small.
cplx log1p_complex(cplx w) {
  const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  const double im = std::atan2(w.imag(), 1.0 + w.real());
  return {re, im};
}

// Reduce an angle to (-pi, pi].
double principal_angle(double a) {
  double r = std::remainder(a, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(what) + ": argument is not finite");
}

void require_admissible(MapKind kind, double d) {
  if (!admissible_width(kind, d)) {
    throw std::out_of_range("strip half-width d = " + format_real(d) + " is not admissible for the " +
                            std::string(short_name(kind)) + " map");
  }
}

cplx arcsinh_map_complex(cplx z) {
  const double half_pi = 0.5 * pi;
  const double y = std::abs(z.imag());
  if (y > half_pi) throw std::domain_error("arcsinh map: |Im z| exceeds pi/2");
  if (y == half_pi && z.real() == 0.0) throw SingularPointError("arcsinh map is not analytic at +-i pi/2");
  if (z.real() >= 0.0) {
    // psi(z) = z + log(1 + sqrt(1 + e^{-2z})); the radicand stays off the
    // negative axis for Re z >= 0 up to and including |Im z| = pi/2.
    return z + std::log(1.0 + std::sqrt(1.0 + std::exp(-2.0 * z)));
  }
  // |e^z| < 1 keeps asinh away from its cuts on the imaginary axis.
  return std::asinh(std::exp(z));
}

cplx logistic_log_map_complex(cplx z) {
  const double y = std::abs(z.imag());
  if (y > pi) throw std::domain_error("logistic-log map: |Im z| exceeds pi");
  if (y == pi && z.real() >= 0.0) {
    throw SingularPointError("logistic-log map: 1 + e^z lies on the branch cut of log");
  }
  if (z.real() > 0.0) return z + log1p_complex(std::exp(-z));
  return log1p_complex(std::exp(z));
}

}  // namespace

std::string_view short_name(MapKind kind) {
  return kind == MapKind::ArcsinhMap ? "psi" : "phi";
}

std::optional<MapKind> parse_map_kind(std::string_view name) {
  if (name == "psi") return MapKind::ArcsinhMap;
  if (name == "phi") return MapKind::LogisticLogMap;
  return std::nullopt;
}

double max_strip_width(MapKind kind) {
  return kind == MapKind::ArcsinhMap ? 0.5 * pi : pi;
}

bool admissible_width(MapKind kind, double d) {
  if (!(d > 0.0)) return false;
  return kind == MapKind::ArcsinhMap ? d <= 0.5 * pi : d < pi;
}

ComplexPoint::ComplexPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::invalid_argument("ComplexPoint components must be finite");
  }
}

ComplexPoint::ComplexPoint(std::complex<double> z) : ComplexPoint(z.real(), z.imag()) {}

double map_forward(MapKind kind, double x) {
  require_finite(x, "map_forward");
  if (kind == MapKind::ArcsinhMap) {
    if (x <= 0.0) return std::asinh(std::exp(x));
    return x + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * x)));
  }
  if (x <= 0.0) return std::log1p(std::exp(x));
  return x + std::log1p(std::exp(-x));
}

double map_inverse(MapKind kind, double t) {
  require_finite(t, "map_inverse");
  if (!(t > 0.0)) throw std::domain_error("map_inverse: t must be positive");
  if (kind == MapKind::ArcsinhMap) {
    // log(sinh t) = t - log 2 + log(1 - e^{-2t})
    if (t < 0.5) return std::log(std::sinh(t));
    return t - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * t));
  }
  // log(e^t - 1) = t + log(1 - e^{-t})
  if (t < 0.5) return std::log(std::expm1(t));
  return t + std::log1p(-std::exp(-t));
}

double map_derivative(MapKind kind, double x) {
  require_finite(x, "map_derivative");
  if (kind == MapKind::ArcsinhMap) {
    if (x >= 0.0) return 1.0 / std::sqrt(1.0 + std::exp(-2.0 * x));
    const double ex = std::exp(x);
    return ex / std::sqrt(1.0 + ex * ex);
  }
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double ex = std::exp(x);
  return ex / (1.0 + ex);
}

ComplexPoint map_forward_complex(MapKind kind, ComplexPoint z) {
  const cplx w = kind == MapKind::ArcsinhMap ? arcsinh_map_complex(z.value())
                                             : logistic_log_map_complex(z.value());
  return ComplexPoint(w);
}

BoundaryCurve domain_boundary(MapKind kind, double d, double x_min, double x_max, int count) {
  require_admissible(kind, d);
  if (count < 2) throw std::invalid_argument("domain_boundary: count must be at least 2");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw std::invalid_argument("domain_boundary: need finite x_min < x_max");
  }
  BoundaryCurve curve;
  curve.d = d;
  curve.x_strip.reserve(static_cast<std::size_t>(count));
  curve.upper.reserve(static_cast<std::size_t>(count));
  curve.lower.reserve(static_cast<std::size_t>(count));
  const double step = (x_max - x_min) / (count - 1);
  for (int j = 0; j < count; ++j) {
    const double x = j + 1 == count ? x_max : x_min + j * step;
    const ComplexPoint w = map_forward_complex(kind, ComplexPoint(x, d));
    curve.x_strip.push_back(x);
    curve.upper.push_back(w);
    curve.lower.push_back(w.conj());
  }
  return curve;
}

double image_argument(MapKind kind, ComplexPoint point) {
  const cplx z = point.value();
  if (kind == MapKind::ArcsinhMap) {
    if (z.real() > kLargeRe) {
      // sinh z = e^z (1 - e^{-2z}) / 2
      return principal_angle(z.imag() + std::arg(1.0 - std::exp(-2.0 * z)));
    }
    if (z.real() < -kLargeRe) {
      // sinh z = -e^{-z} (1 - e^{2z}) / 2
      return principal_angle(pi - z.imag() + std::arg(1.0 - std::exp(2.0 * z)));
    }
    const cplx s = std::sinh(z);
    if (s == cplx(0.0, 0.0)) throw SingularPointError("arg(sinh z) is undefined where sinh z = 0");
    return std::arg(s);
  }
  if (z.real() > kLargeRe) {
    // e^z - 1 = e^z (1 - e^{-z})
    return principal_angle(z.imag() + std::arg(1.0 - std::exp(-z)));
  }
  // e^z - 1 = 2 e^{z/2} sinh(z/2), free of cancellation near z = 0
  const cplx s = std::sinh(0.5 * z);
  if (s == cplx(0.0, 0.0)) throw SingularPointError("arg(e^z - 1) is undefined where e^z = 1");
  return principal_angle(0.5 * z.imag() + std::arg(s));
}

bool in_domain(MapKind kind, ComplexPoint z, double d) {
  require_admissible(kind, d);
  return std::abs(image_argument(kind, z)) < d;
}

void write_csv(std::ostream& out, const BoundaryCurve& curve) {
  out << "x_strip,re_upper,im_upper,re_lower,im_lower\n";
  for (std::size_t j = 0; j < curve.upper.size(); ++j) {
    out << format_real(curve.x_strip[j]) << ',' << format_real(curve.upper[j].re()) << ','
        << format_real(curve.upper[j].im()) << ',' << format_real(curve.lower[j].re()) << ','
        << format_real(curve.lower[j].im()) << '\n';
  }
}

}  // namespace sinc
