#pragma once

// Conformal maps from the real line onto (0, inf) used to transplant the
// Sinc approximation to the semi-infinite interval:
//
//   arcsinh map     t = psi(x) = arcsinh(e^x),  analytic in |Im x| < pi/2
//   logistic-log    t = phi(x) = log(1 + e^x),  analytic in |Im x| < pi
//
// Every real-valued routine here is evaluated on an overflow-free branch so
// that arguments in [2^-50, 2^50] (and strip coordinates up to |x| = 700)
// stay accurate to a few ulps.

#include <complex>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace sinc {

enum class MapKind { ArcsinhMap, LogisticLogMap };

inline constexpr MapKind kAllMapKinds[] = {MapKind::ArcsinhMap, MapKind::LogisticLogMap};

/// Short CLI name: "psi" or "phi".
std::string_view short_name(MapKind kind);
std::optional<MapKind> parse_map_kind(std::string_view name);

/// Supremum of the admissible strip half-width d: pi/2 for psi, pi for phi.
double max_strip_width(MapKind kind);

/// True when d lies in the range the error bounds allow:
/// 0 < d <= pi/2 for psi, 0 < d < pi for phi.
bool admissible_width(MapKind kind, double d);

/// Raised where the complex extension of a map stops being analytic
/// (x = 0 on |Im| = pi/2 for psi) or where the principal branch is cut
/// (x >= 0 on |Im| = pi for phi). Also raised where an argument is undefined.
class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A complex number whose components are guaranteed finite.
class ComplexPoint {
 public:
  ComplexPoint(double re, double im);
  explicit ComplexPoint(std::complex<double> z);

  double re() const { return re_; }
  double im() const { return im_; }
  std::complex<double> value() const { return {re_, im_}; }
  ComplexPoint conj() const { return {re_, -im_}; }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

 private:
  double re_;
  double im_;
};

/// Sampled image of the strip boundary Im x = +-d.
struct BoundaryCurve {
  double d = 0.0;
  std::vector<double> x_strip;
  std::vector<ComplexPoint> upper;
  std::vector<ComplexPoint> lower;
};

double map_forward(MapKind kind, double x);

/// Throws std::domain_error when t <= 0 or t is not finite.
double map_inverse(MapKind kind, double t);

double map_derivative(MapKind kind, double x);

/// Analytic extension of map_forward to the closed strip of the map.
/// psi accepts |Im z| <= pi/2, phi accepts |Im z| <= pi; anything wider is a
/// std::domain_error, singular and cut points raise SingularPointError.
ComplexPoint map_forward_complex(MapKind kind, ComplexPoint z);

/// Trace of map_forward_complex along x + i d for `count` equispaced x in
/// [x_min, x_max]; lower is the conjugate trace.
/// Throws std::out_of_range when d is not admissible for the map.
BoundaryCurve domain_boundary(MapKind kind, double d, double x_min, double x_max, int count);

/// Principal argument in (-pi, pi] of sinh(z) (psi) or e^z - 1 (phi),
/// computed without overflow for large |Re z|.
double image_argument(MapKind kind, ComplexPoint z);

/// Membership in psi(D_d) = {|arg sinh z| < d} or phi(D_d) = {|arg(e^z - 1)| < d}.
bool in_domain(MapKind kind, ComplexPoint z, double d);

/// CSV with header x_strip,re_upper,im_upper,re_lower,im_lower.
void write_csv(std::ostream& out, const BoundaryCurve& curve);

}  // namespace sinc
