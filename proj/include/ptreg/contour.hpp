#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ptreg/types.hpp"

namespace ptreg {

/// xi(x) = x - i*epsilon. epsilon = 0 is the real axis.
struct ShiftedLine {
  double epsilon = 0.0;
};

/// Image of the shifted line x - i*epsilon under sinh r = -i exp(i xi):
///   xi(x) = v(x) - i u(x),  v = atan(tanh x / tan eps),
///   u = 0.5 ln(sinh^2 x + sin^2 eps).
/// The apex sits at xi(0) = i ln(1/sin eps); the ends run off to -i infinity
/// inside the strip |Re xi| < pi/2 - eps.
struct ArchContour {
  double epsilon = pi / 6.0;
};

/// Immutable PT-symmetric path parametrized by a real x.
class Contour {
 public:
  /// Throws InvalidParameter unless 0 <= epsilon < pi.
  static Contour shifted_line(double epsilon);
  static Contour real_axis() { return shifted_line(0.0); }
  /// Throws InvalidParameter unless 0 < epsilon < pi/2.
  static Contour arch(double epsilon);

  cplx point(double x) const;
  cplx derivative(double x) const;

  /// True when xi' is identically one.
  bool straight() const { return std::holds_alternative<ShiftedLine>(path_); }
  double epsilon() const;
  std::string name() const;

 private:
  explicit Contour(std::variant<ShiftedLine, ArchContour> path) : path_(path) {}
  std::variant<ShiftedLine, ArchContour> path_;
};

cplx map_point(const Contour& contour, double x);
cplx contour_derivative(const Contour& contour, double x);

/// Tracks the argument of a sequence of complex numbers so that logarithms,
/// roots and complex powers stay on one sheet along the sequence. The first
/// sample takes the principal value; later ones are shifted by multiples of
/// 2 pi onto the branch nearest the previous sample.
class BranchTracker {
 public:
  /// Adjacent samples whose unwrapped phases differ by more than
  /// `jump_limit` raise BranchDiscontinuity.
  explicit BranchTracker(double jump_limit = pi / 2.0) : jump_limit_(jump_limit) {}

  cplx log(cplx z);
  cplx pow(cplx z, cplx exponent) { return std::exp(exponent * log(z)); }
  cplx sqrt(cplx z) { return std::exp(0.5 * log(z)); }

 private:
  double jump_limit_;
  std::optional<double> last_arg_;
};

/// A change of variables r = r(xi) with its first three derivatives and the
/// decay rate kappa of the base problem [-d^2/dr^2 + W] chi = -kappa^2 chi.
struct LiouvilleMap {
  std::string name;
  ComplexFn r;
  ComplexFn dr;
  ComplexFn d2r;
  ComplexFn d3r;
  double kappa = 0.0;
};

LiouvilleMap identity_map(double kappa);
LiouvilleMap linear_map(cplx scale, double kappa);

/// sinh r(xi) = -i exp(i xi), with r' = i tanh r and the higher derivatives
/// obtained by differentiating that relation. Valid for |Im r| < pi/2.
LiouvilleMap arch_map(double kappa);

/// Compares r'' and r''' against central differences of r' and r''.
/// Throws DerivativeInconsistency beyond `rel_tol`.
void check_derivatives(const LiouvilleMap& map, cplx xi, double rel_tol = 1e-6);

/// Right-hand side of the Liouville transformation,
///   V(xi) - E = r'^2 (W(r) + kappa^2) + 3/4 (r''/r')^2 - 1/2 r'''/r'.
/// The new energy is not separated out here.
cplx liouville_potential(const ComplexFn& base, const LiouvilleMap& map, cplx xi, bool cross_check = true);

/// Psi(xi) = chi(r(xi)) / sqrt(r'(xi)) along `xi`, in the given order. The
/// square root is continued sample to sample from the principal branch.
std::vector<cplx> transport_wavefunction(const ComplexFn& chi, const LiouvilleMap& map, std::span<const cplx> xi);

/// Same, with chi already sampled at r(xi[k]) (e.g. by a branch-tracking
/// evaluator).
std::vector<cplx> transport_wavefunction(std::span<const cplx> chi_values, const LiouvilleMap& map,
                                         std::span<const cplx> xi);

}  // namespace ptreg
