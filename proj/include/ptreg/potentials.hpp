#pragma once

#include <span>

#include "ptreg/contour.hpp"
#include "ptreg/types.hpp"

namespace ptreg {

/// Below this magnitude sinh r, cosh r or 1 - exp(2 i xi) count as a pole.
inline constexpr double kDefaultSingularFloor = 1e-12;

/// V(r) = A(A-1)/sinh^2 r - 2 i beta cosh r / sinh r, evaluated on the shifted
/// line r = x - i epsilon.
struct EckartParams {
  double A = 3.0;
  double beta = 1.0;
  double epsilon = 0.5;

  /// Throws InvalidParameter unless A, beta are finite and 0 < epsilon < pi.
  void validate() const;
};

/// V(r) = (beta^2 - 1/4)/sinh^2 r - (alpha^2 - 1/4)/cosh^2 r on r = x - i epsilon.
struct PoschlTellerParams {
  double alpha = 3.5;
  double beta = 1.5;
  double epsilon = 0.3;

  /// Throws InvalidParameter unless alpha > 0, beta > 0, 0 < epsilon < pi/2.
  void validate() const;
};

/// V(xi) = A/(1 - e^{2 i xi})^2 + B/(1 - e^{2 i xi}) with A = 1 - alpha^2 and
/// B = C - A, so that A + B = C up to round-off.
struct HulthenParams {
  double alpha = 2.0;
  double C = 2.0;

  double a() const { return 1.0 - alpha * alpha; }
  double b() const { return C - a(); }

  /// Throws InvalidParameter unless alpha > 0 and C is finite.
  void validate() const;
};

cplx eval_eckart(const EckartParams& p, cplx r, double floor = kDefaultSingularFloor);
cplx eval_rpt(const PoschlTellerParams& p, cplx r, double floor = kDefaultSingularFloor);
cplx eval_hulthen(const HulthenParams& p, cplx xi, double floor = kDefaultSingularFloor);

ComplexFn eckart_potential(const EckartParams& p);
ComplexFn rpt_potential(const PoschlTellerParams& p);
ComplexFn hulthen_potential(const HulthenParams& p);

/// max_k |V(xi(-x_k)) - conj(V(xi(x_k)))|.
double pt_defect(const ComplexFn& potential, const Contour& contour, std::span<const double> xs);

}  // namespace ptreg
