#include "ptreg/potentials.hpp"

#include <algorithm>
#include <cmath>

namespace ptreg {

namespace {

void require_regular(cplx value, double floor, const char* what) {
  if (std::abs(value) < floor) throw Error(ErrorKind::SingularPoint, std::string(what) + " vanishes");
}

}  // namespace

void EckartParams::validate() const {
  if (!std::isfinite(A) || !std::isfinite(beta)) throw Error(ErrorKind::InvalidParameter, "Eckart couplings must be finite");
  if (!(epsilon > 0.0 && epsilon < pi)) throw Error(ErrorKind::InvalidParameter, "Eckart needs 0 < epsilon < pi");
}

void PoschlTellerParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::InvalidParameter, "Poschl-Teller needs alpha > 0");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorKind::InvalidParameter, "Poschl-Teller needs beta > 0");
  if (!(epsilon > 0.0 && epsilon < pi / 2.0))
    throw Error(ErrorKind::InvalidParameter, "Poschl-Teller needs 0 < epsilon < pi/2");
}

void HulthenParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::InvalidParameter, "Hulthen needs alpha > 0");
  if (!std::isfinite(C)) throw Error(ErrorKind::InvalidParameter, "Hulthen needs a finite C");
}

cplx eval_eckart(const EckartParams& p, cplx r, double floor) {
  const cplx sh = std::sinh(r);
  require_regular(sh, floor, "sinh r");
  const cplx value = p.A * (p.A - 1.0) / (sh * sh) - 2.0 * I * p.beta * std::cosh(r) / sh;
  return require_finite(value, "eval_eckart");
}

cplx eval_rpt(const PoschlTellerParams& p, cplx r, double floor) {
  const cplx sh = std::sinh(r);
  const cplx ch = std::cosh(r);
  require_regular(sh, floor, "sinh r");
  require_regular(ch, floor, "cosh r");
  const cplx value = (p.beta * p.beta - 0.25) / (sh * sh) - (p.alpha * p.alpha - 0.25) / (ch * ch);
  return require_finite(value, "eval_rpt");
}

cplx eval_hulthen(const HulthenParams& p, cplx xi, double floor) {
  const cplx denom = 1.0 - std::exp(2.0 * I * xi);
  require_regular(denom, floor, "1 - exp(2 i xi)");
  const cplx value = p.a() / (denom * denom) + p.b() / denom;
  return require_finite(value, "eval_hulthen");
}

ComplexFn eckart_potential(const EckartParams& p) {
  return [p](cplx r) { return eval_eckart(p, r); };
}

ComplexFn rpt_potential(const PoschlTellerParams& p) {
  return [p](cplx r) { return eval_rpt(p, r); };
}

ComplexFn hulthen_potential(const HulthenParams& p) {
  return [p](cplx xi) { return eval_hulthen(p, xi); };
}

double pt_defect(const ComplexFn& potential, const Contour& contour, std::span<const double> xs) {
  double defect = 0.0;
  for (const double x : xs) {
    const cplx mirrored = potential(contour.point(-x));
    const cplx direct = potential(contour.point(x));
    defect = std::max(defect, std::abs(mirrored - std::conj(direct)));
  }
  return defect;
}

}  // namespace ptreg
