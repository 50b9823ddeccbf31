#include "ptreg/contour.hpp"

#include <cmath>
#include <cstdio>

namespace ptreg {

namespace {

constexpr double kDerivativeFloor = 1e-12;
constexpr double kFdStep = 1e-4;

struct PointVisitor {
  double x;
  cplx operator()(const ShiftedLine& line) const { return {x, -line.epsilon}; }
  cplx operator()(const ArchContour& arch) const {
    const double v = std::atan(std::tanh(x) / std::tan(arch.epsilon));
    const double sh = std::sinh(x);
    const double se = std::sin(arch.epsilon);
    // sinh^2 x overflows near |x| = 355; beyond 300 the sin^2 eps term is invisible anyway.
    const double u = std::abs(x) > 300.0 ? std::abs(x) - std::log(2.0) : 0.5 * std::log(sh * sh + se * se);
    return {v, -u};
  }
};

struct DerivativeVisitor {
  double x;
  cplx operator()(const ShiftedLine&) const { return 1.0; }
  cplx operator()(const ArchContour& arch) const {
    // xi'(x) = -i coth(x - i eps)
    const cplx r{x, -arch.epsilon};
    return -I * std::cosh(r) / std::sinh(r);
  }
};

cplx central_difference(const ComplexFn& f, cplx xi, double step) {
  return (f(xi + step) - f(xi - step)) / (2.0 * step);
}

}  // namespace

Contour Contour::shifted_line(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < pi))
    throw Error(ErrorKind::InvalidParameter, "shifted line needs 0 <= epsilon < pi");
  return Contour(ShiftedLine{epsilon});
}

Contour Contour::arch(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < pi / 2.0))
    throw Error(ErrorKind::InvalidParameter, "arch contour needs 0 < epsilon < pi/2");
  return Contour(ArchContour{epsilon});
}

cplx Contour::point(double x) const { return std::visit(PointVisitor{x}, path_); }

cplx Contour::derivative(double x) const { return std::visit(DerivativeVisitor{x}, path_); }

double Contour::epsilon() const {
  return std::visit([](const auto& path) { return path.epsilon; }, path_);
}

std::string Contour::name() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s(eps=%.6g)", straight() ? "line" : "arch", epsilon());
  return buf;
}

cplx map_point(const Contour& contour, double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidParameter, "map_point needs a finite x");
  return contour.point(x);
}

cplx contour_derivative(const Contour& contour, double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidParameter, "contour_derivative needs a finite x");
  return contour.derivative(x);
}

cplx BranchTracker::log(cplx z) {
  if (std::abs(z) == 0.0) throw Error(ErrorKind::SingularPoint, "logarithm of zero along a branch");
  double arg = std::arg(z);
  if (last_arg_) {
    arg += 2.0 * pi * std::round((*last_arg_ - arg) / (2.0 * pi));
    if (std::abs(arg - *last_arg_) > jump_limit_)
      throw Error(ErrorKind::BranchDiscontinuity, "phase jump between adjacent samples exceeds the limit");
  }
  last_arg_ = arg;
  return {std::log(std::abs(z)), arg};
}

LiouvilleMap identity_map(double kappa) {
  return {"identity", [](cplx xi) { return xi; }, [](cplx) { return cplx{1.0}; },
          [](cplx) { return cplx{0.0}; }, [](cplx) { return cplx{0.0}; }, kappa};
}

LiouvilleMap linear_map(cplx scale, double kappa) {
  return {"linear", [scale](cplx xi) { return scale * xi; }, [scale](cplx) { return scale; },
          [](cplx) { return cplx{0.0}; }, [](cplx) { return cplx{0.0}; }, kappa};
}

LiouvilleMap arch_map(double kappa) {
  LiouvilleMap map;
  map.name = "arch";
  map.kappa = kappa;
  map.r = [](cplx xi) { return std::asinh(-I * std::exp(I * xi)); };
  // r' = i tanh r, r'' = i sech^2 r * r', r''' = i (sech^2 r * r'' - 2 sech^2 r tanh r * r'^2)
  map.dr = [r = map.r](cplx xi) { return I * std::tanh(r(xi)); };
  map.d2r = [r = map.r](cplx xi) {
    const cplx rv = r(xi);
    const cplx sech2 = 1.0 / (std::cosh(rv) * std::cosh(rv));
    return I * sech2 * (I * std::tanh(rv));
  };
  map.d3r = [r = map.r](cplx xi) {
    const cplx rv = r(xi);
    const cplx th = std::tanh(rv);
    const cplx sech2 = 1.0 / (std::cosh(rv) * std::cosh(rv));
    const cplx d1 = I * th;
    const cplx d2 = I * sech2 * d1;
    return I * (sech2 * d2 - 2.0 * sech2 * th * d1 * d1);
  };
  return map;
}

void check_derivatives(const LiouvilleMap& map, cplx xi, double rel_tol) {
  const cplx d1 = map.dr(xi);
  const double scale = std::abs(d1);
  const auto compare = [&](cplx analytic, cplx numeric, const char* which) {
    if (std::abs(analytic - numeric) > rel_tol * std::max(std::abs(analytic), scale))
      throw Error(ErrorKind::DerivativeInconsistency, std::string(which) + " of map '" + map.name +
                                                          "' disagrees with its finite difference");
  };
  // shorter step where r' varies on a short scale (near a pole of r')
  const double d2 = std::abs(map.d2r(xi));
  const double step = d2 > scale ? kFdStep * scale / d2 : kFdStep;
  compare(d1, central_difference(map.r, xi, step), "r'");
  compare(map.d2r(xi), central_difference(map.dr, xi, step), "r''");
  compare(map.d3r(xi), central_difference(map.d2r, xi, step), "r'''");
}

cplx liouville_potential(const ComplexFn& base, const LiouvilleMap& map, cplx xi, bool cross_check) {
  const cplx d1 = map.dr(xi);
  if (std::abs(d1) < kDerivativeFloor) throw Error(ErrorKind::SingularPoint, "r'(xi) vanishes");
  if (cross_check) check_derivatives(map, xi);
  const cplx curvature = map.d2r(xi) / d1;
  const cplx kappa2 = map.kappa * map.kappa;
  const cplx value = d1 * d1 * (base(map.r(xi)) + kappa2) + 0.75 * curvature * curvature - 0.5 * map.d3r(xi) / d1;
  return require_finite(value, "liouville_potential");
}

std::vector<cplx> transport_wavefunction(std::span<const cplx> chi_values, const LiouvilleMap& map,
                                         std::span<const cplx> xi) {
  if (chi_values.size() != xi.size())
    throw Error(ErrorKind::InvalidParameter, "transport_wavefunction: sample counts differ");
  std::vector<cplx> psi;
  psi.reserve(xi.size());
  BranchTracker root(pi);
  for (std::size_t k = 0; k < xi.size(); ++k) {
    const cplx d1 = map.dr(xi[k]);
    if (std::abs(d1) < kDerivativeFloor) throw Error(ErrorKind::SingularPoint, "r'(xi) vanishes during transport");
    psi.push_back(require_finite(chi_values[k] / root.sqrt(d1), "transport_wavefunction"));
  }
  return psi;
}

std::vector<cplx> transport_wavefunction(const ComplexFn& chi, const LiouvilleMap& map, std::span<const cplx> xi) {
  std::vector<cplx> chi_values;
  chi_values.reserve(xi.size());
  for (const cplx point : xi) chi_values.push_back(chi(map.r(point)));
  return transport_wavefunction(chi_values, map, xi);
}

}  // namespace ptreg
