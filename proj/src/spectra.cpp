#include "ptreg/spectra.hpp"

#include <cmath>
#include <string>

#include "ptreg/special.hpp"

namespace ptreg {

namespace {

constexpr int kMaxLevels = 1'000'000;

void require_family(const Level& level, Family family, const char* where) {
  if (level.qn.family != family)
    throw Error(ErrorKind::InvalidParameter, std::string(where) + ": level belongs to another family");
}

void require_real(cplx energy, const char* where) {
  if (std::abs(energy.imag()) > 1e-12 * std::max(1.0, std::abs(energy)))
    throw Error(ErrorKind::InternalConsistency, std::string(where) + ": energy picked up an imaginary part");
}

// sinh^{tau beta + 1/2} r cosh^{sigma alpha + 1/2} r P_N^{(tau beta, sigma alpha)}(cosh 2r)
std::vector<cplx> parity_eigenfunction(double alpha, double beta, int sigma, int tau, int N,
                                       std::span<const cplx> points) {
  const double tb = tau * beta;
  const double sa = sigma * alpha;
  BranchTracker sinh_branch;
  BranchTracker cosh_branch;
  std::vector<cplx> psi;
  psi.reserve(points.size());
  for (const cplx r : points) {
    const cplx value = sinh_branch.pow(std::sinh(r), tb + 0.5) * cosh_branch.pow(std::cosh(r), sa + 0.5) *
                       special::jacobi_p_hyp(N, tb, sa, std::cosh(2.0 * r));
    psi.push_back(require_finite(value, "parity_eigenfunction"));
  }
  return psi;
}

}  // namespace

double Level::kappa() const {
  struct Visitor {
    double operator()(const EckartAux& a) const { return (a.u + a.v).real(); }
    double operator()(const PoschlTellerAux& a) const { return a.kappa; }
    double operator()(const HulthenAux& a) const { return a.kappa; }
  };
  return std::visit(Visitor{}, aux);
}

Spectrum eckart_spectrum(const EckartParams& p) {
  p.validate();
  Spectrum spectrum;
  for (int N = 0; N < kMaxLevels; ++N) {
    const double D = p.A - N - 1.0;
    if (D < -kBoundaryTolerance) break;
    const QuantumNumbers qn{Family::Eckart, N, 1, 1};
    if (D <= kBoundaryTolerance) {
      spectrum.skipped.push_back({qn, "u + v = 0: normalizability degenerates"});
      break;
    }
    const EckartAux aux{cplx{D / 2.0, -p.beta / (2.0 * D)}, cplx{D / 2.0, p.beta / (2.0 * D)}};
    const double energy = -D * D + p.beta * p.beta / (D * D);
    const cplx from_aux = -2.0 * (aux.u * aux.u + aux.v * aux.v);
    require_real(from_aux, "eckart_spectrum");
    spectrum.levels.push_back({qn, energy, aux});
  }
  return spectrum;
}

std::vector<cplx> eckart_wavefunction(const EckartParams& p, const Level& level, std::span<const cplx> points,
                                      JacobiConvention convention) {
  p.validate();
  require_family(level, Family::Eckart, "eckart_wavefunction");
  const auto& aux = std::get<EckartAux>(level.aux);
  const cplx a = convention == JacobiConvention::Doubled ? 2.0 * aux.u : 0.5 * aux.u;
  const cplx b = convention == JacobiConvention::Doubled ? 2.0 * aux.v : 0.5 * aux.v;
  BranchTracker minus_branch;
  BranchTracker plus_branch;
  std::vector<cplx> psi;
  psi.reserve(points.size());
  for (const cplx r : points) {
    const cplx sh = std::sinh(r);
    if (std::abs(sh) < kDefaultSingularFloor) throw Error(ErrorKind::SingularPoint, "eckart_wavefunction: sinh r vanishes");
    const cplx y = std::cosh(r) / sh;
    const cplx value = minus_branch.pow(y - 1.0, aux.u) * plus_branch.pow(y + 1.0, aux.v) *
                       special::jacobi_p_hyp(level.qn.N, a, b, y);
    psi.push_back(require_finite(value, "eckart_wavefunction"));
  }
  return psi;
}

Spectrum rpt_spectrum(const PoschlTellerParams& p) {
  p.validate();
  Spectrum spectrum;
  for (const int sigma : {-1, 1}) {
    for (const int tau : {-1, 1}) {
      const double bound = -sigma * p.alpha - tau * p.beta;
      for (int N = 0; N < kMaxLevels; ++N) {
        const double gap = bound - (2.0 * N + 1.0);
        if (gap < -kBoundaryTolerance) break;
        const QuantumNumbers qn{Family::PoschlTeller, N, sigma, tau};
        if (gap <= kBoundaryTolerance) {
          spectrum.skipped.push_back({qn, "2N + 1 = -sigma alpha - tau beta: normalizability degenerates"});
          break;
        }
        const PoschlTellerAux aux{tau * p.beta + 0.5, sigma * p.alpha + 0.5, gap};
        spectrum.levels.push_back({qn, -gap * gap, aux});
      }
    }
  }
  return spectrum;
}

std::vector<cplx> rpt_wavefunction(const PoschlTellerParams& p, const Level& level, std::span<const cplx> points) {
  p.validate();
  require_family(level, Family::PoschlTeller, "rpt_wavefunction");
  return parity_eigenfunction(p.alpha, p.beta, level.qn.sigma, level.qn.tau, level.qn.N, points);
}

RealEnergyCheck rpt_real_energy_condition(cplx alpha, cplx beta, int sigma, int tau, int N) {
  const cplx shift = 2.0 * N + 1.0 + static_cast<double>(sigma) * alpha + static_cast<double>(tau) * beta;
  const cplx energy = -shift * shift;
  return {std::abs(energy.imag()) <= 1e-12, energy};
}

Spectrum hulthen_spectrum(const HulthenParams& p) {
  p.validate();
  Spectrum spectrum;
  const double C = p.C;
  for (const int sigma : {-1, 1}) {
    for (int n = 0; n < kMaxLevels; ++n) {
      const double s = sigma * p.alpha + 2.0 * n + 1.0;
      // s grows with n; once s > 0 and s^2 >= -C every later kappa is negative.
      if (s > kBoundaryTolerance && s * s >= -C) break;
      if (std::abs(s) <= kBoundaryTolerance) {
        spectrum.skipped.push_back({{Family::Hulthen, n, sigma, 1}, "DegenerateS: s = sigma alpha + 2n + 1 vanishes"});
        continue;
      }
      const double tau_beta = (C - s * s) / (2.0 * s);
      const double kappa = -(s * s + C) / (2.0 * s);
      const int tau = tau_beta < 0.0 ? -1 : 1;
      const QuantumNumbers qn{Family::Hulthen, n, sigma, tau};
      if (std::abs(tau_beta) <= kBoundaryTolerance) {
        spectrum.skipped.push_back({qn, "tau beta = 0 excluded (beta > 0)"});
        continue;
      }
      if (kappa <= kBoundaryTolerance) continue;
      const double shifted = s - C / s;
      const double energy = C + 0.25 * shifted * shifted;
      if (std::abs(energy - kappa * kappa) > 1e-10 * std::max(1.0, energy))
        throw Error(ErrorKind::InternalConsistency, "hulthen_spectrum: E and kappa^2 disagree");
      spectrum.levels.push_back({qn, energy, HulthenAux{s, tau_beta, kappa}});
    }
  }
  return spectrum;
}

PoschlTellerParams hulthen_parent(const HulthenParams& p, const Level& level, double epsilon) {
  require_family(level, Family::Hulthen, "hulthen_parent");
  const auto& aux = std::get<HulthenAux>(level.aux);
  PoschlTellerParams parent{p.alpha, std::abs(aux.tau_beta), epsilon};
  parent.validate();
  return parent;
}

std::vector<cplx> hulthen_wavefunction(const HulthenParams& p, const Level& level, const Contour& arch,
                                       std::span<const double> xs) {
  p.validate();
  if (arch.straight()) throw Error(ErrorKind::InvalidParameter, "hulthen_wavefunction expects the arch contour");
  const PoschlTellerParams parent = hulthen_parent(p, level, arch.epsilon());
  std::vector<cplx> r_points;
  std::vector<cplx> xi_points;
  r_points.reserve(xs.size());
  xi_points.reserve(xs.size());
  for (const double x : xs) {
    r_points.emplace_back(x, -arch.epsilon());
    xi_points.push_back(arch.point(x));
  }
  const auto chi = parity_eigenfunction(parent.alpha, parent.beta, level.qn.sigma, level.qn.tau, level.qn.N, r_points);
  return transport_wavefunction(chi, arch_map(level.kappa()), xi_points);
}

double eckart_spacing(const EckartParams& p, int N) {
  p.validate();
  const double D = p.A - N - 1.0;
  if (N < 1 || D <= kBoundaryTolerance)
    throw Error(ErrorKind::OutOfRange, "eckart_spacing needs N >= 1 with A - N - 1 > 0");
  return (2.0 * D + 1.0) * (1.0 + p.beta * p.beta / (D * D * (D + 1.0) * (D + 1.0)));
}

}  // namespace ptreg
