#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ptreg/contour.hpp"
#include "ptreg/potentials.hpp"

namespace ptreg {

/// Main quantum number plus the generalized parities. Eckart levels carry
/// sigma = tau = +1.
struct QuantumNumbers {
  Family family = Family::Eckart;
  int N = 0;
  int sigma = 1;
  int tau = 1;
};

/// u + v = A - N - 1 (the decay rate), u - v = -i beta / (A - N - 1).
struct EckartAux {
  cplx u;
  cplx v;
};

/// Exponents of sinh and cosh in the eigenfunction: 2 mu = tau beta + 1/2,
/// 2 nu = sigma alpha + 1/2; E = -kappa^2.
struct PoschlTellerAux {
  double two_mu = 0.0;
  double two_nu = 0.0;
  double kappa = 0.0;
};

/// s = sigma alpha + 2n + 1 and the level's own tau*beta; E = kappa^2.
struct HulthenAux {
  double s = 0.0;
  double tau_beta = 0.0;
  double kappa = 0.0;
};

struct Level {
  QuantumNumbers qn;
  double energy = 0.0;
  std::variant<EckartAux, PoschlTellerAux, HulthenAux> aux;

  /// Asymptotic decay rate of the eigenfunction (u + v for Eckart).
  double kappa() const;
};

/// A candidate level dropped on a boundary or degenerate case.
struct SkippedLevel {
  QuantumNumbers qn;
  std::string reason;
};

struct Spectrum {
  std::vector<Level> levels;
  std::vector<SkippedLevel> skipped;
};

/// Tolerance for "on the boundary" decisions in the enumerations.
inline constexpr double kBoundaryTolerance = 1e-12;

/// E_N = -D^2 + beta^2/D^2 with D = A - N - 1 > 0, in increasing N.
Spectrum eckart_spectrum(const EckartParams& p);

/// Which Jacobi parameters multiply the Eckart prefactor. Doubled, (2u, 2v),
/// is what the reduction to the Gauss equation produces; Printed, (u/2, v/2),
/// is kept for comparison and fails the residual test from N = 1 on.
enum class JacobiConvention { Doubled, Printed };

/// psi(r) = (y-1)^u (y+1)^v P_N(y), y = coth r, along `points` in order.
std::vector<cplx> eckart_wavefunction(const EckartParams& p, const Level& level, std::span<const cplx> points,
                                      JacobiConvention convention = JacobiConvention::Doubled);

/// All N with 2N + 1 < -sigma alpha - tau beta for the four parity pairs,
/// grouped as (-,-), (-,+), (+,-), (+,+). E = -(2N + 1 + sigma alpha + tau beta)^2.
Spectrum rpt_spectrum(const PoschlTellerParams& p);

/// psi(r) = sinh^{tau beta + 1/2} r cosh^{sigma alpha + 1/2} r P_N^{(tau beta, sigma alpha)}(cosh 2r).
std::vector<cplx> rpt_wavefunction(const PoschlTellerParams& p, const Level& level, std::span<const cplx> points);

struct RealEnergyCheck {
  bool real = false;
  cplx energy;
};

/// E = -(2N + 1 + sigma alpha + tau beta)^2 for complex couplings; real iff
/// Im(sigma alpha + tau beta) = 0.
RealEnergyCheck rpt_real_energy_condition(cplx alpha, cplx beta, int sigma, int tau, int N);

/// Levels enumerated by (sigma, n) with the coupling C held fixed. Each level
/// gets its own tau*beta = (C - s^2)/(2s) and is kept iff
/// kappa = -(s^2 + C)/(2s) > 0; then E = C + (s - C/s)^2/4 = kappa^2.
Spectrum hulthen_spectrum(const HulthenParams& p);

/// Poschl-Teller parent problem of a Hulthen level (beta = |tau beta|).
PoschlTellerParams hulthen_parent(const HulthenParams& p, const Level& level, double epsilon);

/// Parent eigenfunction carried to the arch: Psi(xi(x)) = chi(x - i eps) / sqrt(r'(xi)).
std::vector<cplx> hulthen_wavefunction(const HulthenParams& p, const Level& level, const Contour& arch,
                                       std::span<const double> xs);

/// E_N - E_{N-1} = (2D + 1)(1 + beta^2 / (D^2 (D+1)^2)), D = A - N - 1.
/// Throws OutOfRange unless N >= 1 and level N exists.
double eckart_spacing(const EckartParams& p, int N);

}  // namespace ptreg
