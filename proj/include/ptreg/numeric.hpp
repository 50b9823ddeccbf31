#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ptreg/contour.hpp"
#include "ptreg/potentials.hpp"
#include "ptreg/spectra.hpp"

namespace ptreg {

/// Uniform grid on [x_min, x_max]; the two end nodes carry Dirichlet values.
struct Grid {
  double x_min = -10.0;
  double x_max = 10.0;
  int n_points = 2001;

  /// Throws InvalidParameter unless x_min < x_max and n_points >= 3.
  void validate() const;
  double step() const { return (x_max - x_min) / (n_points - 1); }
  double x(int i) const { return i == n_points - 1 ? x_max : x_min + i * step(); }
  std::vector<double> nodes() const;
  /// Every other node of this grid; needs an odd n_points.
  Grid coarsened() const;
};

/// lower[i] = A(i+1, i), upper[i] = A(i, i+1).
struct TridiagonalMatrix {
  std::vector<cplx> lower;
  std::vector<cplx> diag;
  std::vector<cplx> upper;

  std::size_t size() const { return diag.size(); }
  std::vector<cplx> apply(std::span<const cplx> v) const;
  double norm_inf() const;
  double max_asymmetry() const;
};

enum class Metric { Flat, Curved };

/// Discretized -d^2/dxi^2 + V(xi) along a contour. The unknowns are the
/// interior nodes 1 .. n-2 of the grid; `boundary_left` and `boundary_right`
/// are the couplings of the first and last interior rows to the end nodes.
struct DiscretizedHamiltonian {
  TridiagonalMatrix matrix;
  Grid grid;
  Metric metric = Metric::Flat;
  cplx boundary_left;
  cplx boundary_right;
};

/// Three-point Laplacian on a straight contour; on a curved one the operator
/// -(1/xi') d/dx ((1/xi') d/dx) with the metric factors taken at half steps.
/// Throws SingularPoint (from V) or MetricVanishing.
DiscretizedHamiltonian build_hamiltonian(const ComplexFn& potential, const Contour& contour, const Grid& grid);

struct EigenResult {
  cplx eigenvalue;
  std::vector<cplx> eigenvector;
  /// ||H v - lambda v||_inf / ||v||_inf
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  cplx target;
};

struct InverseIterationOptions {
  double tolerance = 1e-10;
  int max_iterations = 200;
  std::uint64_t seed = 42;
};

/// Shifted inverse iteration, one run per target. A run that misses the
/// tolerance comes back with converged = false and its best residual. A
/// singular shift is retried once at target + 1e-8 (1 + i) before
/// ShiftSingular is thrown.
std::vector<EigenResult> solve_targeted(const TridiagonalMatrix& matrix, std::span<const cplx> targets,
                                        const InverseIterationOptions& options = {});

struct DenseOptions {
  std::size_t max_size = 1200;
};

/// Full eigendecomposition (Hessenberg reduction + shifted QR), sorted by
/// real part (LAPACK zgeev). Throws SizeGuard above `max_size` and QRStall when
/// the QR iteration fails to converge.
std::vector<EigenResult> solve_dense(const TridiagonalMatrix& matrix, const DenseOptions& options = {});

/// ||H psi - E psi||_inf over interior nodes outside a `buffer_fraction`
/// margin at each end, divided by ||psi||_inf. `psi` holds either every grid
/// node or only the interior ones (end values then taken as zero).
double residual(std::span<const cplx> psi, cplx energy, const DiscretizedHamiltonian& hamiltonian,
                double buffer_fraction = 0.05);

struct PtNorm {
  /// trapezoid of psi(xi)^2 xi'(x) dx, no conjugation
  cplx bilinear;
  /// trapezoid of |psi|^2 dx
  double modulus = 0.0;
};

PtNorm pt_norm(std::span<const cplx> psi, const Grid& grid, const Contour& contour);

/// Trapezoid rule on a uniform grid.
cplx trapezoid(std::span<const cplx> values, double step);

using FamilyParams = std::variant<EckartParams, PoschlTellerParams, HulthenParams>;

Family family_of(const FamilyParams& params);

struct VerifyTolerances {
  double energy = 1e-5;
  double imag = 1e-7;
  InverseIterationOptions solver;
  /// Combine the eigenvalues on the grid and on its every-other-node
  /// coarsening as (4 lambda_h - lambda_2h) / 3.
  bool extrapolate = true;
  double buffer_fraction = 0.05;
};

struct LevelCheck {
  QuantumNumbers qn;
  double analytic = 0.0;
  /// Verified eigenvalue (extrapolated when enabled).
  cplx numeric;
  cplx raw_fine;
  cplx raw_coarse;
  double abs_error = 0.0;
  double solver_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Residual of the analytic eigenfunction on the grid and on the coarse grid.
  double residual_fine = 0.0;
  double residual_coarse = 0.0;
  double order = 0.0;
  bool matched = false;
  std::string note;
};

struct VerificationReport {
  Family family = Family::Eckart;
  std::string contour;
  Grid grid;
  VerifyTolerances tolerances;
  std::vector<LevelCheck> levels;
  double pt_defect = 0.0;
  std::vector<std::string> errors;
  bool pass = false;
};

/// Enumerates the closed-form spectrum, checks every level against targeted
/// inverse iteration, and records eigenfunction residuals with their observed
/// convergence order. Failures of individual steps land in `errors`.
VerificationReport verify_family(const FamilyParams& params, const Contour& contour, const Grid& grid,
                                 const VerifyTolerances& tolerances = {});

}  // namespace ptreg
