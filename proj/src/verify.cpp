#include <cmath>
#include <optional>

#include "ptreg/numeric.hpp"

namespace ptreg {

namespace {

struct FamilySetup {
  Spectrum spectrum;
  ComplexFn potential;
  std::function<std::vector<cplx>(const Level&, const Grid&)> wavefunction;
};

std::vector<cplx> contour_points(const Contour& contour, const Grid& grid) {
  std::vector<cplx> points(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) points[i] = contour.point(grid.x(i));
  return points;
}

FamilySetup setup(const FamilyParams& params, const Contour& contour) {
  struct Visitor {
    const Contour& contour;

    FamilySetup operator()(const EckartParams& p) const {
      if (!contour.straight()) throw Error(ErrorKind::InvalidParameter, "Eckart is verified on the shifted line");
      return {eckart_spectrum(p), eckart_potential(p), [p, c = contour](const Level& level, const Grid& grid) {
                return eckart_wavefunction(p, level, contour_points(c, grid));
              }};
    }
    FamilySetup operator()(const PoschlTellerParams& p) const {
      if (!contour.straight()) throw Error(ErrorKind::InvalidParameter, "Poschl-Teller is verified on the shifted line");
      return {rpt_spectrum(p), rpt_potential(p), [p, c = contour](const Level& level, const Grid& grid) {
                return rpt_wavefunction(p, level, contour_points(c, grid));
              }};
    }
    FamilySetup operator()(const HulthenParams& p) const {
      if (contour.straight()) throw Error(ErrorKind::InvalidParameter, "Hulthen is verified on the arch contour");
      return {hulthen_spectrum(p), hulthen_potential(p), [p, c = contour](const Level& level, const Grid& grid) {
                return hulthen_wavefunction(p, level, c, grid.nodes());
              }};
    }
  };
  return std::visit(Visitor{contour}, params);
}

std::vector<cplx> every_other(const std::vector<cplx>& values) {
  std::vector<cplx> out;
  out.reserve(values.size() / 2 + 1);
  for (std::size_t k = 0; k < values.size(); k += 2) out.push_back(values[k]);
  return out;
}

}  // namespace

Family family_of(const FamilyParams& params) {
  struct Visitor {
    Family operator()(const EckartParams&) const { return Family::Eckart; }
    Family operator()(const PoschlTellerParams&) const { return Family::PoschlTeller; }
    Family operator()(const HulthenParams&) const { return Family::Hulthen; }
  };
  return std::visit(Visitor{}, params);
}

VerificationReport verify_family(const FamilyParams& params, const Contour& contour, const Grid& grid,
                                 const VerifyTolerances& tolerances) {
  VerificationReport report;
  report.family = family_of(params);
  report.contour = contour.name();
  report.grid = grid;
  report.tolerances = tolerances;

  FamilySetup family;
  DiscretizedHamiltonian fine;
  std::optional<DiscretizedHamiltonian> coarse;
  try {
    grid.validate();
    family = setup(params, contour);
    fine = build_hamiltonian(family.potential, contour, grid);
    if (grid.n_points % 2 == 1 && grid.n_points >= 5) {
      coarse = build_hamiltonian(family.potential, contour, grid.coarsened());
    } else if (tolerances.extrapolate) {
      report.errors.push_back("extrapolation needs an odd number of grid points, at least 5");
    }
    const auto xs = grid.nodes();
    report.pt_defect = pt_defect(family.potential, contour, xs);
  } catch (const Error& e) {
    report.errors.emplace_back(e.what());
    report.pass = false;
    return report;
  }

  for (const Level& level : family.spectrum.levels) {
    LevelCheck check;
    check.qn = level.qn;
    check.analytic = level.energy;
    try {
      const cplx target{level.energy, 0.0};
      const auto fine_result = solve_targeted(fine.matrix, std::span(&target, 1), tolerances.solver).front();
      check.raw_fine = fine_result.eigenvalue;
      check.solver_residual = fine_result.residual;
      check.iterations = fine_result.iterations;
      check.converged = fine_result.converged;
      check.numeric = check.raw_fine;
      if (coarse) {
        const auto coarse_result = solve_targeted(coarse->matrix, std::span(&target, 1), tolerances.solver).front();
        check.raw_coarse = coarse_result.eigenvalue;
        check.converged = check.converged && coarse_result.converged;
        if (tolerances.extrapolate) check.numeric = (4.0 * check.raw_fine - check.raw_coarse) / 3.0;
      }
      check.abs_error = std::abs(check.numeric - level.energy);

      const auto psi = family.wavefunction(level, grid);
      check.residual_fine = residual(psi, level.energy, fine, tolerances.buffer_fraction);
      if (coarse) {
        check.residual_coarse = residual(every_other(psi), level.energy, *coarse, tolerances.buffer_fraction);
        if (check.residual_fine > 0.0) check.order = std::log2(check.residual_coarse / check.residual_fine);
      }
      check.matched = check.converged && check.abs_error <= tolerances.energy &&
                      std::abs(check.numeric.imag()) <= tolerances.imag;
      if (!check.converged) check.note = "inverse iteration did not converge";
      else if (!check.matched) check.note = "eigenvalue outside tolerance";
    } catch (const Error& e) {
      check.note = e.what();
      report.errors.emplace_back(e.what());
    }
    report.levels.push_back(std::move(check));
  }
  report.pass = report.errors.empty();
  for (const auto& check : report.levels) report.pass = report.pass && check.matched;
  return report;
}

}  // namespace ptreg
