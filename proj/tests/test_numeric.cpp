#include <doctest.h>

#include "ptreg/numeric.hpp"

using namespace ptreg;

namespace {

std::vector<cplx> points_on(const Contour& c, const Grid& g) {
  std::vector<cplx> pts;
  for (int i = 0; i < g.n_points; ++i) pts.push_back(c.point(g.x(i)));
  return pts;
}

std::vector<cplx> every_other(const std::vector<cplx>& v) {
  std::vector<cplx> out;
  for (std::size_t k = 0; k < v.size(); k += 2) out.push_back(v[k]);
  return out;
}

const Grid kEckartGrid{-18.0, 18.0, 4001};
const Grid kRptGrid{-12.0, 12.0, 3001};

}  // namespace

TEST_CASE("grid") {
  const Grid g{-1.0, 1.0, 5};
  CHECK(g.step() == 0.5);
  CHECK(g.x(4) == 1.0);
  const Grid coarse = g.coarsened();
  CHECK(coarse.n_points == 3);
  CHECK(coarse.step() == 1.0);
  CHECK_THROWS_AS(Grid({-1.0, 1.0, 2}).validate(), Error);
  CHECK_THROWS_AS(Grid({1.0, -1.0, 11}).validate(), Error);
  CHECK_THROWS_AS(Grid({-1.0, 1.0, 6}).coarsened(), Error);
}

TEST_CASE("free Laplacian stencil") {
  const ComplexFn zero = [](cplx) { return cplx{0.0}; };
  const Grid g{-1.0, 1.0, 21};
  const auto h = build_hamiltonian(zero, Contour::real_axis(), g);
  REQUIRE(h.matrix.size() == 19);
  for (std::size_t i = 1; i + 1 < h.matrix.size(); ++i) {
    CHECK(std::abs(h.matrix.lower[i - 1] - cplx{-100.0}) < 1e-9);
    CHECK(std::abs(h.matrix.diag[i] - cplx{200.0}) < 1e-9);
    CHECK(std::abs(h.matrix.upper[i] - cplx{-100.0}) < 1e-9);
  }
  CHECK(h.metric == Metric::Flat);
}

TEST_CASE("harmonic oscillator ground state") {
  const ComplexFn v = [](cplx z) { return z * z; };
  const Grid g{-10.0, 10.0, 2001};
  const auto h = build_hamiltonian(v, Contour::real_axis(), g);
  const cplx target{0.8, 0.0};
  const auto result = solve_targeted(h.matrix, std::span(&target, 1)).front();
  CHECK(result.converged);
  CHECK(std::abs(result.eigenvalue - 1.0) < 1e-4);
  CHECK(result.residual <= 1e-9);
}

TEST_CASE("singular potentials are reported") {
  // the real axis runs through the pole of the Eckart potential at r = 0
  try {
    build_hamiltonian(eckart_potential({3.0, 1.0, 0.5}), Contour::real_axis(), {-1.0, 1.0, 21});
    FAIL("expected SingularPoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularPoint);
  }
}

TEST_CASE("complex symmetric on the shifted line") {
  const PoschlTellerParams p{3.5, 1.5, 0.3};
  const auto h = build_hamiltonian(rpt_potential(p), Contour::shifted_line(p.epsilon), kRptGrid);
  CHECK(h.matrix.max_asymmetry() == 0.0);
}

TEST_CASE("curved metric is used on the arch") {
  const auto h = build_hamiltonian(hulthen_potential({2.0, 2.0}), Contour::arch(pi / 6.0), {-4.0, 4.0, 401});
  CHECK(h.metric == Metric::Curved);
  CHECK(h.matrix.max_asymmetry() > 0.0);
}

TEST_CASE("targeted solves for Eckart") {
  const EckartParams p{3.0, 1.0, 0.5};
  const Contour line = Contour::shifted_line(p.epsilon);
  const auto fine = build_hamiltonian(eckart_potential(p), line, kEckartGrid);
  const auto coarse = build_hamiltonian(eckart_potential(p), line, kEckartGrid.coarsened());
  const std::vector<cplx> targets{-3.75, 0.0};
  const auto rf = solve_targeted(fine.matrix, targets);
  const auto rc = solve_targeted(coarse.matrix, targets);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    CHECK(rf[k].converged);
    CHECK(rc[k].converged);
    CHECK(std::abs(rf[k].eigenvalue - targets[k]) < 1e-4);
    const cplx combined = (4.0 * rf[k].eigenvalue - rc[k].eigenvalue) / 3.0;
    CHECK(std::abs(combined.real() - targets[k].real()) <= 1e-5);
    CHECK(std::abs(combined.imag()) <= 1e-7);
  }
}

TEST_CASE("targeted solves are reproducible") {
  const PoschlTellerParams p{3.5, 1.5, 0.3};
  const auto h = build_hamiltonian(rpt_potential(p), Contour::shifted_line(p.epsilon), kRptGrid);
  const cplx target{-4.1, 0.0};
  const auto a = solve_targeted(h.matrix, std::span(&target, 1)).front();
  const auto b = solve_targeted(h.matrix, std::span(&target, 1)).front();
  CHECK(a.eigenvalue == b.eigenvalue);
  CHECK(a.iterations == b.iterations);
  CHECK(a.eigenvector == b.eigenvector);
}

TEST_CASE("negative controls") {
  const PoschlTellerParams p{3.5, 1.5, 0.3};
  const auto h = build_hamiltonian(rpt_potential(p), Contour::shifted_line(p.epsilon), kRptGrid);
  const Spectrum s = rpt_spectrum(p);
  const auto matches_a_level = [&s](cplx lambda) {
    for (const auto& level : s.levels)
      if (std::abs(lambda - level.energy) <= 1e-6) return true;
    return false;
  };

  // far above the bound states the solver settles on box states, not on a level
  const cplx high{100.0, 0.0};
  const auto far = solve_targeted(h.matrix, std::span(&high, 1)).front();
  CHECK_FALSE((far.converged && matches_a_level(far.eigenvalue)));

  // off the real axis there is nothing within distance 1
  const cplx off{0.0, 50.0};
  const auto away = solve_targeted(h.matrix, std::span(&off, 1)).front();
  CHECK((!away.converged || std::abs(away.eigenvalue - off) > 1.0));

  // a target shifted by 0.5 from each level is pulled back to the level, never confirmed as itself
  for (const auto& level : s.levels) {
    const cplx wrong{level.energy + 0.5, 0.0};
    const auto r = solve_targeted(h.matrix, std::span(&wrong, 1)).front();
    CHECK(std::abs(r.eigenvalue - wrong) > 0.4);
  }
}

TEST_CASE("missed tolerance is flagged, not thrown") {
  const PoschlTellerParams p{3.5, 1.5, 0.3};
  const auto h = build_hamiltonian(rpt_potential(p), Contour::shifted_line(p.epsilon), kRptGrid);
  const cplx target{-10.0, 0.0};
  InverseIterationOptions options;
  options.max_iterations = 2;
  const auto r = solve_targeted(h.matrix, std::span(&target, 1), options).front();
  CHECK_FALSE(r.converged);
  CHECK(r.residual > options.tolerance);
  CHECK(std::isfinite(r.residual));
}

TEST_CASE("singular shift is perturbed once") {
  const TridiagonalMatrix m{{0.0}, {2.0, 5.0}, {0.0}};
  const cplx target{2.0, 0.0};
  const auto r = solve_targeted(m, std::span(&target, 1)).front();
  CHECK(r.converged);
  CHECK(std::abs(r.eigenvalue - 2.0) < 1e-12);

  const cplx bad{std::nan(""), 0.0};
  CHECK_THROWS_AS(solve_targeted(m, std::span(&bad, 1)), Error);
}

TEST_CASE("dense solver") {
  const TridiagonalMatrix diagonal{{0.0, 0.0}, {{3.0, 1.0}, {-1.0, 0.5}, {2.0, 0.0}}, {0.0, 0.0}};
  const auto d = solve_dense(diagonal);
  REQUIRE(d.size() == 3);
  CHECK(d[0].eigenvalue == cplx{-1.0, 0.5});
  CHECK(d[1].eigenvalue == cplx{2.0, 0.0});
  CHECK(d[2].eigenvalue == cplx{3.0, 1.0});

  const cplx lambda{1.5, -0.7};
  const TridiagonalMatrix jordan{{0.0}, {lambda, lambda}, {1.0}};
  for (const auto& r : solve_dense(jordan)) CHECK(std::abs(r.eigenvalue - lambda) < 1e-6);

  const TridiagonalMatrix big{std::vector<cplx>(1300, 1.0), std::vector<cplx>(1301, 0.0), std::vector<cplx>(1300, 1.0)};
  try {
    solve_dense(big);
    FAIL("expected SizeGuard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeGuard);
  }
}

TEST_CASE("dense solver on a small Poschl-Teller grid") {
  const PoschlTellerParams p{3.5, 1.5, 0.3};
  const Grid g{-5.25, 5.25, 801};
  const auto h = build_hamiltonian(rpt_potential(p), Contour::shifted_line(p.epsilon), g);
  const auto all = solve_dense(h.matrix);
  for (const double e : {-16.0, -4.0, -1.0}) {
    double nearest = 1e300;
    for (const auto& r : all) nearest = std::min(nearest, std::abs(r.eigenvalue - e));
    CHECK(nearest <= 1e-3);
  }
  // nothing else below zero
  int negative = 0;
  for (const auto& r : all) negative += r.eigenvalue.real() < -0.5;
  CHECK(negative == 3);
}

TEST_CASE("residual of an exact grid eigenvector") {
  const PoschlTellerParams p{3.5, 1.5, 0.3};
  const auto h = build_hamiltonian(rpt_potential(p), Contour::shifted_line(p.epsilon), kRptGrid);
  const cplx target{-16.0, 0.0};
  const auto r = solve_targeted(h.matrix, std::span(&target, 1)).front();
  CHECK(residual(r.eigenvector, r.eigenvalue, h) <= 1e-12 * h.matrix.norm_inf());
  CHECK(residual(r.eigenvector, r.eigenvalue, h) <= 1e-6);
}

TEST_CASE("second-order residuals of analytic eigenfunctions") {
  const PoschlTellerParams p{3.5, 1.5, 0.3};
  const Contour line = Contour::shifted_line(p.epsilon);
  const auto fine = build_hamiltonian(rpt_potential(p), line, kRptGrid);
  const auto coarse = build_hamiltonian(rpt_potential(p), line, kRptGrid.coarsened());
  const Level ground = rpt_spectrum(p).levels.front();
  const auto psi = rpt_wavefunction(p, ground, points_on(line, kRptGrid));
  const double rf = residual(psi, ground.energy, fine);
  const double rc = residual(every_other(psi), ground.energy, coarse);
  CHECK(rc / rf >= 3.5);
  CHECK(rc / rf <= 4.5);
}

TEST_CASE("Jacobi convention arbiter") {
  const EckartParams p{3.0, 1.0, 0.5};
  const Contour line = Contour::shifted_line(p.epsilon);
  const auto fine = build_hamiltonian(eckart_potential(p), line, kEckartGrid);
  const auto coarse = build_hamiltonian(eckart_potential(p), line, kEckartGrid.coarsened());
  const Level level = eckart_spectrum(p).levels[1];
  const auto pts = points_on(line, kEckartGrid);

  const auto good = eckart_wavefunction(p, level, pts, JacobiConvention::Doubled);
  const double good_f = residual(good, level.energy, fine);
  const double good_c = residual(every_other(good), level.energy, coarse);
  CHECK(std::log2(good_c / good_f) == doctest::Approx(2.0).epsilon(0.1));

  const auto printed = eckart_wavefunction(p, level, pts, JacobiConvention::Printed);
  const double bad_f = residual(printed, level.energy, fine);
  const double bad_c = residual(every_other(printed), level.energy, coarse);
  CHECK(bad_f > 0.1);
  CHECK(bad_c / bad_f < 1.5);
}

TEST_CASE("Hulthen equation along the arch") {
  const HulthenParams p{2.0, 2.0};
  const Contour arch = Contour::arch(pi / 6.0);
  const Grid g{-12.0, 12.0, 12001};
  const auto h = build_hamiltonian(hulthen_potential(p), arch, g);
  const Level level = hulthen_spectrum(p).levels.front();
  const auto psi = hulthen_wavefunction(p, level, arch, g.nodes());
  CHECK(residual(psi, level.energy, h) <= 1e-4);

  const cplx target{level.energy, 0.0};
  const auto r = solve_targeted(h.matrix, std::span(&target, 1)).front();
  CHECK(r.converged);
  CHECK(std::abs(r.eigenvalue - level.kappa() * level.kappa()) <= 1e-4);
}

TEST_CASE("PT norm") {
  const Grid g{-6.0, 6.0, 1201};
  const std::vector<cplx> zero(g.n_points, 0.0);
  const PtNorm z = pt_norm(zero, g, Contour::real_axis());
  CHECK(z.bilinear == cplx{0.0});
  CHECK(z.modulus == 0.0);

  std::vector<cplx> gaussian;
  for (const double x : g.nodes()) gaussian.push_back(std::exp(-x * x));
  const PtNorm n = pt_norm(gaussian, g, Contour::real_axis());
  CHECK(n.modulus > 0.0);
  CHECK(std::abs(n.bilinear - n.modulus) < 1e-14);
  CHECK(n.modulus == doctest::Approx(std::sqrt(pi / 2.0)).epsilon(1e-10));

  const EckartParams p{3.0, 1.0, 0.5};
  const Contour line = Contour::shifted_line(p.epsilon);
  const Grid eg{-18.0, 18.0, 3601};
  const auto psi = eckart_wavefunction(p, eckart_spectrum(p).levels[0], points_on(line, eg));
  const PtNorm e = pt_norm(psi, eg, line);
  CHECK(is_finite(e.bilinear));
  CHECK(std::isfinite(e.modulus));
  std::vector<cplx> tail(psi.size(), 0.0);
  for (int i = 0; i < eg.n_points; ++i)
    if (std::abs(eg.x(i)) > 0.8 * eg.x_max) tail[i] = std::norm(psi[i]);
  CHECK(std::abs(trapezoid(tail, eg.step())) <= 1e-6 * e.modulus);
}

TEST_CASE("verify Eckart") {
  const auto report = verify_family(EckartParams{3.0, 1.0, 0.5}, Contour::shifted_line(0.5), kEckartGrid);
  CHECK(report.pass);
  CHECK(report.errors.empty());
  REQUIRE(report.levels.size() == 2);
  for (const auto& check : report.levels) {
    CHECK(check.abs_error <= 1e-5);
    CHECK(std::abs(check.numeric.imag()) <= 1e-7);
    CHECK(check.order >= 1.8);
    CHECK(check.order <= 2.2);
  }
  CHECK(report.pt_defect <= 1e-12);
}

TEST_CASE("verify Poschl-Teller") {
  VerifyTolerances tol;
  tol.energy = 1e-6;
  const auto report = verify_family(PoschlTellerParams{3.5, 1.5, 0.3}, Contour::shifted_line(0.3), kRptGrid, tol);
  CHECK(report.pass);
  REQUIRE(report.levels.size() == 3);
  for (const auto& check : report.levels) {
    CHECK(check.abs_error <= 1e-6);
    CHECK(std::abs(check.numeric.imag()) <= 10.0 * tol.energy);
    CHECK(check.order >= 1.8);
    CHECK(check.order <= 2.2);
  }
}

TEST_CASE("verify Hulthen on the arch") {
  VerifyTolerances tol;
  tol.energy = 1e-4;
  const auto report = verify_family(HulthenParams{2.0, 2.0}, Contour::arch(pi / 6.0), {-12.0, 12.0, 12001}, tol);
  CHECK(report.pass);
  REQUIRE(report.levels.size() == 1);
  CHECK(report.levels[0].residual_fine <= 1e-4);
}

TEST_CASE("verify rejects a wrong contour and a coarse grid") {
  const auto wrong = verify_family(HulthenParams{2.0, 2.0}, Contour::shifted_line(0.3), {-5.0, 5.0, 101});
  CHECK_FALSE(wrong.pass);
  CHECK_FALSE(wrong.errors.empty());

  const auto coarse = verify_family(EckartParams{3.0, 1.0, 0.5}, Contour::shifted_line(0.5), {-18.0, 18.0, 101});
  CHECK_FALSE(coarse.pass);
  REQUIRE(coarse.levels.size() == 2);
  CHECK(coarse.levels[0].residual_fine > 0.0);
}

TEST_CASE("Eckart eigenvalues do not depend on the shift") {
  std::vector<std::vector<cplx>> found;
  for (const double eps : {0.3, 0.6, 1.0}) {
    const auto report = verify_family(EckartParams{3.0, 1.0, eps}, Contour::shifted_line(eps), kEckartGrid);
    CHECK(report.pass);
    std::vector<cplx> values;
    for (const auto& check : report.levels) values.push_back(check.numeric);
    found.push_back(values);
  }
  for (std::size_t a = 0; a < found.size(); ++a)
    for (std::size_t b = a + 1; b < found.size(); ++b) {
      REQUIRE(found[a].size() == found[b].size());
      for (std::size_t k = 0; k < found[a].size(); ++k) CHECK(std::abs(found[a][k] - found[b][k]) <= 1e-6);
    }
}
