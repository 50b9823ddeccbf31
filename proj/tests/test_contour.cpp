#include <doctest.h>

#include <random>

#include "ptreg/contour.hpp"
#include "ptreg/potentials.hpp"
#include "ptreg/spectra.hpp"

using namespace ptreg;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}

}  // namespace

TEST_CASE("contour construction") {
  CHECK_THROWS_AS(Contour::shifted_line(-0.1), Error);
  CHECK_THROWS_AS(Contour::shifted_line(pi), Error);
  CHECK_THROWS_AS(Contour::arch(0.0), Error);
  CHECK_THROWS_AS(Contour::arch(pi / 2.0), Error);
  CHECK(Contour::real_axis().straight());
  CHECK_FALSE(Contour::arch(0.4).straight());
  CHECK(Contour::arch(0.4).epsilon() == 0.4);
}

TEST_CASE("map_point") {
  CHECK(std::abs(map_point(Contour::shifted_line(0.35), 0.0) - cplx{0.0, -0.35}) < 1e-15);
  const cplx apex = map_point(Contour::arch(pi / 6.0), 0.0);
  CHECK(std::abs(apex - cplx{0.0, std::log(2.0)}) < 1e-15);
  CHECK(std::abs(map_point(Contour::arch(pi / 6.0), 20.0).real() - pi / 3.0) < 1e-8);
  CHECK(std::abs(map_point(Contour::arch(pi / 6.0), -20.0).real() + pi / 3.0) < 1e-8);
  // far ends stay finite and keep descending
  const cplx far = map_point(Contour::arch(pi / 6.0), 500.0);
  CHECK(is_finite(far));
  CHECK(far.imag() < -490.0);
}

TEST_CASE("contour_derivative") {
  for (const double x : {-3.0, 0.0, 2.5}) CHECK(contour_derivative(Contour::shifted_line(0.7), x) == cplx{1.0});
  CHECK(std::abs(contour_derivative(Contour::arch(pi / 4.0), 0.0) - cplx{1.0, 0.0}) < 1e-15);

  const Contour arch = Contour::arch(0.3);
  const double h = 1e-5;
  const cplx fd = (arch.point(1.2 + h) - arch.point(1.2 - h)) / (2.0 * h);
  CHECK(std::abs(fd - arch.derivative(1.2)) < 1e-8);
}

TEST_CASE("contour PT symmetry and the arch identity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xdist(-15.0, 15.0);
  std::uniform_real_distribution<double> edist(0.02, pi / 2.0 - 0.02);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = xdist(rng);
    const double eps = edist(rng);
    for (const Contour& c : {Contour::shifted_line(eps), Contour::arch(eps)})
      CHECK(std::abs(c.point(-x) + std::conj(c.point(x))) <= 1e-14 * std::max(1.0, std::abs(c.point(x))));

    const Contour arch = Contour::arch(eps);
    const cplx lhs = std::sinh(cplx{x, -eps}) + I * std::exp(I * arch.point(x));
    CHECK(std::abs(lhs) <= 1e-12 * std::max(1.0, std::abs(std::sinh(cplx{x, -eps}))));
  }
}

TEST_CASE("arch map derivatives") {
  const LiouvilleMap map = arch_map(1.5);
  for (const double eps : {0.2, pi / 6.0, 1.2}) {
    const Contour arch = Contour::arch(eps);
    for (const double x : linspace(-4.0, 4.0, 41)) {
      const cplx xi = arch.point(x);
      CHECK(std::abs(map.r(xi) - cplx{x, -eps}) < 1e-12);
      CHECK(std::abs(map.dr(xi) * arch.derivative(x) - 1.0) < 1e-10);
      CHECK_NOTHROW(check_derivatives(map, xi));
    }
  }
}

TEST_CASE("inconsistent derivatives are reported") {
  LiouvilleMap broken = arch_map(1.0);
  broken.d3r = [](cplx) { return cplx{7.0, 0.0}; };
  try {
    check_derivatives(broken, Contour::arch(0.4).point(0.3));
    FAIL("expected DerivativeInconsistency");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DerivativeInconsistency);
  }
}

TEST_CASE("Liouville potential on simple maps") {
  const ComplexFn w = [](cplx z) { return z * z - 0.5 * z; };
  const double kappa = 0.8;
  const cplx xi{0.3, -0.4};
  CHECK(std::abs(liouville_potential(w, identity_map(kappa), xi) - (w(xi) + kappa * kappa)) < 1e-14);
  CHECK(std::abs(liouville_potential(w, linear_map(2.0, kappa), xi) - 4.0 * (w(2.0 * xi) + kappa * kappa)) < 1e-13);
}

TEST_CASE("Liouville transform of the Poschl-Teller parent gives Hulthen") {
  const HulthenParams p{2.0, 2.0};
  const Spectrum spectrum = hulthen_spectrum(p);
  const Contour arch = Contour::arch(pi / 6.0);
  for (const Level& level : spectrum.levels) {
    const PoschlTellerParams parent = hulthen_parent(p, level, arch.epsilon());
    const LiouvilleMap map = arch_map(level.kappa());
    const double k2 = level.kappa() * level.kappa();
    double worst = 0.0;
    for (const double x : linspace(-3.0, 3.0, 101)) {
      const cplx xi = arch.point(x);
      const cplx rhs = liouville_potential(rpt_potential(parent), map, xi);
      worst = std::max(worst, std::abs(rhs + k2 - eval_hulthen(p, xi)));
    }
    CHECK(worst <= 1e-6);
  }
  // the single point named for the identity: xi(0.8)
  const Level& ground = spectrum.levels.front();
  const cplx xi = arch.point(0.8);
  const cplx rhs = liouville_potential(rpt_potential(hulthen_parent(p, ground, arch.epsilon())),
                                      arch_map(ground.kappa()), xi);
  CHECK(std::abs(rhs + ground.kappa() * ground.kappa() - eval_hulthen(p, xi)) <= 1e-6);
}

TEST_CASE("branch tracker") {
  BranchTracker tracker;
  // walk once around the origin; the log keeps growing instead of wrapping
  cplx last;
  for (int k = 0; k <= 64; ++k) last = tracker.log(std::polar(2.0, 2.0 * pi * k / 64.0));
  CHECK(std::abs(last - cplx{std::log(2.0), 2.0 * pi}) < 1e-12);

  BranchTracker strict;
  strict.log(1.0);
  try {
    strict.log(-1.0);
    FAIL("expected BranchDiscontinuity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BranchDiscontinuity);
  }
}

TEST_CASE("wavefunction transport") {
  const ComplexFn chi = [](cplx r) { return std::exp(-r * r); };
  std::vector<cplx> xi;
  for (const double x : linspace(-2.0, 2.0, 41)) xi.push_back({x, -0.2});

  const auto same = transport_wavefunction(chi, identity_map(1.0), xi);
  for (std::size_t k = 0; k < xi.size(); ++k) CHECK(std::abs(same[k] - chi(xi[k])) < 1e-15);

  const ComplexFn one = [](cplx) { return cplx{1.0, 0.0}; };
  const auto flipped = transport_wavefunction(one, linear_map(-1.0, 1.0), xi);
  const cplx first = flipped.front();
  CHECK(std::abs(std::abs(first.imag()) - 1.0) < 1e-15);
  CHECK(std::abs(first.real()) < 1e-15);
  for (const cplx value : flipped) CHECK(std::abs(value - first) < 1e-15);
}
