#include <algorithm>
#include <cmath>
#include <string>

#include "ptreg/numeric.hpp"

namespace ptreg {

namespace {

constexpr double kMetricFloor = 1e-10;

cplx inverse_metric(const Contour& contour, double x) {
  const cplx d = contour.derivative(x);
  if (std::abs(d) < kMetricFloor) throw Error(ErrorKind::MetricVanishing, "|xi'| below 1e-10 at x=" + std::to_string(x));
  return 1.0 / d;
}

}  // namespace

void Grid::validate() const {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max))
    throw Error(ErrorKind::InvalidParameter, "grid needs finite x_min < x_max");
  if (n_points < 3) throw Error(ErrorKind::InvalidParameter, "grid needs at least 3 points");
}

std::vector<double> Grid::nodes() const {
  std::vector<double> xs(n_points);
  for (int i = 0; i < n_points; ++i) xs[i] = x(i);
  return xs;
}

Grid Grid::coarsened() const {
  if (n_points % 2 == 0 || n_points < 5)
    throw Error(ErrorKind::InvalidParameter, "coarsening needs an odd number of points, at least 5");
  return {x_min, x_max, (n_points + 1) / 2};
}

std::vector<cplx> TridiagonalMatrix::apply(std::span<const cplx> v) const {
  const std::size_t n = size();
  if (v.size() != n) throw Error(ErrorKind::InvalidParameter, "tridiagonal apply: size mismatch");
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = diag[i] * v[i];
    if (i > 0) acc += lower[i - 1] * v[i - 1];
    if (i + 1 < n) acc += upper[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

double TridiagonalMatrix::norm_inf() const {
  double norm = 0.0;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(lower[i - 1]);
    if (i + 1 < n) row += std::abs(upper[i]);
    norm = std::max(norm, row);
  }
  return norm;
}

double TridiagonalMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < lower.size(); ++i) worst = std::max(worst, std::abs(lower[i] - upper[i]));
  return worst;
}

DiscretizedHamiltonian build_hamiltonian(const ComplexFn& potential, const Contour& contour, const Grid& grid) {
  grid.validate();
  const int n = grid.n_points - 2;
  const double h = grid.step();
  const double h2 = h * h;
  DiscretizedHamiltonian H;
  H.grid = grid;
  H.metric = contour.straight() ? Metric::Flat : Metric::Curved;
  H.matrix.diag.resize(n);
  H.matrix.lower.resize(n - 1);
  H.matrix.upper.resize(n - 1);

  if (H.metric == Metric::Flat) {
    for (int i = 0; i < n; ++i) H.matrix.diag[i] = 2.0 / h2 + potential(contour.point(grid.x(i + 1)));
    std::fill(H.matrix.lower.begin(), H.matrix.lower.end(), cplx{-1.0 / h2});
    std::fill(H.matrix.upper.begin(), H.matrix.upper.end(), cplx{-1.0 / h2});
    H.boundary_left = H.boundary_right = -1.0 / h2;
    return H;
  }

  // half[k] = 1/xi' at x_k + h/2, k = 0 .. n_points-2
  std::vector<cplx> half(grid.n_points - 1);
  for (int k = 0; k < grid.n_points - 1; ++k) half[k] = inverse_metric(contour, grid.x(k) + 0.5 * h);
  for (int i = 0; i < n; ++i) {
    const int node = i + 1;
    const cplx g = inverse_metric(contour, grid.x(node));
    const cplx left = -g * half[node - 1] / h2;
    const cplx right = -g * half[node] / h2;
    H.matrix.diag[i] = -(left + right) + potential(contour.point(grid.x(node)));
    if (i > 0) H.matrix.lower[i - 1] = left;
    else H.boundary_left = left;
    if (i + 1 < n) H.matrix.upper[i] = right;
    else H.boundary_right = right;
  }
  return H;
}

double residual(std::span<const cplx> psi, cplx energy, const DiscretizedHamiltonian& hamiltonian,
                double buffer_fraction) {
  const int n_points = hamiltonian.grid.n_points;
  const int n = n_points - 2;
  std::vector<cplx> full(n_points);
  if (static_cast<int>(psi.size()) == n_points) {
    std::copy(psi.begin(), psi.end(), full.begin());
  } else if (static_cast<int>(psi.size()) == n) {
    std::copy(psi.begin(), psi.end(), full.begin() + 1);
  } else {
    throw Error(ErrorKind::InvalidParameter, "residual: psi must cover the grid or its interior");
  }
  double psi_norm = 0.0;
  for (const cplx value : full) psi_norm = std::max(psi_norm, std::abs(value));
  if (psi_norm == 0.0) return 0.0;

  const auto& m = hamiltonian.matrix;
  const int buffer = std::max(1, static_cast<int>(std::ceil(buffer_fraction * n_points)));
  double worst = 0.0;
  for (int node = buffer; node <= n_points - 1 - buffer; ++node) {
    if (node < 1 || node > n) continue;
    const int i = node - 1;
    const cplx left = i > 0 ? m.lower[i - 1] : hamiltonian.boundary_left;
    const cplx right = i + 1 < n ? m.upper[i] : hamiltonian.boundary_right;
    const cplx applied = left * full[node - 1] + m.diag[i] * full[node] + right * full[node + 1];
    worst = std::max(worst, std::abs(applied - energy * full[node]));
  }
  return worst / psi_norm;
}

cplx trapezoid(std::span<const cplx> values, double step) {
  if (values.size() < 2) return 0.0;
  cplx sum = 0.5 * (values.front() + values.back());
  for (std::size_t k = 1; k + 1 < values.size(); ++k) sum += values[k];
  return sum * step;
}

PtNorm pt_norm(std::span<const cplx> psi, const Grid& grid, const Contour& contour) {
  grid.validate();
  if (static_cast<int>(psi.size()) != grid.n_points)
    throw Error(ErrorKind::InvalidParameter, "pt_norm: psi must be sampled on every grid node");
  std::vector<cplx> squared(psi.size());
  std::vector<cplx> modulus(psi.size());
  for (int i = 0; i < grid.n_points; ++i) {
    squared[i] = psi[i] * psi[i] * contour.derivative(grid.x(i));
    modulus[i] = std::norm(psi[i]);
  }
  return {trapezoid(squared, grid.step()), trapezoid(modulus, grid.step()).real()};
}

}  // namespace ptreg
