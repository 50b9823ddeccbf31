#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ptreg/numeric.hpp"

extern "C" void zgeev_(const char* jobvl, const char* jobvr, const int* n, std::complex<double>* a, const int* lda,
                       std::complex<double>* w, std::complex<double>* vl, const int* ldvl, std::complex<double>* vr,
                       const int* ldvr, std::complex<double>* work, const int* lwork, double* rwork, int* info);

namespace ptreg {

namespace {

// LU factorization of a tridiagonal matrix with partial pivoting, laid out
// as in LAPACK's gttrf: U has two superdiagonals, row swaps are recorded.
class TridiagonalLU {
 public:
  // Returns false when a pivot is exactly zero.
  bool factor(const TridiagonalMatrix& m, cplx shift) {
    const std::size_t n = m.size();
    dl_ = m.lower;
    du_ = m.upper;
    d_.resize(n);
    for (std::size_t i = 0; i < n; ++i) d_[i] = m.diag[i] - shift;
    du2_.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped_.assign(n > 0 ? n - 1 : 0, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] != 0.0) {
          const cplx fact = dl_[i] / d_[i];
          dl_[i] = fact;
          d_[i + 1] -= fact * du_[i];
        }
      } else {
        const cplx fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const cplx temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swapped_[i] = true;
      }
    }
    return std::none_of(d_.begin(), d_.end(), [](cplx v) { return v == 0.0; });
  }

  void solve(std::vector<cplx>& b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const cplx temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (std::size_t k = n; k-- > 2;) {
      const std::size_t i = k - 2;
      b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }
  }

 private:
  std::vector<cplx> dl_, d_, du_, du2_;
  std::vector<bool> swapped_;
};

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const cplx value : v) m = std::max(m, std::abs(value));
  return m;
}

struct Rayleigh {
  cplx value;
  double residual;
};

Rayleigh rayleigh(const TridiagonalMatrix& m, std::span<const cplx> v) {
  const auto hv = m.apply(v);
  cplx numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    numerator += std::conj(v[i]) * hv[i];
    denominator += std::norm(v[i]);
  }
  const cplx lambda = numerator / denominator;
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(hv[i] - lambda * v[i]));
  return {lambda, worst / max_abs(v)};
}

EigenResult inverse_iteration(const TridiagonalMatrix& m, cplx target, const InverseIterationOptions& options) {
  const std::size_t n = m.size();
  TridiagonalLU lu;
  cplx shift = target;
  if (!lu.factor(m, shift)) {
    shift = target + 1e-8 * cplx{1.0, 1.0};
    if (!lu.factor(m, shift)) throw Error(ErrorKind::ShiftSingular, "shifted matrix stays singular after perturbation");
  }
  // Below this the residual is limited by round-off in H v itself.
  const double floor = 32.0 * std::numeric_limits<double>::epsilon() * m.norm_inf();
  const double goal = std::max(options.tolerance, floor);

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  std::vector<cplx> v(n);
  for (auto& value : v) value = {normal(rng), normal(rng)};

  EigenResult best;
  best.target = target;
  best.residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= options.max_iterations; ++it) {
    lu.solve(v);
    const double scale = max_abs(v);
    if (!(scale > 0.0) || !std::isfinite(scale)) break;
    for (auto& value : v) value /= scale;
    const Rayleigh estimate = rayleigh(m, v);
    if (estimate.residual < best.residual) {
      best.eigenvalue = estimate.value;
      best.eigenvector = v;
      best.residual = estimate.residual;
      best.iterations = it;
    }
    if (estimate.residual <= goal) {
      best.converged = true;
      break;
    }
  }
  return best;
}

}  // namespace

std::vector<EigenResult> solve_targeted(const TridiagonalMatrix& matrix, std::span<const cplx> targets,
                                        const InverseIterationOptions& options) {
  if (matrix.size() == 0) throw Error(ErrorKind::InvalidParameter, "solve_targeted: empty matrix");
  std::vector<EigenResult> results;
  results.reserve(targets.size());
  for (const cplx target : targets) {
    if (!is_finite(target)) throw Error(ErrorKind::InvalidParameter, "solve_targeted: non-finite target");
    results.push_back(inverse_iteration(matrix, target, options));
  }
  return results;
}

std::vector<EigenResult> solve_dense(const TridiagonalMatrix& matrix, const DenseOptions& options) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorKind::InvalidParameter, "solve_dense: empty matrix");
  if (n > options.max_size)
    throw Error(ErrorKind::SizeGuard, "solve_dense: " + std::to_string(n) + " rows exceed the limit of " +
                                          std::to_string(options.max_size));
  // zgeev: balancing, Hessenberg reduction and shifted QR (column-major storage)
  const int size = static_cast<int>(n);
  std::vector<cplx> dense(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    dense[i + i * n] = matrix.diag[i];
    if (i + 1 < n) {
      dense[(i + 1) + i * n] = matrix.lower[i];
      dense[i + (i + 1) * n] = matrix.upper[i];
    }
  }
  std::vector<cplx> values(n);
  std::vector<cplx> vectors(n * n);
  std::vector<double> rwork(2 * n);
  const int one = 1;
  int info = 0;
  int lwork = -1;
  cplx query;
  zgeev_("N", "V", &size, dense.data(), &size, values.data(), nullptr, &one, vectors.data(), &size, &query, &lwork,
         rwork.data(), &info);
  lwork = std::max(1, static_cast<int>(query.real()));
  std::vector<cplx> work(lwork);
  zgeev_("N", "V", &size, dense.data(), &size, values.data(), nullptr, &one, vectors.data(), &size, work.data(), &lwork,
         rwork.data(), &info);
  if (info > 0) throw Error(ErrorKind::QRStall, "shifted QR did not converge");
  if (info < 0) throw Error(ErrorKind::InternalConsistency, "zgeev rejected argument " + std::to_string(-info));

  std::vector<EigenResult> results(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto& result = results[k];
    result.eigenvalue = values[k];
    result.target = result.eigenvalue;
    result.eigenvector.assign(vectors.begin() + k * n, vectors.begin() + (k + 1) * n);
    const auto hv = matrix.apply(result.eigenvector);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(hv[i] - result.eigenvalue * result.eigenvector[i]));
    const double norm = max_abs(result.eigenvector);
    result.residual = norm > 0.0 ? worst / norm : 0.0;
    result.converged = true;
  }
  std::stable_sort(results.begin(), results.end(), [](const EigenResult& a, const EigenResult& b) {
    if (a.eigenvalue.real() != b.eigenvalue.real()) return a.eigenvalue.real() < b.eigenvalue.real();
    return a.eigenvalue.imag() < b.eigenvalue.imag();
  });
  return results;
}

}  // namespace ptreg
