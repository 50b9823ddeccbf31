#include "ptreg/special.hpp"

#include <string>

namespace ptreg::special {

namespace {

// Below this magnitude a denominator is treated as an exact zero.
constexpr double kPoleFloor = 1e-14;

void require_order(int n, const char* what) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, std::string(what) + ": negative order");
}

}  // namespace

cplx pochhammer(cplx a, int k) {
  require_order(k, "pochhammer");
  cplx product{1.0, 0.0};
  for (int j = 0; j < k; ++j) product *= a + static_cast<double>(j);
  return require_finite(product, "pochhammer");
}

cplx gauss2f1_terminating(int N, cplx b, cplx c, cplx z) {
  require_order(N, "gauss2f1_terminating");
  // The alternating terms cancel for |z| near 1/2, so accumulate in long double.
  using wide = std::complex<long double>;
  const wide bw(b.real(), b.imag());
  const wide cw(c.real(), c.imag());
  const wide zw(z.real(), z.imag());
  wide term{1.0L, 0.0L};
  wide sum = term;
  for (int k = 0; k < N; ++k) {
    const wide denom = cw + static_cast<long double>(k);
    if (std::abs(denom) < kPoleFloor)
      throw Error(ErrorKind::PoleInC, "(c)_k vanishes at k=" + std::to_string(k + 1) + " before termination");
    const long double kd = k;
    term *= (kd - N) * (bw + kd) / (denom * (kd + 1.0L)) * zw;
    sum += term;
  }
  return require_finite(cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag())),
                        "gauss2f1_terminating");
}

cplx jacobi_p_hyp(int n, cplx a, cplx b, cplx y) {
  require_order(n, "jacobi_p_hyp");
  if (n == 0) return 1.0;
  // Expand about the nearer endpoint: P_n^{(a,b)}(y) = (-1)^n P_n^{(b,a)}(-y).
  if (std::abs(1.0 + y) < std::abs(1.0 - y)) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    const cplx prefactor = sign * pochhammer(b + 1.0, n) / pochhammer(1.0, n);
    const cplx series = gauss2f1_terminating(n, static_cast<double>(n) + a + b + 1.0, b + 1.0, (1.0 + y) / 2.0);
    return require_finite(prefactor * series, "jacobi_p_hyp");
  }
  const cplx prefactor = pochhammer(a + 1.0, n) / pochhammer(1.0, n);
  const cplx series = gauss2f1_terminating(n, static_cast<double>(n) + a + b + 1.0, a + 1.0, (1.0 - y) / 2.0);
  return require_finite(prefactor * series, "jacobi_p_hyp");
}

cplx jacobi_p_rec(int n, cplx a, cplx b, cplx y) {
  require_order(n, "jacobi_p_rec");
  if (n == 0) return 1.0;
  // Complex a, b let consecutive terms cancel; carry the recurrence in long double.
  using wide = std::complex<long double>;
  const wide aw(a.real(), a.imag());
  const wide bw(b.real(), b.imag());
  const wide yw(y.real(), y.imag());
  wide previous{1.0L, 0.0L};
  wide current = 0.5L * ((aw - bw) + (aw + bw + 2.0L) * yw);
  for (int k = 2; k <= n; ++k) {
    const long double kd = k;
    const wide s = 2.0L * kd + aw + bw;
    const wide lead = 2.0L * kd * (kd + aw + bw) * (s - 2.0L);
    if (std::abs(lead) < kPoleFloor)
      throw Error(ErrorKind::DegenerateRecurrence, "leading coefficient vanishes at degree " + std::to_string(k));
    const wide mid = (s - 1.0L) * (s * (s - 2.0L) * yw + aw * aw - bw * bw);
    const wide tail = 2.0L * (kd + aw - 1.0L) * (kd + bw - 1.0L) * s;
    const wide next = (mid * current - tail * previous) / lead;
    previous = current;
    current = next;
  }
  return require_finite(cplx(static_cast<double>(current.real()), static_cast<double>(current.imag())),
                        "jacobi_p_rec");
}

}  // namespace ptreg::special
