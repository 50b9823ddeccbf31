#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ptreg {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

/// Pointwise evaluator of a complex function, e.g. a potential V(xi).
using ComplexFn = std::function<cplx(cplx)>;

enum class ErrorKind {
  InvalidParameter,
  NonFinite,
  PoleInC,
  DegenerateRecurrence,
  SingularPoint,
  DerivativeInconsistency,
  BranchDiscontinuity,
  DegenerateS,
  OutOfRange,
  InternalConsistency,
  MetricVanishing,
  NoConvergence,
  ShiftSingular,
  SizeGuard,
  QRStall,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI, the verifier) can classify it without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Relative comparison with an absolute floor.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-13;
};

inline bool approx_equal(cplx a, cplx b, Tolerance tol = {}) {
  return std::abs(a - b) <= tol.abs + tol.rel * std::max(std::abs(a), std::abs(b));
}

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Throws NonFinite when `z` has a NaN or infinite component.
inline cplx require_finite(cplx z, std::string_view where) {
  if (!is_finite(z)) throw Error(ErrorKind::NonFinite, std::string(where) + " produced a non-finite value");
  return z;
}

enum class Family { Eckart, PoschlTeller, Hulthen };

std::string_view to_string(Family family);

}  // namespace ptreg
