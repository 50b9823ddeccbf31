#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptreg/numeric.hpp"

namespace ptreg::cli {

/// Header plus rows of already formatted cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render() const;
};

/// 12 significant digits, scientific notation, '.' as decimal point.
std::string format_number(double value);

/// Accepts plain numbers and fractions of pi: "0.5", "pi", "pi/6", "2*pi/3", "-pi/4".
double parse_angle(const std::string& text);

enum class ContourKind { Line, Arch };

/// Command-line settings. Unset optionals take the family defaults listed in
/// the README; `resolve()` fills them in and validates everything.
struct RunConfig {
  std::string subcommand;
  std::string family = "eckart";
  std::optional<double> A, beta, alpha, C, epsilon;
  std::optional<double> x_min, x_max;
  std::optional<int> n_points;
  std::optional<double> tol_energy;
  double tol_imag = 1e-7;
  double tol_residual = 1e-10;
  std::uint64_t seed = 42;
  std::string out;
  std::optional<int> sigma, tau, N;
  std::optional<std::string> contour;
  bool identity = false;

  /// Throws Error(InvalidParameter) on unknown families or invalid values.
  void resolve();

  Family family_tag() const;
  FamilyParams params() const;
  Contour make_contour() const;
  Grid grid() const;
  VerifyTolerances tolerances() const;
  bool has_level() const { return N.has_value(); }
};

CsvTable cmd_spectrum(const RunConfig& config);

struct VerifyOutcome {
  CsvTable table;
  VerificationReport report;
};

VerifyOutcome cmd_verify(const RunConfig& config);
CsvTable cmd_sample(const RunConfig& config);
CsvTable cmd_transform(const RunConfig& config);

/// Exit codes: 0 pass, 1 verification failure, 2 invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptreg::cli
