#include "ptreg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ptreg::cli {

namespace {

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorKind::InvalidParameter, message); }

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    invalid("cannot parse number '" + text + "'");
  }
  if (used != text.size()) invalid("cannot parse number '" + text + "'");
  return value;
}

std::string trim(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  return text;
}

std::string format_int(int value) { return std::to_string(value); }

std::vector<double> sample_nodes(const Grid& grid) { return grid.nodes(); }

const Level& find_level(const Spectrum& spectrum, const RunConfig& config) {
  for (const Level& level : spectrum.levels) {
    if (level.qn.N != *config.N) continue;
    if (level.qn.family == Family::Eckart) return level;
    if (!config.sigma) invalid("invalid level: --sigma is required for this family");
    if (level.qn.sigma != *config.sigma) continue;
    if (level.qn.family == Family::PoschlTeller) {
      if (!config.tau) invalid("invalid level: --tau is required for this family");
      if (level.qn.tau != *config.tau) continue;
    } else if (config.tau && level.qn.tau != *config.tau) {
      continue;
    }
    return level;
  }
  invalid("invalid level: no bound state with the requested quantum numbers");
}

std::vector<cplx> level_wavefunction(const RunConfig& config, const Level& level, const Contour& contour,
                                     const std::vector<double>& xs) {
  const FamilyParams params = config.params();
  if (const auto* p = std::get_if<HulthenParams>(&params)) return hulthen_wavefunction(*p, level, contour, xs);
  std::vector<cplx> points;
  points.reserve(xs.size());
  for (const double x : xs) points.push_back(contour.point(x));
  if (const auto* p = std::get_if<EckartParams>(&params)) return eckart_wavefunction(*p, level, points);
  return rpt_wavefunction(std::get<PoschlTellerParams>(params), level, points);
}

Spectrum spectrum_of(const FamilyParams& params) {
  struct Visitor {
    Spectrum operator()(const EckartParams& p) const { return eckart_spectrum(p); }
    Spectrum operator()(const PoschlTellerParams& p) const { return rpt_spectrum(p); }
    Spectrum operator()(const HulthenParams& p) const { return hulthen_spectrum(p); }
  };
  return std::visit(Visitor{}, params);
}

ComplexFn potential_of(const FamilyParams& params) {
  struct Visitor {
    ComplexFn operator()(const EckartParams& p) const { return eckart_potential(p); }
    ComplexFn operator()(const PoschlTellerParams& p) const { return rpt_potential(p); }
    ComplexFn operator()(const HulthenParams& p) const { return hulthen_potential(p); }
  };
  return std::visit(Visitor{}, params);
}

}  // namespace

std::string CsvTable::render() const {
  std::string text;
  const auto append_row = [&text](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k > 0) text += ',';
      text += cells[k];
    }
    text += '\n';
  };
  append_row(header);
  for (const auto& row : rows) append_row(row);
  return text;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return buf;
}

double parse_angle(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) invalid("empty angle");
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  const auto at = lower.find("pi");
  if (at == std::string::npos) return parse_real(text);

  std::string coefficient = lower.substr(0, at);
  if (!coefficient.empty() && coefficient.back() == '*') coefficient.pop_back();
  double factor = 1.0;
  if (coefficient == "-") factor = -1.0;
  else if (coefficient == "+" || coefficient.empty()) factor = 1.0;
  else factor = parse_real(coefficient);

  const std::string rest = lower.substr(at + 2);
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') invalid("cannot parse angle '" + text + "'");
    divisor = parse_real(rest.substr(1));
    if (divisor == 0.0) invalid("division by zero in angle '" + text + "'");
  }
  return factor * pi / divisor;
}

Family RunConfig::family_tag() const {
  if (family == "eckart") return Family::Eckart;
  if (family == "rpt") return Family::PoschlTeller;
  if (family == "hulthen") return Family::Hulthen;
  invalid("unknown family '" + family + "' (expected eckart, rpt or hulthen)");
}

void RunConfig::resolve() {
  const Family tag = family_tag();
  switch (tag) {
    case Family::Eckart:
      if (!A) A = 3.0;
      if (!beta) beta = 1.0;
      if (!epsilon) epsilon = 0.5;
      if (!tol_energy) tol_energy = 1e-5;
      break;
    case Family::PoschlTeller:
      if (!alpha) alpha = 3.5;
      if (!beta) beta = 1.5;
      if (!epsilon) epsilon = 0.3;
      if (!tol_energy) tol_energy = 1e-6;
      break;
    case Family::Hulthen:
      if (!alpha) alpha = 2.0;
      if (!C) C = 2.0;
      if (!epsilon) epsilon = pi / 6.0;
      if (!tol_energy) tol_energy = 1e-4;
      break;
  }

  Grid fallback;
  if (subcommand == "sample") {
    fallback = {-5.0, 5.0, 101};
  } else if (subcommand == "transform") {
    fallback = {-3.0, 3.0, 101};
  } else if (tag == Family::Eckart) {
    fallback = {-18.0, 18.0, 4001};
  } else if (tag == Family::PoschlTeller) {
    fallback = {-12.0, 12.0, 3001};
  } else {
    fallback = {-12.0, 12.0, 12001};
  }
  if (!x_min) x_min = fallback.x_min;
  if (!x_max) x_max = fallback.x_max;
  if (!n_points) n_points = fallback.n_points;

  if (!contour) contour = tag == Family::Hulthen ? "arch" : "line";
  if (*contour != "line" && *contour != "arch") invalid("unknown contour '" + *contour + "' (expected line or arch)");
  for (const auto& sign : {sigma, tau})
    if (sign && *sign != 1 && *sign != -1) invalid("parities must be +1 or -1");
  if (N && *N < 0) invalid("N must be non-negative");
  if (!(*tol_energy > 0.0) || !(tol_imag > 0.0) || !(tol_residual > 0.0)) invalid("tolerances must be positive");

  std::visit([](const auto& p) { p.validate(); }, params());
  grid().validate();
  (void)make_contour();
}

FamilyParams RunConfig::params() const {
  switch (family_tag()) {
    case Family::Eckart: return EckartParams{*A, *beta, *epsilon};
    case Family::PoschlTeller: return PoschlTellerParams{*alpha, *beta, *epsilon};
    case Family::Hulthen: return HulthenParams{*alpha, *C};
  }
  invalid("unknown family");
}

Contour RunConfig::make_contour() const {
  return *contour == "arch" ? Contour::arch(*epsilon) : Contour::shifted_line(*epsilon);
}

Grid RunConfig::grid() const { return {*x_min, *x_max, *n_points}; }

VerifyTolerances RunConfig::tolerances() const {
  VerifyTolerances t;
  t.energy = *tol_energy;
  t.imag = tol_imag;
  t.solver.tolerance = tol_residual;
  t.solver.seed = seed;
  return t;
}

CsvTable cmd_spectrum(const RunConfig& config) {
  const Spectrum spectrum = spectrum_of(config.params());
  CsvTable table;
  table.header = {"family", "sigma", "tau", "N", "E", "kappa"};
  switch (config.family_tag()) {
    case Family::Eckart:
      table.header.insert(table.header.end(), {"u_re", "u_im", "v_re", "v_im"});
      break;
    case Family::PoschlTeller:
      table.header.insert(table.header.end(), {"two_mu", "two_nu"});
      break;
    case Family::Hulthen:
      table.header.insert(table.header.end(), {"s", "tau_beta"});
      break;
  }
  for (const Level& level : spectrum.levels) {
    std::vector<std::string> row{std::string(to_string(level.qn.family)), format_int(level.qn.sigma),
                                 format_int(level.qn.tau), format_int(level.qn.N), format_number(level.energy),
                                 format_number(level.kappa())};
    if (const auto* a = std::get_if<EckartAux>(&level.aux)) {
      for (const double v : {a->u.real(), a->u.imag(), a->v.real(), a->v.imag()}) row.push_back(format_number(v));
    } else if (const auto* a = std::get_if<PoschlTellerAux>(&level.aux)) {
      row.push_back(format_number(a->two_mu));
      row.push_back(format_number(a->two_nu));
    } else if (const auto* a = std::get_if<HulthenAux>(&level.aux)) {
      row.push_back(format_number(a->s));
      row.push_back(format_number(a->tau_beta));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

VerifyOutcome cmd_verify(const RunConfig& config) {
  VerifyOutcome outcome;
  outcome.report = verify_family(config.params(), config.make_contour(), config.grid(), config.tolerances());
  outcome.table.header = {"N", "sigma", "tau", "E_analytic", "lambda_re", "lambda_im", "abs_err", "residual", "converged"};
  for (const auto& check : outcome.report.levels) {
    outcome.table.rows.push_back({format_int(check.qn.N), format_int(check.qn.sigma), format_int(check.qn.tau),
                                  format_number(check.analytic), format_number(check.numeric.real()),
                                  format_number(check.numeric.imag()), format_number(check.abs_error),
                                  format_number(check.residual_fine), check.converged ? "1" : "0"});
  }
  return outcome;
}

CsvTable cmd_sample(const RunConfig& config) {
  const Contour contour = config.make_contour();
  const ComplexFn potential = potential_of(config.params());
  const auto xs = sample_nodes(config.grid());
  CsvTable table;
  table.header = {"x", "xi_re", "xi_im", "V_re", "V_im"};

  std::vector<cplx> psi;
  if (config.has_level()) {
    const bool canonical = (config.family_tag() == Family::Hulthen) == !contour.straight();
    if (!canonical) invalid("eigenfunctions are sampled on the family's own contour only");
    const Spectrum spectrum = spectrum_of(config.params());
    psi = level_wavefunction(config, find_level(spectrum, config), contour, xs);
    table.header.insert(table.header.end(), {"psi_re", "psi_im"});
  }
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const cplx xi = contour.point(xs[k]);
    const cplx v = potential(xi);
    std::vector<std::string> row{format_number(xs[k]), format_number(xi.real()), format_number(xi.imag()),
                                 format_number(v.real()), format_number(v.imag())};
    if (!psi.empty()) {
      row.push_back(format_number(psi[k].real()));
      row.push_back(format_number(psi[k].imag()));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable cmd_transform(const RunConfig& config) {
  if (config.family_tag() != Family::Hulthen) invalid("transform maps a Poschl-Teller parent onto --family hulthen");
  if (!config.has_level()) invalid("invalid level: transform needs --sigma and --N");
  const auto hulthen = std::get<HulthenParams>(config.params());
  const Spectrum spectrum = hulthen_spectrum(hulthen);
  const Level& level = find_level(spectrum, config);
  const PoschlTellerParams parent = hulthen_parent(hulthen, level, *config.epsilon);
  const double kappa = level.kappa();
  const ComplexFn base = rpt_potential(parent);

  const Contour arch = Contour::arch(*config.epsilon);
  const Contour line = Contour::shifted_line(*config.epsilon);
  const LiouvilleMap map = config.identity ? identity_map(kappa) : arch_map(kappa);
  // New energy of the mapped problem: kappa^2 on the arch, -kappa^2 for the identity.
  const double new_energy = config.identity ? -kappa * kappa : kappa * kappa;

  CsvTable table;
  table.header = {"x", "xi_re", "xi_im", "V_liouville_re", "V_liouville_im", "V_closed_re", "V_closed_im", "abs_diff"};
  for (const double x : sample_nodes(config.grid())) {
    const cplx xi = config.identity ? line.point(x) : arch.point(x);
    const cplx transformed = liouville_potential(base, map, xi) + new_energy;
    const cplx closed = config.identity ? base(xi) : eval_hulthen(hulthen, xi);
    table.rows.push_back({format_number(x), format_number(xi.real()), format_number(xi.imag()),
                          format_number(transformed.real()), format_number(transformed.imag()),
                          format_number(closed.real()), format_number(closed.imag()),
                          format_number(std::abs(transformed - closed))});
  }
  return table;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form spectra of PT-regularized Eckart, Poschl-Teller and Hulthen potentials"};
  app.require_subcommand(1);
  RunConfig config;
  std::string epsilon_text;
  std::optional<double> A, beta, alpha, C, x_min, x_max, tol_energy;
  std::optional<int> n_points, sigma, tau, N;
  std::optional<std::string> contour;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, "eckart | rpt | hulthen")->capture_default_str();
    sub->add_option("--A", A, "Eckart coupling A (default 3)");
    sub->add_option("--beta", beta, "beta (default 1 for eckart, 1.5 for rpt)");
    sub->add_option("--alpha", alpha, "alpha (default 3.5 for rpt, 2 for hulthen)");
    sub->add_option("--C", C, "Hulthen C = A + B (default 2)");
    sub->add_option("--epsilon", epsilon_text, "contour shift in radians, 'pi/6' accepted");
    sub->add_option("--xmin", x_min, "grid start");
    sub->add_option("--xmax", x_max, "grid end");
    sub->add_option("--n", n_points, "grid points");
    sub->add_option("--tol-energy", tol_energy, "eigenvalue tolerance");
    sub->add_option("--tol-imag", config.tol_imag, "tolerance on |Im lambda|")->capture_default_str();
    sub->add_option("--tol-residual", config.tol_residual, "inverse-iteration residual target")->capture_default_str();
    sub->add_option("--seed", config.seed, "start-vector seed")->capture_default_str();
    sub->add_option("--out", config.out, "write CSV here instead of stdout");
    sub->add_option("--sigma", sigma, "generalized parity sigma (+1/-1)");
    sub->add_option("--tau", tau, "generalized parity tau (+1/-1)");
    sub->add_option("--N", N, "main quantum number");
    sub->add_option("--contour", contour, "line | arch");
  };
  for (const char* name : {"spectrum", "verify", "sample", "transform"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub);
    if (std::string(name) == "transform") sub->add_flag("--identity", config.identity, "self-test with the identity map");
    sub->callback([&config, name] { config.subcommand = name; });
  }
  app.get_subcommand("spectrum")->description("closed-form levels");
  app.get_subcommand("verify")->description("compare closed forms against the finite-difference eigensolver");
  app.get_subcommand("sample")->description("contour, potential and eigenfunction samples");
  app.get_subcommand("transform")->description("Liouville-transformed potential against the closed form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  int code = 0;
  CsvTable table;
  try {
    config.A = A;
    config.beta = beta;
    config.alpha = alpha;
    config.C = C;
    config.x_min = x_min;
    config.x_max = x_max;
    config.n_points = n_points;
    config.tol_energy = tol_energy;
    config.sigma = sigma;
    config.tau = tau;
    config.N = N;
    config.contour = contour;
    if (!epsilon_text.empty()) config.epsilon = parse_angle(epsilon_text);
    config.resolve();

    if (config.subcommand == "spectrum") {
      table = cmd_spectrum(config);
      if (config.family_tag() == Family::Hulthen) {
        const auto p = std::get<HulthenParams>(config.params());
        err << "note: general form A/(1-e^{2i xi})^2 + B/(1-e^{2i xi}) with A=" << p.a() << ", B=" << p.b()
            << "; the classic Hulthen potential is the A=0 (alpha=1) case\n";
      }
    } else if (config.subcommand == "verify") {
      auto outcome = cmd_verify(config);
      table = std::move(outcome.table);
      for (const auto& message : outcome.report.errors) err << "verify: " << message << '\n';
      err << "verify: " << (outcome.report.pass ? "PASS" : "FAIL") << " (" << outcome.report.levels.size()
          << " levels, pt_defect=" << outcome.report.pt_defect << ")\n";
      code = outcome.report.pass ? 0 : 1;
    } else if (config.subcommand == "sample") {
      table = cmd_sample(config);
    } else {
      table = cmd_transform(config);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string text = table.render();
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.out << '\n';
      return 2;
    }
    file << text;
  }
  return code;
}

}  // namespace ptreg::cli
