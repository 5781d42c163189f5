#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bhwalk/checks.hpp"
#include "bhwalk/dynamics.hpp"
#include "bhwalk/entanglement.hpp"
#include "bhwalk/errors.hpp"
#include "bhwalk/io.hpp"
#include "bhwalk/projections.hpp"
#include "bhwalk/spectral.hpp"

namespace {

struct Options {
  int n = 30;
  double j = 1.0;
  std::vector<double> v;
  std::vector<int> n_list;
  std::string state;
  double tau_max = 4.0;
  int tau_steps = 201;
  std::string partition;
  std::string out = ".";
  std::string format = "csv";
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<bhw::Field>> rows;
};

void write_table(const Table& table, const Options& opts) {
  namespace fs = std::filesystem;
  fs::create_directories(opts.out);
  const std::string stem = opts.out + "/" + table.name;

  if (opts.format == "csv") {
    bhw::CsvWriter writer(stem + ".csv", table.columns);
    for (const auto& row : table.rows) writer.row(row);
    return;
  }

  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["name"] = table.name;
  doc["columns"] = table.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const auto& field : row) {
      if (const auto* i = std::get_if<long long>(&field))
        jrow.push_back(*i);
      else if (const auto* d = std::get_if<double>(&field))
        jrow.push_back(*d);
      else
        jrow.push_back(std::get<std::string>(field));
    }
    rows.push_back(std::move(jrow));
  }
  std::ofstream out(stem + ".json");
  if (!out) throw bhw::Error("cannot open output file: " + stem + ".json");
  out << doc.dump(2) << '\n';
}

double single_v(const Options& opts, const char* command) {
  if (opts.v.empty()) return 8.0;
  if (opts.v.size() > 1)
    std::cerr << "warning: " << command << " uses one interaction value, "
              << "taking --v " << opts.v.front() << "\n";
  return opts.v.front();
}

bhw::StateSpec parse_state(const std::string& text, int n) {
  if (text.empty()) return bhw::preset_state("psi1", n);
  if (bhw::is_preset_name(text)) return bhw::preset_state(text, n);

  // inline form: "i,j,re[,im];i,j,re[,im];..."
  bhw::StateSpec spec{n, {}};
  std::stringstream stream(text);
  std::string term;
  while (std::getline(stream, term, ';')) {
    if (term.empty()) continue;
    std::stringstream fields(term);
    std::string field;
    std::vector<double> parsed;
    try {
      while (std::getline(fields, field, ','))
        parsed.push_back(std::stod(field));
    } catch (const std::exception&) {
      parsed.clear();
    }
    if (parsed.size() < 3 || parsed.size() > 4)
      throw bhw::InvalidLatticeError("state term '" + term +
                                     "' is not i,j,re[,im]");
    spec.terms.push_back({static_cast<int>(parsed[0]),
                          static_cast<int>(parsed[1]),
                          {parsed[2], parsed.size() == 4 ? parsed[3] : 0.0}});
  }
  return spec;
}

bhw::Bipartition parse_partition(const std::string& text, int n) {
  if (text.empty()) return bhw::Bipartition::contiguous_half(n);
  std::vector<int> sites;
  std::stringstream stream(text);
  std::string token;
  try {
    while (std::getline(stream, token, ',')) {
      const auto dots = token.find("..");
      if (dots == std::string::npos) {
        sites.push_back(std::stoi(token));
      } else {
        const int first = std::stoi(token.substr(0, dots));
        const int last = std::stoi(token.substr(dots + 2));
        for (int s = first; s <= last; ++s) sites.push_back(s);
      }
    }
  } catch (const std::exception&) {
    throw bhw::InvalidLatticeError("partition '" + text +
                                   "' is not a site list like \"1..15\"");
  }
  return bhw::Bipartition::from_sites(sites, n);
}

std::vector<double> tau_grid(const Options& opts) {
  if (opts.tau_steps < 2)
    throw bhw::InvalidLatticeError("--tau-steps must be at least 2");
  if (!(opts.tau_max > 0.0))
    throw bhw::InvalidLatticeError("--tau-max must be positive");
  std::vector<double> taus(opts.tau_steps);
  for (int k = 0; k < opts.tau_steps; ++k)
    taus[k] = opts.tau_max * k / (opts.tau_steps - 1);
  return taus;
}

const char* band_name(bhw::Band band) {
  return band == bhw::Band::miniband ? "miniband" : "main";
}

void run_spectrum(const Options& opts) {
  const double v = single_v(opts, "spectrum");
  Table table{"bands", {"sign", "nu", "K", "omega", "band"}, {}};
  for (double sign : {1.0, -1.0}) {
    const auto decomp =
        bhw::diagonalize(bhw::build_hamiltonian({opts.n, opts.j, sign * v}));
    const auto bands = bhw::assign_quasimomenta(decomp);
    for (const auto& warning : bands.warnings)
      std::cerr << "warning: " << warning << "\n";
    for (const auto& p : bands.points)
      table.rows.push_back({static_cast<long long>(sign < 0 ? -1 : 1),
                            static_cast<long long>(p.nu), p.K, p.omega,
                            std::string(band_name(p.band))});
  }
  write_table(table, opts);
}

void run_deviation(const Options& opts) {
  const double v = single_v(opts, "deviation");
  std::vector<int> ns = opts.n_list;
  if (ns.empty()) ns = {4, 5, 6, 7, 8, 9, 10, 11, 12};
  Table table{"deviation", {"N", "D_V"}, {}};
  for (int n : ns)
    table.rows.push_back(
        {static_cast<long long>(n), bhw::spectrum_deviation(n, opts.j, v)});
  write_table(table, opts);
}

void run_evolve(const Options& opts) {
  const double v = single_v(opts, "evolve");
  const auto state = bhw::prepare_state(parse_state(opts.state, opts.n));
  const auto part = parse_partition(opts.partition, opts.n);
  const auto taus = tau_grid(opts);

  Table density{"density", {"sign", "tau", "site", "n"}, {}};
  Table correlation{"correlation", {"sign", "tau", "i", "j", "gamma"}, {}};
  Table entanglement{"entanglement", {"sign", "tau", "P11", "E_P"}, {}};
  Table summary{"summary", {"tau", "max_gamma_diff", "ep_diff"}, {}};

  double seam_peak = 0.0;
  const std::vector<int> seam = {opts.n - 2, opts.n - 1, 0, 1};

  const auto decomp_plus =
      bhw::diagonalize(bhw::build_hamiltonian({opts.n, opts.j, v}));
  const auto decomp_minus =
      bhw::diagonalize(bhw::build_hamiltonian({opts.n, opts.j, -v}));

  for (size_t t = 0; t < taus.size(); ++t) {
    double max_gamma_diff = 0.0, ep_diff = 0.0;
    Eigen::MatrixXd gamma_plus;
    double ep_plus = 0.0;

    for (double sign : {1.0, -1.0}) {
      const auto& decomp = sign > 0 ? decomp_plus : decomp_minus;
      const auto evolved = bhw::evolve(state, decomp, taus[t]);

      const auto profile = bhw::site_density(evolved, taus[t]);
      for (int s : seam) seam_peak = std::max(seam_peak, profile.n(s));
      const auto scaled =
          bhw::normalize_correlations(bhw::correlation_map(evolved, taus[t]));
      const auto record =
          bhw::entanglement_of_particles(evolved, part, taus[t]);

      const long long sgn = sign < 0 ? -1 : 1;
      for (int s = 0; s < opts.n; ++s)
        density.rows.push_back(
            {sgn, taus[t], static_cast<long long>(s + 1), profile.n(s)});
      for (int i = 0; i < opts.n; ++i)
        for (int j = 0; j < opts.n; ++j)
          correlation.rows.push_back({sgn, taus[t],
                                      static_cast<long long>(i + 1),
                                      static_cast<long long>(j + 1),
                                      scaled.gamma(i, j)});
      entanglement.rows.push_back({sgn, taus[t], record.P11, record.E_P});

      if (sign > 0) {
        gamma_plus = scaled.gamma;
        ep_plus = record.E_P;
      } else {
        max_gamma_diff = (scaled.gamma - gamma_plus).cwiseAbs().maxCoeff();
        ep_diff = std::abs(record.E_P - ep_plus);
      }
    }
    summary.rows.push_back({taus[t], max_gamma_diff, ep_diff});
  }

  if (seam_peak > 1e-3)
    std::cerr << "warning: packet density " << bhw::format_double(seam_peak)
              << " at the ring seam; wrap-around interference is visible\n";

  write_table(density, opts);
  write_table(correlation, opts);
  write_table(entanglement, opts);
  write_table(summary, opts);
}

void run_projections(const Options& opts) {
  const double v = single_v(opts, "projections");
  const auto plus = bhw::canonical_eigenbasis(
      bhw::diagonalize(bhw::build_hamiltonian({opts.n, opts.j, v})));
  const auto minus = bhw::canonical_eigenbasis(
      bhw::diagonalize(bhw::build_hamiltonian({opts.n, opts.j, -v})));

  std::vector<bhw::TwoParticleState> states;
  std::vector<std::string> names;
  if (opts.state.empty()) {
    for (int j = 1; j <= opts.n; ++j) {
      states.push_back(bhw::prepare_state({opts.n, {{1, j, {1.0, 0.0}}}}));
      names.push_back("state_1_" + std::to_string(j));
    }
  } else {
    states.push_back(bhw::prepare_state(parse_state(opts.state, opts.n)));
    names.push_back(bhw::is_preset_name(opts.state) ? opts.state : "inline");
  }

  const auto table = bhw::coefficient_table(states, plus, minus);
  Table out{"coefficients",
            {"state", "row", "omega", "nu_min", "parity", "c_plus_re",
             "c_plus_im", "c_minus_re", "c_minus_im"},
            {}};
  for (size_t s = 0; s < states.size(); ++s)
    for (int k = 0; k < table.c_plus.rows(); ++k)
      out.rows.push_back({names[s], static_cast<long long>(k),
                          table.omega_plus(k),
                          static_cast<long long>(table.labels[k].nu_min),
                          static_cast<long long>(table.labels[k].parity),
                          table.c_plus(k, s).real(), table.c_plus(k, s).imag(),
                          table.c_minus(k, s).real(),
                          table.c_minus(k, s).imag()});
  write_table(out, opts);
}

void run_delta(const Options& opts) {
  const auto state = bhw::prepare_state(parse_state(opts.state, opts.n));
  std::vector<double> grid = opts.v;
  if (grid.empty()) grid = {2.0, 4.0, 8.0, 12.0, 16.0, 20.0};
  Table table{"delta", {"V", "delta"}, {}};
  for (const auto& point : bhw::delta_of_v(state, opts.j, grid))
    table.rows.push_back({point.V, point.delta});
  write_table(table, opts);
}

void run_symmetry(const Options& opts) {
  const double v = single_v(opts, "symmetry");
  const bhw::LatticeConfig config{opts.n, opts.j, v};
  const auto relation = bhw::check_boost_relation(config);

  const auto state = bhw::prepare_state(parse_state(opts.state, opts.n));
  const auto basis = bhw::build_basis(opts.n);
  const int mid = opts.n / 2;
  std::vector<bhw::ObservableMatrix> observables;
  observables.push_back(bhw::density_observable(basis, 1));
  observables.push_back(bhw::density_observable(basis, mid));
  observables.push_back(bhw::density_observable(basis, opts.n));
  observables.push_back(bhw::pair_projector(basis, mid, mid + 1));

  const auto taus = tau_grid(opts);

  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["boost_relation"] = {{"N", relation.N},
                           {"J", relation.J},
                           {"V", relation.V},
                           {"max_deviation", relation.max_deviation},
                           {"pass", relation.pass}};
  auto& reports = doc["invariance"] = nlohmann::ordered_json::array();
  for (const auto& O : observables) {
    const auto r = bhw::check_invariance_theorem(state, O, config, taus);
    reports.push_back({{"observable", r.observable},
                       {"boost_eigenstate", r.boost_eigenstate},
                       {"boost_parity", r.boost_parity},
                       {"time_reversal_invariant", r.time_reversal_invariant},
                       {"observable_boost_invariant",
                        r.observable_boost_invariant},
                       {"observable_time_reversal_even",
                        r.observable_time_reversal_even},
                       {"full_invariance_expected", r.full_invariance_expected},
                       {"direct_deviation", r.direct_deviation},
                       {"half_relation_deviation", r.half_relation_deviation},
                       {"pass", r.pass}});
  }

  std::filesystem::create_directories(opts.out);
  const std::string path = opts.out + "/symmetry.json";
  std::ofstream out(path);
  if (!out) throw bhw::Error("cannot open output file: " + path);
  out << doc.dump(2) << '\n';
}

void add_common(CLI::App* cmd, Options& opts, bool with_state) {
  cmd->add_option("--n", opts.n, "ring size")->capture_default_str();
  cmd->add_option("--j", opts.j, "hopping amplitude")->capture_default_str();
  cmd->add_option("--v", opts.v, "interaction strength (repeatable)");
  if (with_state)
    cmd->add_option("--state", opts.state,
                    "preset psi1..psi6 or inline \"i,j,re[,im];...\"");
  cmd->add_option("--out", opts.out, "output directory")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-boson ring walks: spectra, correlations, entanglement"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "",
                 "key-value file mirroring the flags; flags win");

  Options opts;

  auto* spectrum =
      app.add_subcommand("spectrum", "band structure for both signs of V");
  add_common(spectrum, opts, false);

  auto* deviation = app.add_subcommand(
      "deviation", "spectral mirror deviation D_V over ring sizes");
  deviation->add_option("--n", opts.n_list, "ring sizes (repeatable)");
  deviation->add_option("--j", opts.j, "hopping amplitude")
      ->capture_default_str();
  deviation->add_option("--v", opts.v, "interaction strength");
  deviation->add_option("--out", opts.out, "output directory")
      ->capture_default_str();
  deviation->add_option("--format", opts.format, "table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* evolve = app.add_subcommand(
      "evolve", "walk a packet under V and -V, record observables");
  add_common(evolve, opts, true);
  evolve->add_option("--tau-max", opts.tau_max, "time horizon")
      ->capture_default_str();
  evolve->add_option("--tau-steps", opts.tau_steps, "grid points")
      ->capture_default_str();
  evolve->add_option("--partition", opts.partition,
                     "block A of the bipartition, e.g. \"1..15\"");

  auto* projections = app.add_subcommand(
      "projections", "eigenbasis coefficients paired across the sign of V");
  add_common(projections, opts, true);

  auto* delta = app.add_subcommand(
      "delta", "projection-profile distance between signs over a V grid");
  add_common(delta, opts, true);

  auto* symmetry = app.add_subcommand(
      "symmetry", "boost relation and sign-invariance reports");
  add_common(symmetry, opts, true);
  symmetry->add_option("--tau-max", opts.tau_max, "time horizon")
      ->capture_default_str();
  symmetry->add_option("--tau-steps", opts.tau_steps, "grid points")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (spectrum->parsed()) run_spectrum(opts);
    if (deviation->parsed()) run_deviation(opts);
    if (evolve->parsed()) run_evolve(opts);
    if (projections->parsed()) run_projections(opts);
    if (delta->parsed()) run_delta(opts);
    if (symmetry->parsed()) run_symmetry(opts);
    return 0;
  } catch (const bhw::SymmetryUndefinedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bhw::NumericalFailureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bhw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
