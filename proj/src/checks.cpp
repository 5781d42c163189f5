#include "bhwalk/checks.hpp"

#include <cmath>
#include <utility>

#include "bhwalk/dynamics.hpp"
#include "bhwalk/errors.hpp"
#include "bhwalk/spectral.hpp"
#include "bhwalk/symmetry.hpp"

namespace bhw {

ObservableMatrix make_observable(Eigen::MatrixXcd matrix, std::string label) {
  if (matrix.rows() != matrix.cols())
    throw NumericalFailureError("observable '" + label + "' is not square");
  const double dev = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-12)
    throw NumericalFailureError("observable '" + label + "' is not hermitian");
  return ObservableMatrix{std::move(matrix), std::move(label)};
}

ObservableMatrix density_observable(const SymmetrizedBasis& basis, int site) {
  const int dim = basis.dim();
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(dim, dim);
  const auto& entries = basis.entries();
  for (int k = 0; k < dim; ++k)
    n(k, k) = static_cast<double>((entries[k].first == site) +
                                  (entries[k].second == site));
  return make_observable(std::move(n), "n_" + std::to_string(site));
}

ObservableMatrix pair_projector(const SymmetrizedBasis& basis, int i, int j) {
  const int dim = basis.dim();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  const int k = basis.index(std::min(i, j), std::max(i, j));
  p(k, k) = 1.0;
  return make_observable(std::move(p), "P_" + std::to_string(i) + "," +
                                           std::to_string(j));
}

double expectation(const ObservableMatrix& O, const TwoParticleState& state) {
  if (O.matrix.rows() != state.basis.dim())
    throw BasisMismatchError("observable and state use different lattices");
  const std::complex<double> value =
      state.amplitudes.dot(O.matrix * state.amplitudes);
  return value.real();
}

BoostRelationReport check_boost_relation(const LatticeConfig& config) {
  const SymmetrizedBasis basis(config.N);
  const Eigen::VectorXd signs = boost_signs(basis);  // throws on odd N
  const Eigen::MatrixXd h_plus = build_hamiltonian(config).elements;
  const Eigen::MatrixXd h_minus = build_hamiltonian(config.flipped()).elements;

  const Eigen::MatrixXd transported =
      signs.asDiagonal() * h_plus * signs.asDiagonal();
  const double dev = (transported + h_minus).cwiseAbs().maxCoeff();
  return BoostRelationReport{config.N, config.J, config.V, dev, dev < 1e-10};
}

InvarianceReport check_invariance_theorem(const TwoParticleState& state,
                                          const ObservableMatrix& O,
                                          const LatticeConfig& config,
                                          const std::vector<double>& taus) {
  if (state.basis.sites() != config.N)
    throw BasisMismatchError("state and lattice sizes differ");
  if (O.matrix.rows() != state.basis.dim())
    throw BasisMismatchError("observable and state use different lattices");

  InvarianceReport report;
  report.observable = O.label;
  report.taus = taus;

  const Eigen::VectorXd signs = boost_signs(state.basis);
  const TwoParticleState boosted =
      apply_symmetry(SymmetryOperator::boost(config.N), state);

  const double plus_dev =
      (boosted.amplitudes - state.amplitudes).cwiseAbs().maxCoeff();
  const double minus_dev =
      (boosted.amplitudes + state.amplitudes).cwiseAbs().maxCoeff();
  if (plus_dev < 1e-10)
    report.boost_parity = 1;
  else if (minus_dev < 1e-10)
    report.boost_parity = -1;
  report.boost_eigenstate = report.boost_parity != 0;

  // Real up to a global phase: rotate the largest component onto the real
  // axis and look at what imaginary part is left.
  int peak = 0;
  state.amplitudes.cwiseAbs().maxCoeff(&peak);
  const std::complex<double> phase =
      state.amplitudes(peak) / std::abs(state.amplitudes(peak));
  report.time_reversal_invariant =
      (state.amplitudes / phase).imag().cwiseAbs().maxCoeff() < 1e-10;

  const Eigen::MatrixXcd transported =
      signs.asDiagonal() * O.matrix * signs.asDiagonal();
  report.observable_boost_invariant =
      (transported - O.matrix).cwiseAbs().maxCoeff() < 1e-12;
  report.observable_time_reversal_even =
      O.matrix.imag().cwiseAbs().maxCoeff() < 1e-12;

  report.full_invariance_expected =
      report.boost_eigenstate && report.time_reversal_invariant &&
      report.observable_boost_invariant && report.observable_time_reversal_even;

  const ObservableMatrix mirrored =
      make_observable(transported, O.label + " (boosted)");
  const auto decomp_plus = diagonalize(build_hamiltonian(config));
  const auto decomp_minus = diagonalize(build_hamiltonian(config.flipped()));

  for (double tau : taus) {
    const double on_plus = expectation(O, evolve(state, decomp_plus, tau));
    const double on_minus = expectation(O, evolve(state, decomp_minus, tau));
    const double half =
        expectation(mirrored, evolve(boosted, decomp_minus, -tau));
    report.expect_plus.push_back(on_plus);
    report.expect_minus.push_back(on_minus);
    report.direct_deviation =
        std::max(report.direct_deviation, std::abs(on_plus - on_minus));
    report.half_relation_deviation =
        std::max(report.half_relation_deviation, std::abs(on_plus - half));
  }

  report.pass = report.half_relation_deviation < 1e-8 &&
                (!report.full_invariance_expected ||
                 report.direct_deviation < 1e-8);
  return report;
}

}  // namespace bhw
