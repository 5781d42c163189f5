#include "bhwalk/projections.hpp"

#include <cmath>

#include "bhwalk/errors.hpp"

namespace bhw {

namespace {

ProjectionCoefficients project_onto(const Eigen::MatrixXd& q,
                                    const TwoParticleState& state) {
  ProjectionCoefficients coeffs;
  coeffs.c = q.transpose() * state.amplitudes;
  coeffs.real = coeffs.c.imag().cwiseAbs().maxCoeff() < 1e-10;
  return coeffs;
}

}  // namespace

ProjectionCoefficients eigenprojections(const TwoParticleState& state,
                                        const SpectralDecomposition& decomp) {
  if (state.basis != decomp.basis)
    throw BasisMismatchError("state and decomposition use different lattices");
  return project_onto(decomp.eigenvectors, state);
}

ProjectionCoefficients eigenprojections(const TwoParticleState& state,
                                        const CanonicalBasis& canon) {
  if (state.basis.sites() != canon.config.N)
    throw BasisMismatchError("state and eigenbasis use different lattices");
  return project_onto(canon.vectors, state);
}

ProjectionProfile projection_profile(const ProjectionCoefficients& coeffs,
                                     const Eigen::VectorXd& eigenvalues,
                                     double rel_tol) {
  if (coeffs.c.size() != eigenvalues.size())
    throw BasisMismatchError("coefficient and eigenvalue counts differ");

  ProjectionProfile profile;
  for (const auto& [first, last] : cluster_eigenvalues(eigenvalues, rel_tol)) {
    double weight = 0.0, omega = 0.0;
    for (int k = first; k < last; ++k) {
      weight += std::norm(coeffs.c(k));
      omega += eigenvalues(k);
    }
    profile.entries.emplace_back(omega / (last - first), weight);
  }
  return profile;
}

CoefficientTable coefficient_table(const std::vector<TwoParticleState>& states,
                                   const CanonicalBasis& plus,
                                   const CanonicalBasis& minus) {
  const MirrorPairing pairing = mirror_pairing(plus, minus);
  const int dim = static_cast<int>(plus.labels.size());
  const int n_states = static_cast<int>(states.size());

  CoefficientTable table;
  table.labels = plus.labels;
  table.omega_plus = plus.eigenvalues;
  table.c_plus.resize(dim, n_states);
  table.c_minus.resize(dim, n_states);

  for (int s = 0; s < n_states; ++s) {
    if (states[s].basis.sites() != plus.config.N)
      throw BasisMismatchError("state and eigenbasis use different lattices");
    table.c_plus.col(s) = plus.vectors.transpose() * states[s].amplitudes;
    Eigen::VectorXcd on_minus =
        pairing.minus_vectors.transpose() * states[s].amplitudes;
    for (int k = 0; k < dim; ++k)
      table.c_minus(k, s) = on_minus(pairing.plus_to_minus[k]);
  }
  return table;
}

std::vector<DeltaPoint> delta_of_v(const TwoParticleState& state, double J,
                                   const std::vector<double>& v_values) {
  const int N = state.basis.sites();
  if (N % 2 != 0)
    throw SymmetryUndefinedError(
        "interaction-sign pairing of the spectrum needs an even ring");

  std::vector<DeltaPoint> out;
  out.reserve(v_values.size());
  for (double V : v_values) {
    const auto plus = diagonalize(build_hamiltonian({N, J, V}));
    const auto minus = diagonalize(build_hamiltonian({N, J, -V}));
    const auto prof_p =
        projection_profile(eigenprojections(state, plus), plus.eigenvalues);
    const auto prof_m =
        projection_profile(eigenprojections(state, minus), minus.eigenvalues);

    const size_t n_clusters = prof_p.entries.size();
    if (prof_m.entries.size() != n_clusters)
      throw NumericalFailureError(
          "spectra of opposite interaction sign cluster differently");
    const double scale =
        std::max(1.0, plus.eigenvalues.cwiseAbs().maxCoeff());

    double delta = 0.0;
    for (size_t c = 0; c < n_clusters; ++c) {
      const auto& [w_p, p_p] = prof_p.entries[c];
      const auto& [w_m, p_m] = prof_m.entries[n_clusters - 1 - c];
      if (std::abs(w_p + w_m) > 1e-6 * scale)
        throw NumericalFailureError(
            "cluster energies of opposite interaction sign do not mirror");
      const double diff = p_p - p_m;
      delta += diff * diff;
    }
    out.push_back({V, delta});
  }
  return out;
}

}  // namespace bhw
