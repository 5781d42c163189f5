#include "bhwalk/dynamics.hpp"

#include <cmath>
#include <vector>

#include "bhwalk/errors.hpp"
#include "bhwalk/kernels.hpp"

namespace bhw {

TwoParticleState evolve(const TwoParticleState& state,
                        const SpectralDecomposition& decomp, double tau) {
  if (state.basis != decomp.basis)
    throw BasisMismatchError("state and decomposition use different lattices");

  const int dim = state.basis.dim();
  const kernels::Ops& ops = kernels::active_ops();
  const double* q = decomp.eigenvectors.data();

  std::vector<double> a_re(dim), a_im(dim), c_re(dim), c_im(dim);
  std::vector<double> cosv(dim), sinv(dim), out_re(dim), out_im(dim);
  for (int k = 0; k < dim; ++k) {
    a_re[k] = state.amplitudes(k).real();
    a_im[k] = state.amplitudes(k).imag();
    const double theta = decomp.eigenvalues(k) * tau / decomp.config.J;
    cosv[k] = std::cos(theta);
    sinv[k] = std::sin(theta);
  }

  // c = Q^T a, c_k *= e^{-i theta_k}, a' = Q c
  ops.gemv_t(q, dim, dim, a_re.data(), c_re.data());
  ops.gemv_t(q, dim, dim, a_im.data(), c_im.data());
  ops.phase_apply(cosv.data(), sinv.data(), c_re.data(), c_im.data(), dim);
  ops.gemv_n(q, dim, dim, c_re.data(), out_re.data());
  ops.gemv_n(q, dim, dim, c_im.data(), out_im.data());

  TwoParticleState evolved{state.basis, Eigen::VectorXcd(dim)};
  for (int k = 0; k < dim; ++k)
    evolved.amplitudes(k) = std::complex<double>(out_re[k], out_im[k]);
  return evolved;
}

DensityProfile site_density(const TwoParticleState& state, double tau) {
  const int N = state.basis.sites();
  DensityProfile profile{Eigen::VectorXd::Zero(N), tau};
  const auto& entries = state.basis.entries();
  for (int k = 0; k < state.basis.dim(); ++k) {
    const double p = std::norm(state.amplitudes(k));
    profile.n(entries[k].first - 1) += p;
    profile.n(entries[k].second - 1) += p;
  }
  return profile;
}

CorrelationMap correlation_map(const TwoParticleState& state, double tau) {
  const int N = state.basis.sites();
  CorrelationMap map{Eigen::MatrixXd::Zero(N, N), tau};
  const auto& entries = state.basis.entries();
  for (int k = 0; k < state.basis.dim(); ++k) {
    const double p = std::norm(state.amplitudes(k));
    const int i = entries[k].first, j = entries[k].second;
    if (i == j) {
      map.gamma(i - 1, i - 1) = 2.0 * p;
    } else {
      map.gamma(i - 1, j - 1) = p;
      map.gamma(j - 1, i - 1) = p;
    }
  }
  return map;
}

CorrelationMap normalize_correlations(const CorrelationMap& map) {
  const double peak = map.gamma.maxCoeff();
  if (peak <= 0.0)
    throw DegenerateStateError("correlation map has no positive entries");
  return CorrelationMap{map.gamma / peak, map.tau};
}

}  // namespace bhw
