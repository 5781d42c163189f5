#pragma once

#include <Eigen/Dense>

#include "bhwalk/spectral.hpp"
#include "bhwalk/state.hpp"

namespace bhw {

// a(tau) = Q diag(e^{-i w_k tau / J}) Q^T a(0); tau is dimensionless time
// |J| t and may be negative.
TwoParticleState evolve(const TwoParticleState& state,
                        const SpectralDecomposition& decomp, double tau);

struct DensityProfile {
  Eigen::VectorXd n;  // particles per site; sums to 2
  double tau;
};

DensityProfile site_density(const TwoParticleState& state, double tau = 0.0);

struct CorrelationMap {
  Eigen::MatrixXd gamma;  // symmetric, sums to 2
  double tau;
};

CorrelationMap correlation_map(const TwoParticleState& state, double tau = 0.0);

// Gamma divided by its maximum entry.
CorrelationMap normalize_correlations(const CorrelationMap& map);

}  // namespace bhw
