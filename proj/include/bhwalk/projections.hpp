#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "bhwalk/spectral.hpp"
#include "bhwalk/state.hpp"

namespace bhw {

// Coefficients of a state in a real eigenbasis, c = Q^T a.
struct ProjectionCoefficients {
  Eigen::VectorXcd c;
  bool real = false;  // true when max |Im c| < 1e-10
};

ProjectionCoefficients eigenprojections(const TwoParticleState& state,
                                        const SpectralDecomposition& decomp);
ProjectionCoefficients eigenprojections(const TwoParticleState& state,
                                        const CanonicalBasis& canon);

// |c|^2 summed over each energy cluster.
struct ProjectionProfile {
  std::vector<std::pair<double, double>> entries;  // (omega, P)
};

ProjectionProfile projection_profile(const ProjectionCoefficients& coeffs,
                                     const Eigen::VectorXd& eigenvalues,
                                     double rel_tol = 1e-8);

// Overlap of each input state with the canonical eigenbasis of H(V) and,
// row by row, with the mirror-paired eigenbasis of H(-V).
struct CoefficientTable {
  std::vector<CanonicalLabel> labels;  // labels of the H(V) basis, row order
  Eigen::VectorXd omega_plus;
  Eigen::MatrixXcd c_plus;   // dim x n_states
  Eigen::MatrixXcd c_minus;  // same layout, mirror-paired rows
};

CoefficientTable coefficient_table(const std::vector<TwoParticleState>& states,
                                   const CanonicalBasis& plus,
                                   const CanonicalBasis& minus);

// Distance between the cluster-resolved projection profiles of a state on
// the spectra of H(V) and H(-V), paired in opposite energy order.
struct DeltaPoint {
  double V;
  double delta;
};

std::vector<DeltaPoint> delta_of_v(const TwoParticleState& state, double J,
                                   const std::vector<double>& v_values);

}  // namespace bhw
