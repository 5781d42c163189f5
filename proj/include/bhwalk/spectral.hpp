#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bhwalk/hamiltonian.hpp"

namespace bhw {

struct SpectralDecomposition {
  LatticeConfig config;
  SymmetrizedBasis basis;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // real orthonormal columns
};

SpectralDecomposition diagonalize(const HamiltonianMatrix& H);

// Half-open [first, last) index ranges of eigenvalues separated by gaps
// larger than rel_tol * max|omega|.
std::vector<std::pair<int, int>> cluster_eigenvalues(const Eigen::VectorXd& w,
                                                     double rel_tol = 1e-8);

enum class Band { miniband, main_subband };

struct BandPoint {
  int nu;        // K = 2 pi nu / N with nu in 1..N
  double K;
  double omega;  // representative cluster energy
  Band band;
};

// Simultaneous (H, T_1) eigenbasis: column i of states is a
// translation-sharp eigenstate labeled by points[i].
struct BandStructure {
  LatticeConfig config;
  std::vector<BandPoint> points;
  Eigen::MatrixXcd states;
  std::vector<std::string> warnings;  // degeneracy-resolution notes
};

BandStructure assign_quasimomenta(const SpectralDecomposition& decomp);

// phi(r), r = 0..N/2, from factoring e^{iKR} out of a translation-sharp
// eigenstate; normalized with ring multiplicity weights and phase-gauged
// so the largest-|phi| component is real positive.
struct RadialProfile {
  int nu;
  double K;  // the phase actually factored out, 2 pi (nu mod N) / N
  std::vector<std::complex<double>> values;
};

RadialProfile radial_wavefunction(const BandStructure& bands, int state_index);

// sqrt(sum_i (w_i^+ + w_i^-)^2) with Spec[H(V)] ascending against
// Spec[H(-V)] descending. Zero on even rings.
double spectrum_deviation(int N, double J, double V);

// Real eigenbasis resolved inside each energy cluster by |K| (nu paired
// with N-nu) and by reflection parity about site 1, each vector gauged so
// its largest-|entry| component is positive. Order: cluster ascending,
// nu_min ascending, parity +1 before -1.
struct CanonicalLabel {
  int cluster;
  double omega;
  int nu_min;  // min(nu, N-nu), nu in 0..N-1
  int parity;  // +1 / -1 under the ring reflection
};

struct CanonicalBasis {
  LatticeConfig config;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd vectors;
  std::vector<CanonicalLabel> labels;
};

CanonicalBasis canonical_eigenbasis(const SpectralDecomposition& decomp);

// Pairs canonical eigenvectors of H(V) with those of H(-V) by (opposite
// cluster energy, nu_min, parity). Even N only. Where a label group holds
// several states (accidental degeneracies), the minus-side group basis is
// rotated onto the boost-transported plus group (an equally valid
// eigenbasis, made deterministic by the pair); minus_vectors carries the
// aligned copy.
struct MirrorPairing {
  std::vector<int> plus_to_minus;
  Eigen::MatrixXd minus_vectors;
};

MirrorPairing mirror_pairing(const CanonicalBasis& plus,
                             const CanonicalBasis& minus);

}  // namespace bhw
