#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bhwalk/state.hpp"

namespace bhw {

// Partition of the lattice sites into two blocks.
struct Bipartition {
  std::vector<int> A;  // sorted, 1-based
  std::vector<int> B;
  int N = 0;

  static Bipartition contiguous_half(int N);
  static Bipartition from_sites(const std::vector<int>& a_sites, int N);

  std::string id() const;  // compact form like "1..15" or "1,4,7"
};

// Component of the state with a fixed particle count in block A.
struct SectorProjection {
  int k = 0;           // particles in A
  double probability = 0.0;
  Eigen::VectorXcd sector_state;  // unnormalized slice of the amplitudes
};

std::array<SectorProjection, 3> project_sectors(const TwoParticleState& state,
                                                const Bipartition& part);

// One-particle reduced density matrix of block A inside the k = 1 sector,
// indexed by the sorted sites of A.
Eigen::MatrixXcd reduced_density(const SectorProjection& sector,
                                 const Bipartition& part,
                                 const SymmetrizedBasis& basis);

struct EntanglementRecord {
  double tau = 0.0;
  double E_P = 0.0;   // sector-weighted entanglement of particles
  double P11 = 0.0;   // weight of the one-particle-per-block sector
  std::string bipartition;
};

EntanglementRecord entanglement_of_particles(const TwoParticleState& state,
                                             const Bipartition& part,
                                             double tau = 0.0);

}  // namespace bhw
