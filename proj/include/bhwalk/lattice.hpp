#pragma once

#include <string>

#include "bhwalk/errors.hpp"

namespace bhw {

// Ring of N sites with hopping amplitude J > 0 and signed on-site
// interaction V. Site labels are 1-based with periodic wrap N+1 == 1.
struct LatticeConfig {
  int N;
  double J;
  double V;

  LatticeConfig(int n_sites, double hopping, double interaction)
      : N(n_sites), J(hopping), V(interaction) {
    if (N < 3)
      throw InvalidLatticeError("lattice needs at least 3 sites, got " +
                                std::to_string(N));
    if (!(J > 0.0))
      throw InvalidLatticeError("hopping amplitude must be positive");
  }

  // interaction in units of the hopping
  double v() const { return V / J; }

  LatticeConfig flipped() const { return LatticeConfig(N, J, -V); }
};

}  // namespace bhw
