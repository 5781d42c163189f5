#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bhwalk/basis.hpp"

namespace bhw {

struct StateTerm {
  int i;
  int j;
  std::complex<double> amplitude;
};

struct StateSpec {
  int N;
  std::vector<StateTerm> terms;
};

struct TwoParticleState {
  SymmetrizedBasis basis;
  Eigen::VectorXcd amplitudes;  // unit norm
};

// Accumulates the terms on the symmetrized basis (pairs sorted so (3,1)
// lands on |1,3>_s), then normalizes the whole vector.
TwoParticleState prepare_state(const StateSpec& spec);

// Named two-walker presets psi1..psi6, packets around sites 14..17
// (callers need N >= 17):
//   psi1 = |15,17>   psi2 = |14,16>   psi3 = |14,17>
//   psi4 = |14,16> + |15,17>   psi5 = |14,16> + |14,17>
//   psi6 = |14,14> + |14,17>
StateSpec preset_state(const std::string& name, int N);

bool is_preset_name(const std::string& name);

}  // namespace bhw
