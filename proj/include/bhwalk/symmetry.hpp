#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bhwalk/basis.hpp"
#include "bhwalk/state.hpp"

namespace bhw {

struct SymmetryOperator {
  enum class Kind { translation, boost, time_reversal };
  Kind kind;
  int N;
  int shift = 0;  // translation only

  static SymmetryOperator translation(int N, int l) {
    return {Kind::translation, N, l};
  }
  static SymmetryOperator boost(int N) { return {Kind::boost, N, 0}; }
  static SymmetryOperator time_reversal(int N) {
    return {Kind::time_reversal, N, 0};
  }
};

// translation: |i,j> -> |i+l, j+l| on the ring (re-sorted);
// boost: amplitude of |i,j> gains (-1)^(i+j), even N only;
// time reversal: complex conjugation of all amplitudes.
TwoParticleState apply_symmetry(const SymmetryOperator& op,
                                const TwoParticleState& state);

// Permutation p with (T_l a)[p[k]] = a[k].
std::vector<int> translation_permutation(const SymmetrizedBasis& basis, int l);

// Diagonal of the boost operator, (-1)^(i+j). Throws on odd N where the
// per-site phase e^{-i pi j} is not single-valued around the ring.
Eigen::VectorXd boost_signs(const SymmetrizedBasis& basis);

}  // namespace bhw
