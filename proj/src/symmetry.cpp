#include "bhwalk/symmetry.hpp"

#include <algorithm>
#include <string>

#include "bhwalk/errors.hpp"

namespace bhw {

std::vector<int> translation_permutation(const SymmetrizedBasis& basis, int l) {
  const int N = basis.sites();
  const int shift = ((l % N) + N) % N;
  std::vector<int> perm(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) {
    const auto [i, j] = basis.pair(k);
    const int ti = (i - 1 + shift) % N + 1;
    const int tj = (j - 1 + shift) % N + 1;
    perm[k] = basis.index(std::min(ti, tj), std::max(ti, tj));
  }
  return perm;
}

Eigen::VectorXd boost_signs(const SymmetrizedBasis& basis) {
  if (basis.sites() % 2 != 0)
    throw SymmetryUndefinedError(
        "boost is undefined on odd rings (N=" + std::to_string(basis.sites()) +
        "): the phase e^{-i pi j} is not single-valued");
  Eigen::VectorXd s(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) {
    const auto [i, j] = basis.pair(k);
    s[k] = ((i + j) % 2 == 0) ? 1.0 : -1.0;
  }
  return s;
}

TwoParticleState apply_symmetry(const SymmetryOperator& op,
                                const TwoParticleState& state) {
  if (op.N != state.basis.sites())
    throw BasisMismatchError("symmetry operator is for N=" +
                             std::to_string(op.N) + ", state has N=" +
                             std::to_string(state.basis.sites()));
  TwoParticleState out{state.basis, state.amplitudes};
  switch (op.kind) {
    case SymmetryOperator::Kind::translation: {
      const auto perm = translation_permutation(state.basis, op.shift);
      for (int k = 0; k < state.basis.dim(); ++k)
        out.amplitudes[perm[k]] = state.amplitudes[k];
      break;
    }
    case SymmetryOperator::Kind::boost: {
      const Eigen::VectorXd s = boost_signs(state.basis);
      out.amplitudes = state.amplitudes.cwiseProduct(s.cast<std::complex<double>>());
      break;
    }
    case SymmetryOperator::Kind::time_reversal:
      out.amplitudes = state.amplitudes.conjugate();
      break;
  }
  return out;
}

}  // namespace bhw
