#include "bhwalk/state.hpp"

#include <algorithm>
#include <cmath>

#include "bhwalk/errors.hpp"

namespace bhw {

TwoParticleState prepare_state(const StateSpec& spec) {
  if (spec.terms.empty()) throw DegenerateStateError("state spec has no terms");
  SymmetrizedBasis basis(spec.N);
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(basis.dim());
  for (const auto& t : spec.terms) {
    const int i = std::min(t.i, t.j);
    const int j = std::max(t.i, t.j);
    if (i < 1 || j > spec.N)
      throw InvalidLatticeError("state term site out of range: (" +
                                std::to_string(t.i) + "," + std::to_string(t.j) +
                                ") on N=" + std::to_string(spec.N));
    a[basis.index(i, j)] += t.amplitude;
  }
  const double norm = a.norm();
  if (norm < 1e-14)
    throw DegenerateStateError("state amplitudes cancel to the zero vector");
  a /= norm;
  return TwoParticleState{std::move(basis), std::move(a)};
}

StateSpec preset_state(const std::string& name, int N) {
  if (N < 17)
    throw InvalidLatticeError("presets place walkers on sites 14..17; need N >= 17");
  if (name == "psi1") return {N, {{15, 17, 1.0}}};
  if (name == "psi2") return {N, {{14, 16, 1.0}}};
  if (name == "psi3") return {N, {{14, 17, 1.0}}};
  if (name == "psi4") return {N, {{14, 16, 1.0}, {15, 17, 1.0}}};
  if (name == "psi5") return {N, {{14, 16, 1.0}, {14, 17, 1.0}}};
  if (name == "psi6") return {N, {{14, 14, 1.0}, {14, 17, 1.0}}};
  throw Error("unknown preset state: " + name);
}

bool is_preset_name(const std::string& name) {
  return name.size() == 4 && name.compare(0, 3, "psi") == 0 &&
         name[3] >= '1' && name[3] <= '6';
}

}  // namespace bhw
