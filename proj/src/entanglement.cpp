#include "bhwalk/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "bhwalk/errors.hpp"

namespace bhw {

Bipartition Bipartition::contiguous_half(int N) {
  std::vector<int> a(N / 2);
  for (int i = 0; i < N / 2; ++i) a[i] = i + 1;
  return from_sites(a, N);
}

Bipartition Bipartition::from_sites(const std::vector<int>& a_sites, int N) {
  if (N < 3) throw InvalidLatticeError("bipartition needs at least 3 sites");
  std::vector<int> a = a_sites;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.size() != a_sites.size())
    throw InvalidLatticeError("bipartition lists a site twice");
  if (a.empty() || static_cast<int>(a.size()) >= N)
    throw InvalidLatticeError("each block of the bipartition must be nonempty");
  if (a.front() < 1 || a.back() > N)
    throw InvalidLatticeError("bipartition site outside the lattice");

  Bipartition part;
  part.N = N;
  part.A = std::move(a);
  for (int s = 1; s <= N; ++s)
    if (!std::binary_search(part.A.begin(), part.A.end(), s))
      part.B.push_back(s);
  return part;
}

std::string Bipartition::id() const {
  bool contiguous = true;
  for (size_t i = 1; i < A.size(); ++i)
    if (A[i] != A[i - 1] + 1) contiguous = false;
  if (contiguous && A.size() > 1)
    return std::to_string(A.front()) + ".." + std::to_string(A.back());
  std::string out;
  for (size_t i = 0; i < A.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(A[i]);
  }
  return out;
}

std::array<SectorProjection, 3> project_sectors(const TwoParticleState& state,
                                                const Bipartition& part) {
  if (state.basis.sites() != part.N)
    throw BasisMismatchError("bipartition and state use different lattices");

  const int dim = state.basis.dim();
  std::array<SectorProjection, 3> sectors;
  for (int k = 0; k < 3; ++k) {
    sectors[k].k = k;
    sectors[k].sector_state = Eigen::VectorXcd::Zero(dim);
  }

  const auto& entries = state.basis.entries();
  for (int idx = 0; idx < dim; ++idx) {
    const int in_a =
        static_cast<int>(std::binary_search(part.A.begin(), part.A.end(),
                                            entries[idx].first)) +
        static_cast<int>(std::binary_search(part.A.begin(), part.A.end(),
                                            entries[idx].second));
    sectors[in_a].probability += std::norm(state.amplitudes(idx));
    sectors[in_a].sector_state(idx) = state.amplitudes(idx);
  }
  return sectors;
}

Eigen::MatrixXcd reduced_density(const SectorProjection& sector,
                                 const Bipartition& part,
                                 const SymmetrizedBasis& basis) {
  if (sector.k != 1)
    throw EmptySectorError("reduced density is defined for the split sector");
  if (sector.probability < 1e-14)
    throw EmptySectorError("split sector carries no weight");

  const int da = static_cast<int>(part.A.size());
  const int db = static_cast<int>(part.B.size());

  // psi(alpha, beta) is the amplitude of one particle on site alpha of A and
  // the other on site beta of B; the symmetrized amplitude covers both
  // orderings, so rho_A = psi psi^H already carries the full sector weight.
  Eigen::MatrixXcd psi(da, db);
  const double scale = 1.0 / std::sqrt(sector.probability);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b) {
      const int i = std::min(part.A[a], part.B[b]);
      const int j = std::max(part.A[a], part.B[b]);
      psi(a, b) = sector.sector_state(basis.index(i, j)) * scale;
    }
  return psi * psi.adjoint();
}

EntanglementRecord entanglement_of_particles(const TwoParticleState& state,
                                             const Bipartition& part,
                                             double tau) {
  const auto sectors = project_sectors(state, part);
  EntanglementRecord rec{tau, 0.0, sectors[1].probability, part.id()};
  if (rec.P11 < 1e-14) return rec;

  const Eigen::MatrixXcd rho = reduced_density(sectors[1], part, state.basis);
  const double purity = rho.squaredNorm();
  const double d = static_cast<double>(part.A.size());
  if (d < 2.0) return rec;
  const double entanglement = std::max(0.0, d / (d - 1.0) * (1.0 - purity));
  rec.E_P = rec.P11 * entanglement;
  return rec;
}

}  // namespace bhw
