#include "bhwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "bhwalk/errors.hpp"
#include "bhwalk/symmetry.hpp"

namespace bhw {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using std::complex;

constexpr double kPi = std::numbers::pi;

MatrixXd permute_rows(const std::vector<int>& perm, const MatrixXd& M) {
  MatrixXd out(M.rows(), M.cols());
  for (int k = 0; k < M.rows(); ++k) out.row(perm[k]) = M.row(k);
  return out;
}

// Ring reflection about site 1: x -> N+2-x.
std::vector<int> reflection_permutation(const SymmetrizedBasis& basis) {
  const int N = basis.sites();
  auto mirror = [N](int x) { return (N + 1 - x) % N + 1; };
  std::vector<int> perm(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) {
    const auto [i, j] = basis.pair(k);
    const int mi = mirror(i), mj = mirror(j);
    perm[k] = basis.index(std::min(mi, mj), std::max(mi, mj));
  }
  return perm;
}

// Orthonormal translation-sharp states of one energy cluster, keyed by
// nu in 0..N-1 (T phi = e^{-i 2 pi nu / N} phi). C must hold orthonormal
// columns spanning the cluster.
std::map<int, MatrixXcd> resolve_cluster(const MatrixXd& C,
                                         const std::vector<int>& perm,
                                         int N, double cluster_omega,
                                         std::vector<std::string>* warnings) {
  const int dim = static_cast<int>(C.rows());
  const int m = static_cast<int>(C.cols());

  // momentum components A_nu = (1/N) sum_l e^{i 2 pi nu l / N} T^l C;
  // T^l C is real, so A_{N-nu} = conj(A_nu)
  const int half = N / 2;
  std::vector<MatrixXcd> comp(half + 1, MatrixXcd::Zero(dim, m));
  MatrixXd S = C;
  for (int l = 0; l < N; ++l) {
    for (int nu = 0; nu <= half; ++nu) {
      const double theta = 2.0 * kPi * nu * l / N;
      comp[nu].real() += (std::cos(theta) / N) * S;
      comp[nu].imag() += (std::sin(theta) / N) * S;
    }
    if (l + 1 < N) S = permute_rows(perm, S);
  }

  std::map<int, MatrixXcd> sharp;
  int taken = 0;
  for (int nu = 0; nu < N; ++nu) {
    const int base = (nu <= half) ? nu : N - nu;
    MatrixXcd A = (nu <= half) ? comp[base] : comp[base].conjugate();
    Eigen::JacobiSVD<MatrixXcd> svd(A, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int c = 0; c < sv.size(); ++c) {
      if (sv[c] > 0.5) ++rank;
      if (warnings && sv[c] > 0.05 && sv[c] < 0.95)
        warnings->push_back(
            "ambiguous momentum resolution in cluster at omega=" +
            std::to_string(cluster_omega) + " (singular value " +
            std::to_string(sv[c]) + ")");
    }
    if (rank > 0) {
      sharp[nu] = svd.matrixU().leftCols(rank);
      taken += rank;
    }
  }
  if (taken != m)
    throw NumericalFailureError(
        "momentum resolution recovered " + std::to_string(taken) +
        " states from a cluster of " + std::to_string(m) + " at omega=" +
        std::to_string(cluster_omega));
  return sharp;
}

void classify_bands(const LatticeConfig& config, const MatrixXcd& states,
                    const SymmetrizedBasis& basis,
                    std::vector<BandPoint>* points) {
  const int dim = static_cast<int>(points->size());
  const int N = config.N;
  if (std::abs(config.v()) >= 4.0) {
    // split bands: the N energies nearest V form the miniband
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::abs((*points)[a].omega - config.V) <
             std::abs((*points)[b].omega - config.V);
    });
    for (int r = 0; r < dim; ++r)
      (*points)[order[r]].band = (r < N) ? Band::miniband : Band::main_subband;
  } else {
    // entwined regime: fall back to the doublon weight of each state
    for (int c = 0; c < dim; ++c) {
      double w = 0.0;
      for (int site = 1; site <= N; ++site)
        w += std::norm(states(basis.index(site, site), c));
      (*points)[c].band = (w > 0.5) ? Band::miniband : Band::main_subband;
    }
  }
}

int max_abs_index(const Eigen::Ref<const VectorXd>& v) {
  int best = 0;
  for (int k = 1; k < v.size(); ++k)
    if (std::abs(v[k]) > std::abs(v[best])) best = k;
  return best;
}

void gauge_columns(Eigen::Ref<MatrixXd> M) {
  for (int c = 0; c < M.cols(); ++c)
    if (M(max_abs_index(M.col(c)), c) < 0.0) M.col(c) = -M.col(c);
}

}  // namespace

SpectralDecomposition diagonalize(const HamiltonianMatrix& H) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(H.elements);
  if (solver.info() != Eigen::Success)
    throw NumericalFailureError(
        "symmetric eigensolver failed to converge on dim=" +
        std::to_string(H.elements.rows()) + " (N=" +
        std::to_string(H.config.N) + ", V=" + std::to_string(H.config.V) + ")");
  return SpectralDecomposition{H.config, H.basis, solver.eigenvalues(),
                               solver.eigenvectors()};
}

std::vector<std::pair<int, int>> cluster_eigenvalues(const VectorXd& w,
                                                     double rel_tol) {
  const double scale = w.size() ? w.cwiseAbs().maxCoeff() : 0.0;
  const double tol = rel_tol * std::max(scale, 1e-300);
  std::vector<std::pair<int, int>> ranges;
  int start = 0;
  for (int i = 1; i <= w.size(); ++i) {
    if (i == w.size() || w[i] - w[i - 1] > tol) {
      ranges.emplace_back(start, i);
      start = i;
    }
  }
  return ranges;
}

BandStructure assign_quasimomenta(const SpectralDecomposition& decomp) {
  const int N = decomp.config.N;
  const int dim = decomp.basis.dim();
  const auto perm = translation_permutation(decomp.basis, 1);

  BandStructure out{decomp.config, {}, MatrixXcd(dim, dim), {}};
  out.points.reserve(dim);
  int col = 0;
  for (const auto& [a, b] : cluster_eigenvalues(decomp.eigenvalues)) {
    const double omega = decomp.eigenvalues.segment(a, b - a).mean();
    auto sharp = resolve_cluster(decomp.eigenvectors.middleCols(a, b - a),
                                 perm, N, omega, &out.warnings);
    for (const auto& [nu0, states] : sharp) {
      for (int c = 0; c < states.cols(); ++c) {
        const int nu = (nu0 == 0) ? N : nu0;
        out.states.col(col++) = states.col(c);
        out.points.push_back(
            {nu, 2.0 * kPi * nu / N, omega, Band::main_subband});
      }
    }
  }
  classify_bands(decomp.config, out.states, decomp.basis, &out.points);
  return out;
}

RadialProfile radial_wavefunction(const BandStructure& bands,
                                  int state_index) {
  const int N = bands.config.N;
  const SymmetrizedBasis basis(N);
  if (state_index < 0 || state_index >= static_cast<int>(bands.points.size()))
    throw Error("radial profile: state index out of range");
  const BandPoint& pt = bands.points[state_index];
  const double K = 2.0 * kPi * (pt.nu % N) / N;

  const int rmax = N / 2;
  std::vector<complex<double>> acc(rmax + 1, 0.0);
  std::vector<int> counts(rmax + 1, 0);
  for (int k = 0; k < basis.dim(); ++k) {
    const auto [i, j] = basis.pair(k);
    const int d = j - i;
    int r;
    double R;
    if (d <= N - d) {
      r = d;
      R = 0.5 * (i + j);
    } else {
      r = N - d;  // shorter way around the ring
      R = 0.5 * (i + j + N);
    }
    acc[r] += bands.states(k, state_index) * std::polar(1.0, -K * R);
    counts[r] += 1;
  }

  RadialProfile profile{pt.nu, K, {}};
  profile.values.resize(rmax + 1);
  double norm2 = 0.0;
  for (int r = 0; r <= rmax; ++r) {
    profile.values[r] = acc[r] / static_cast<double>(counts[r]);
    const double weight = (r == 0 || 2 * r == N) ? 1.0 : 2.0;
    norm2 += weight * std::norm(profile.values[r]);
  }
  if (norm2 < 1e-20)
    throw DegenerateStateError("radial profile is numerically zero");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& v : profile.values) v *= inv;

  int big = 0;
  for (int r = 1; r <= rmax; ++r)
    if (std::abs(profile.values[r]) > std::abs(profile.values[big])) big = r;
  const complex<double> phase =
      std::polar(1.0, -std::arg(profile.values[big]));
  for (auto& v : profile.values) v *= phase;
  return profile;
}

double spectrum_deviation(int N, double J, double V) {
  const auto plus = diagonalize(build_hamiltonian(LatticeConfig(N, J, V)));
  const auto minus = diagonalize(build_hamiltonian(LatticeConfig(N, J, -V)));
  double acc = 0.0;
  const int dim = static_cast<int>(plus.eigenvalues.size());
  for (int i = 0; i < dim; ++i) {
    const double s = plus.eigenvalues[i] + minus.eigenvalues[dim - 1 - i];
    acc += s * s;
  }
  return std::sqrt(acc);
}

CanonicalBasis canonical_eigenbasis(const SpectralDecomposition& decomp) {
  const int N = decomp.config.N;
  const int dim = decomp.basis.dim();
  const auto t_perm = translation_permutation(decomp.basis, 1);
  const auto r_perm = reflection_permutation(decomp.basis);

  CanonicalBasis out{decomp.config, VectorXd(dim), MatrixXd(dim, dim), {}};
  out.labels.reserve(dim);
  int col = 0;
  const auto clusters = cluster_eigenvalues(decomp.eigenvalues);
  for (int cid = 0; cid < static_cast<int>(clusters.size()); ++cid) {
    const auto [a, b] = clusters[cid];
    const double omega = decomp.eigenvalues.segment(a, b - a).mean();
    auto sharp = resolve_cluster(decomp.eigenvectors.middleCols(a, b - a),
                                 t_perm, N, omega, nullptr);

    // group nu with N-nu; reflection maps K -> -K so each group span is
    // reflection-invariant
    std::map<int, MatrixXd> spans;
    for (const auto& [nu0, states] : sharp) {
      const int nu_min = std::min(nu0, N - nu0);
      if (nu0 != nu_min) continue;  // conjugate partner, same real span
      const int m = static_cast<int>(states.cols());
      const bool self_paired = (nu0 == 0 || 2 * nu0 == N);
      const int group_size = self_paired ? m : 2 * m;
      // the real span of {phi, conj(phi)} is spanned by Re/Im columns,
      // whatever per-column phases the SVD produced
      MatrixXd stacked(dim, 2 * m);
      stacked.leftCols(m) = states.real();
      stacked.rightCols(m) = states.imag();
      Eigen::JacobiSVD<MatrixXd> svd(stacked, Eigen::ComputeThinU);
      if (svd.singularValues()[group_size - 1] < 1e-6)
        throw NumericalFailureError(
            "rank-deficient momentum group nu=" + std::to_string(nu0) +
            " in cluster at omega=" + std::to_string(omega));
      spans[nu_min] = svd.matrixU().leftCols(group_size);
    }

    for (const auto& [nu_min, span] : spans) {
      const int s = static_cast<int>(span.cols());
      MatrixXd reflected = permute_rows(r_perm, span);
      MatrixXd Rs = span.transpose() * reflected;
      Eigen::SelfAdjointEigenSolver<MatrixXd> solver(Rs);
      if ((solver.eigenvalues().cwiseAbs().array() - 1.0).abs().maxCoeff() >
          1e-8)
        throw NumericalFailureError(
            "reflection split failed in cluster at omega=" +
            std::to_string(omega));
      // ascending eigenvalues put parity -1 first; emit +1 first instead
      MatrixXd vecs = span * solver.eigenvectors();
      std::vector<int> order(s);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return solver.eigenvalues()[x] > solver.eigenvalues()[y];
      });
      for (int idx : order) {
        out.vectors.col(col) = vecs.col(idx);
        out.eigenvalues[col] = omega;
        out.labels.push_back(
            {cid, omega, nu_min, solver.eigenvalues()[idx] > 0.0 ? 1 : -1});
        ++col;
      }
    }
  }
  if (col != dim)
    throw NumericalFailureError("canonical basis is incomplete: " +
                                std::to_string(col) + " of " +
                                std::to_string(dim) + " states");
  gauge_columns(out.vectors);
  return out;
}

MirrorPairing mirror_pairing(const CanonicalBasis& plus,
                             const CanonicalBasis& minus) {
  const int N = plus.config.N;
  if (N % 2 != 0)
    throw SymmetryUndefinedError(
        "mirror pairing needs an even ring (boost undefined on N=" +
        std::to_string(N) + ")");
  if (minus.config.N != N)
    throw BasisMismatchError("mirror pairing across different lattices");
  const int dim = static_cast<int>(plus.labels.size());

  const int cp = plus.labels.back().cluster + 1;
  const int cm = minus.labels.back().cluster + 1;
  if (cp != cm)
    throw NumericalFailureError("mirrored spectra cluster counts differ");
  const double scale =
      std::max(plus.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);

  // canonical order sorts by (cluster, nu_min, parity), so equal-label
  // states sit in contiguous runs
  std::map<std::tuple<int, int, int>, std::vector<int>> plus_groups,
      minus_groups;
  for (int i = 0; i < dim; ++i) {
    const auto& l = plus.labels[i];
    plus_groups[{l.cluster, l.nu_min, l.parity}].push_back(i);
  }
  for (int i = 0; i < dim; ++i) {
    const auto& l = minus.labels[i];
    minus_groups[{cm - 1 - l.cluster, l.nu_min, l.parity}].push_back(i);
  }

  const SymmetrizedBasis basis(N);
  const VectorXd bsign = boost_signs(basis);

  MirrorPairing out{std::vector<int>(dim, -1), minus.vectors};
  for (const auto& [key, pidx] : plus_groups) {
    auto it = minus_groups.find(key);
    if (it == minus_groups.end() || it->second.size() != pidx.size())
      throw NumericalFailureError(
          "mirror pairing: momentum/parity labels do not match between the "
          "two spectra");
    const auto& midx = it->second;
    if (std::abs(plus.labels[pidx[0]].omega + minus.labels[midx[0]].omega) >
        1e-6 * scale)
      throw NumericalFailureError(
          "mirror pairing: cluster energies are not opposite");
    const int g = static_cast<int>(pidx.size());
    if (g == 1) {
      out.plus_to_minus[pidx[0]] = midx[0];
      continue;
    }
    // residual degeneracy: rotate the minus group onto the
    // boost-transported plus group (orthogonal Procrustes)
    MatrixXd target(plus.vectors.rows(), g), M(plus.vectors.rows(), g);
    for (int c = 0; c < g; ++c) {
      target.col(c) = bsign.cwiseProduct(plus.vectors.col(pidx[c]));
      M.col(c) = minus.vectors.col(midx[c]);
    }
    Eigen::JacobiSVD<MatrixXd> svd(M.transpose() * target,
                                   Eigen::ComputeFullU | Eigen::ComputeFullV);
    MatrixXd aligned = M * (svd.matrixU() * svd.matrixV().transpose());
    gauge_columns(aligned);
    for (int c = 0; c < g; ++c) {
      out.minus_vectors.col(midx[c]) = aligned.col(c);
      out.plus_to_minus[pidx[c]] = midx[c];
    }
  }
  return out;
}

}  // namespace bhw
