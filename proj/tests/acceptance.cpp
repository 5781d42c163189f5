// Acceptance gate: every release-blocking property on one screen.
// Each criterion prints exactly one PASS/FAIL line; exit is nonzero if
// any fail. Numeric floors marked "calibrated" were measured once with
// the independent oracles and frozen here.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "bhwalk/checks.hpp"
#include "bhwalk/dynamics.hpp"
#include "bhwalk/entanglement.hpp"
#include "bhwalk/projections.hpp"
#include "bhwalk/spectral.hpp"
#include "oracles.hpp"

using namespace bhw;

namespace {

int failures = 0;

void verdict(int id, const char* label, bool ok) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, label);
  if (!ok) ++failures;
}

TwoParticleState random_real_state(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  StateSpec spec{n, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) spec.terms.push_back({i, j, {gauss(rng), 0.0}});
  return prepare_state(spec);
}

std::vector<double> grid(int steps, double tau_max) {
  std::vector<double> taus(steps);
  for (int k = 0; k < steps; ++k) taus[k] = tau_max * k / (steps - 1);
  return taus;
}

struct SweepStats {
  double gamma_diff = 0.0;  // max over tau of max_ij |G+ - G-|
  double ep_diff = 0.0;     // max over tau of |E_P+ - E_P-|
  double ep_peak_plus = 0.0;
  double ep_peak_minus = 0.0;
};

SweepStats sweep_signs(const TwoParticleState& state,
                       const SpectralDecomposition& plus,
                       const SpectralDecomposition& minus,
                       const std::vector<double>& taus) {
  const auto part = Bipartition::contiguous_half(state.basis.sites());
  SweepStats stats;
  for (double tau : taus) {
    const auto ep = evolve(state, plus, tau);
    const auto em = evolve(state, minus, tau);
    const auto gp = normalize_correlations(correlation_map(ep, tau));
    const auto gm = normalize_correlations(correlation_map(em, tau));
    const double e_plus = entanglement_of_particles(ep, part, tau).E_P;
    const double e_minus = entanglement_of_particles(em, part, tau).E_P;
    stats.gamma_diff =
        std::max(stats.gamma_diff, (gp.gamma - gm.gamma).cwiseAbs().maxCoeff());
    stats.ep_diff = std::max(stats.ep_diff, std::abs(e_plus - e_minus));
    stats.ep_peak_plus = std::max(stats.ep_peak_plus, e_plus);
    stats.ep_peak_minus = std::max(stats.ep_peak_minus, e_minus);
  }
  return stats;
}

int sign_of(double x) { return x > 0 ? 1 : -1; }

}  // namespace

int main() {
  const double J = 1.0;

  // shared heavy pieces: the 30-site ring at V = +-8
  const auto decomp30p = diagonalize(build_hamiltonian({30, J, 8.0}));
  const auto decomp30m = diagonalize(build_hamiltonian({30, J, -8.0}));

  {  // 1: spectra of V and -V mirror through zero on even rings
    double worst = 0.0;
    for (int n : {4, 6, 10, 30}) {
      const Eigen::VectorXd wp =
          n == 30 ? decomp30p.eigenvalues
                  : diagonalize(build_hamiltonian({n, J, 8.0})).eigenvalues;
      const Eigen::VectorXd wm =
          n == 30 ? decomp30m.eigenvalues
                  : diagonalize(build_hamiltonian({n, J, -8.0})).eigenvalues;
      for (int k = 0; k < wp.size(); ++k)
        worst = std::max(worst,
                         std::abs(wp(k) + wm(wm.size() - 1 - k)));
    }
    verdict(1, "spectral mirror across the interaction sign", worst < 1e-9);
  }

  {  // 2: mirror deviation vanishes on even rings, decays on odd ones
    bool ok = true;
    for (int n = 4; n <= 30; n += 2)
      ok = ok && spectrum_deviation(n, J, 8.0) <= 1e-8;
    double prev = 1e300;
    for (int n : {5, 7, 9, 11}) {
      const double d = spectrum_deviation(n, J, 8.0);
      ok = ok && d > 0.0 && d < prev;
      prev = d;
    }
    verdict(2, "spectrum deviation parity in the ring size", ok);
  }

  {  // 3: 30 bound states near V, 435 scattering states within +-4.2
    bool ok = true;
    for (double sign : {1.0, -1.0}) {
      const auto& w = sign > 0 ? decomp30p.eigenvalues : decomp30m.eigenvalues;
      int near_v = 0, central = 0;
      for (int k = 0; k < w.size(); ++k) {
        if (std::abs(w(k) - sign * 8.0) <= 1.0) ++near_v;
        if (std::abs(w(k)) <= 4.2) ++central;
      }
      ok = ok && near_v == 30 && central == 435;
    }
    verdict(3, "miniband and main-band census", ok);
  }

  {  // 4: spectral propagator against the series-expansion oracle
    double worst = 0.0;
    for (int n : {4, 10}) {
      const auto h = build_hamiltonian({n, J, 8.0});
      const auto decomp = diagonalize(h);
      const auto state = random_real_state(n, 2024u + n);
      for (double tau : {0.5, 1.0, 2.0}) {
        const Eigen::VectorXcd want =
            testing::series_propagator(h.elements, J, tau) * state.amplitudes;
        const auto got = evolve(state, decomp, tau);
        worst =
            std::max(worst, (got.amplitudes - want).cwiseAbs().maxCoeff());
      }
    }
    verdict(4, "propagator matches series-expansion oracle", worst < 1e-8);
  }

  const auto taus201 = grid(201, 4.0);
  const auto taus41 = grid(41, 4.0);

  {  // 5: symmetric packets cannot tell V from -V
    double worst = 0.0;
    for (const char* name : {"psi1", "psi2", "psi3", "psi4"}) {
      const auto state = prepare_state(preset_state(name, 30));
      const auto stats = sweep_signs(state, decomp30p, decomp30m, taus201);
      worst = std::max({worst, stats.gamma_diff, stats.ep_diff});
    }
    verdict(5, "symmetric packets are sign-blind", worst < 1e-8);
  }

  {  // 6: the mixed-parity packet does tell them apart
    const auto state = prepare_state(preset_state("psi5", 30));
    const auto stats = sweep_signs(state, decomp30p, decomp30m, taus41);
    // calibrated: 0.8433 and 0.01727 on this grid
    verdict(6, "asymmetric packet discriminates the sign",
            stats.gamma_diff > 0.4 && stats.ep_diff > 8e-3);
  }

  {  // 7: doublon-seeded packet splits hardest at weak interaction
    const auto state = prepare_state(preset_state("psi6", 30));
    SweepStats weak, strong;
    {
      const auto p = diagonalize(build_hamiltonian({30, J, 2.0}));
      const auto m = diagonalize(build_hamiltonian({30, J, -2.0}));
      weak = sweep_signs(state, p, m, taus41);
    }
    {
      const auto p = diagonalize(build_hamiltonian({30, J, 20.0}));
      const auto m = diagonalize(build_hamiltonian({30, J, -20.0}));
      strong = sweep_signs(state, p, m, taus41);
    }
    const double ratio =
        std::max(weak.ep_peak_plus, weak.ep_peak_minus) /
        std::min(weak.ep_peak_plus, weak.ep_peak_minus);
    // calibrated: ratio 2.42, peak differences 0.0994 vs 0.0232
    verdict(7, "doublon-seeded packet enhancement at weak interaction",
            ratio >= 1.5 && weak.ep_diff > strong.ep_diff);
  }

  {  // 8: paired eigenbasis coefficients on the 4-site ring
    const auto plus = canonical_eigenbasis(diagonalize(build_hamiltonian({4, J, 8.0})));
    const auto minus =
        canonical_eigenbasis(diagonalize(build_hamiltonian({4, J, -8.0})));
    std::vector<TwoParticleState> states;
    for (int j = 1; j <= 4; ++j)
      states.push_back(prepare_state({4, {{1, j, {1.0, 0.0}}}}));
    const auto table = coefficient_table(states, plus, minus);

    bool ok = table.c_plus.imag().cwiseAbs().maxCoeff() < 1e-12 &&
              table.c_minus.imag().cwiseAbs().maxCoeff() < 1e-12;

    // boost eigenstates keep their coefficient moduli across the sign flip
    for (int s = 0; s < 4; ++s)
      for (int k = 0; k < 10; ++k)
        ok = ok && std::abs(std::abs(table.c_plus(k, s)) -
                            std::abs(table.c_minus(k, s))) < 1e-8;

    // relative sign rule, stated gauge-free: within one eigenbasis row,
    // the product over a state pair must keep its sign for the even
    // boost-parity pair (1,1)x(1,3) and flip it against (1,2) and (1,4)
    int checked_same = 0, checked_flip = 0;
    auto products = [&](int sa, int sb, int k, double& pp, double& mm) {
      pp = table.c_plus(k, sa).real() * table.c_plus(k, sb).real();
      mm = table.c_minus(k, sa).real() * table.c_minus(k, sb).real();
      return std::abs(pp) > 1e-10 && std::abs(mm) > 1e-10;
    };
    for (int k = 0; k < 10; ++k) {
      double pp, mm;
      if (products(0, 2, k, pp, mm)) {  // |1,1> with |1,3>: same sign
        ok = ok && sign_of(pp) == sign_of(mm) && std::abs(pp - mm) < 1e-8;
        ++checked_same;
      }
      for (int flip : {1, 3}) {  // |1,2> and |1,4>: flipped sign
        if (products(0, flip, k, pp, mm)) {
          ok = ok && sign_of(pp) == -sign_of(mm) && std::abs(pp + mm) < 1e-8;
          ++checked_flip;
        }
      }
    }
    ok = ok && checked_same >= 3 && checked_flip >= 6;

    // reflection partners |1,2> and |1,4> have identical moduli
    for (int k = 0; k < 10; ++k) {
      ok = ok && std::abs(std::abs(table.c_plus(k, 1)) -
                          std::abs(table.c_plus(k, 3))) < 1e-8;
      ok = ok && std::abs(std::abs(table.c_minus(k, 1)) -
                          std::abs(table.c_minus(k, 3))) < 1e-8;
    }
    verdict(8, "projection sign pattern under mirror pairing", ok);
  }

  {  // 9: projection-distance trends over the interaction strength
    const std::vector<double> vs = {2.0, 4.0, 8.0, 12.0, 16.0, 20.0};
    bool ok = true;

    const auto number = prepare_state({30, {{15, 15, {1.0, 0.0}}}});
    for (const auto& point : delta_of_v(number, J, vs))
      ok = ok && point.delta < 1e-10;

    const auto psi6 = prepare_state(preset_state("psi6", 30));
    const auto d6 = delta_of_v(psi6, J, vs);
    ok = ok && d6.back().delta < 0.1 * d6.front().delta;

    const auto psi5 = prepare_state(preset_state("psi5", 30));
    double lo = 1e300, hi = 0.0;
    for (const auto& point : delta_of_v(psi5, J, vs)) {
      lo = std::min(lo, point.delta);
      hi = std::max(hi, point.delta);
    }
    ok = ok && hi / lo - 1.0 < 0.5;
    verdict(9, "projection-distance trends over interaction strength", ok);
  }

  {  // 10: boost relation plus the full invariance statement
    bool ok = true;
    for (int n : {4, 6, 10, 30})
      ok = ok && check_boost_relation({n, J, 8.0}).max_deviation < 1e-10;

    // symmetric packet: every site density and every pair projector is
    // blind to the sign (vector form covers all of them at once)
    const auto psi4 = prepare_state(preset_state("psi4", 30));
    for (double tau : taus41) {
      const auto ep = evolve(psi4, decomp30p, tau);
      const auto em = evolve(psi4, decomp30m, tau);
      const Eigen::VectorXd pp = ep.amplitudes.cwiseAbs2();
      const Eigen::VectorXd pm = em.amplitudes.cwiseAbs2();
      ok = ok && (pp - pm).cwiseAbs().maxCoeff() < 1e-8;
      ok = ok && (site_density(ep).n - site_density(em).n)
                         .cwiseAbs()
                         .maxCoeff() < 1e-8;
    }

    // complex packet: correlations mirror across the anti-diagonal and
    // the particle entanglement is sign-independent
    const auto mixed = prepare_state(
        {30, {{14, 16, {1.0, 0.0}}, {15, 17, {0.0, 1.0}}}});
    const auto part = Bipartition::contiguous_half(30);
    double mirror_dev = 0.0, ep_dev = 0.0;
    for (double tau : taus41) {
      const auto ep = evolve(mixed, decomp30p, tau);
      const auto em = evolve(mixed, decomp30m, tau);
      const auto gp = normalize_correlations(correlation_map(ep, tau)).gamma;
      const auto gm = normalize_correlations(correlation_map(em, tau)).gamma;
      for (int i = 0; i < 30; ++i)
        for (int j = 0; j < 30; ++j)
          mirror_dev = std::max(
              mirror_dev, std::abs(gp(i, j) - gm(30 - j - 1, 30 - i - 1)));
      ep_dev = std::max(
          ep_dev, std::abs(entanglement_of_particles(ep, part, tau).E_P -
                           entanglement_of_particles(em, part, tau).E_P));
    }
    ok = ok && mirror_dev < 1e-8 && ep_dev < 1e-8;
    verdict(10, "boost relation and invariance theorem", ok);
  }

  if (failures)
    std::printf("%d criterion(s) failed\n", failures);
  else
    std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
