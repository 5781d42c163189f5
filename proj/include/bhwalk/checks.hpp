#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bhwalk/hamiltonian.hpp"
#include "bhwalk/state.hpp"

namespace bhw {

struct ObservableMatrix {
  Eigen::MatrixXcd matrix;
  std::string label;
};

// Validates hermiticity before wrapping.
ObservableMatrix make_observable(Eigen::MatrixXcd matrix, std::string label);

// n_site as a matrix on the symmetrized basis (diagonal, entries 0/1/2).
ObservableMatrix density_observable(const SymmetrizedBasis& basis, int site);

// |i,j><i,j| for one symmetrized pair.
ObservableMatrix pair_projector(const SymmetrizedBasis& basis, int i, int j);

double expectation(const ObservableMatrix& O, const TwoParticleState& state);

struct BoostRelationReport {
  int N;
  double J;
  double V;
  double max_deviation;  // ||B H(J,V) B + H(J,-V)||_max
  bool pass;
};

BoostRelationReport check_boost_relation(const LatticeConfig& config);

// Compares <O(tau)> under H(V) against H(-V) from the same initial state.
// The half relation <O(tau)>_+ on psi = <(BOB)(-tau)>_- on B psi holds for
// any state and observable; the direct equality additionally needs a real
// boost eigenstate and a real boost-invariant observable.
struct InvarianceReport {
  std::string observable;
  bool boost_eigenstate = false;
  int boost_parity = 0;  // +1 / -1, 0 if not an eigenstate
  bool time_reversal_invariant = false;
  bool observable_boost_invariant = false;
  bool observable_time_reversal_even = false;
  bool full_invariance_expected = false;
  std::vector<double> taus;
  std::vector<double> expect_plus;   // <O(tau)> under H(V)
  std::vector<double> expect_minus;  // <O(tau)> under H(-V)
  double direct_deviation = 0.0;     // max_tau |plus - minus|
  double half_relation_deviation = 0.0;
  bool pass = false;
};

InvarianceReport check_invariance_theorem(const TwoParticleState& state,
                                          const ObservableMatrix& O,
                                          const LatticeConfig& config,
                                          const std::vector<double>& taus);

}  // namespace bhw
