// Copyright 2026 The Orbent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "orbent/errors.hpp"

namespace orbent {

/// Electron-number / spin-projection metadata of an active space CAS(N,k).
struct ActiveSpace {
  int n_orbitals = 0;   ///< number of spatial orbitals k, 1..64
  int n_electrons = 0;  ///< number of electrons N, 0..2k
  int ms2 = 0;          ///< twice the spin projection, may be negative
  std::vector<int> orbital_irreps;  ///< optional, empty or length k

  int n_alpha() const noexcept { return (n_electrons + ms2) / 2; }
  int n_beta() const noexcept { return (n_electrons - ms2) / 2; }

  /// Throws ValidationError if any invariant is violated:
  /// 0 < k <= 64, 0 <= N <= 2k, |ms2| <= N, (N + ms2) even,
  /// irreps empty or of length k.
  void validate() const;
};

/// One- and two-electron integrals over an active space, plus the core
/// energy. Two-electron integrals are chemist-notation (pq|rs) with the
/// full 8-fold permutational symmetry: values are stored once per
/// canonical index quadruple and every symmetric image reads back the
/// same value. All indices are 0-based here; FCIDUMP I/O converts to the
/// format's 1-based convention.
class IntegralTable {
 public:
  explicit IntegralTable(ActiveSpace space);

  const ActiveSpace& space() const noexcept { return space_; }
  int n_orbitals() const noexcept { return space_.n_orbitals; }

  double core_energy() const noexcept { return core_energy_; }
  void set_core_energy(double value) noexcept { core_energy_ = value; }

  double h(int p, int q) const;
  void set_h(int p, int q, double value);

  double eri(int p, int q, int r, int s) const;
  void set_eri(int p, int q, int r, int s, double value);

  /// Number of orbital pairs k(k+1)/2; (pq|rs) storage is indexed by
  /// two pair indices.
  int n_pairs() const noexcept { return n_pairs_; }

  /// Packed pair index for p,q in 0..k-1 (order-insensitive).
  int pair_index(int p, int q) const noexcept {
    return p >= q ? p * (p + 1) / 2 + q : q * (q + 1) / 2 + p;
  }

  /// (pq|rs) by precomputed pair indices; hot path for the Hamiltonian.
  double eri_pair(int pq, int rs) const noexcept {
    return eri_[static_cast<std::size_t>(pq) * n_pairs_ + rs];
  }

 private:
  void check_index(int p) const;

  ActiveSpace space_;
  double core_energy_ = 0.0;
  int n_pairs_ = 0;
  std::vector<double> h_;    // k*k, both triangles kept in sync
  std::vector<double> eri_;  // n_pairs*n_pairs, symmetric
};

}  // namespace orbent
