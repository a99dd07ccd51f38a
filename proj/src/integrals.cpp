// Copyright 2026 The Orbent Authors
// SPDX-License-Identifier: Apache-2.0

#include "orbent/integrals.hpp"

#include <cstdlib>
#include <string>

namespace orbent {

void ActiveSpace::validate() const {
  if (n_orbitals <= 0 || n_orbitals > 64) {
    throw ValidationError("active space must have 1..64 orbitals, got " +
                          std::to_string(n_orbitals));
  }
  if (n_electrons < 0 || n_electrons > 2 * n_orbitals) {
    throw ValidationError("electron count " + std::to_string(n_electrons) +
                          " outside 0..2k for k=" + std::to_string(n_orbitals));
  }
  if (std::abs(ms2) > n_electrons) {
    throw ValidationError("|ms2| = " + std::to_string(std::abs(ms2)) +
                          " exceeds electron count " +
                          std::to_string(n_electrons));
  }
  if ((n_electrons + ms2) % 2 != 0) {
    throw ValidationError("N + ms2 must be even, got N=" +
                          std::to_string(n_electrons) +
                          ", ms2=" + std::to_string(ms2));
  }
  if (!orbital_irreps.empty() &&
      orbital_irreps.size() != static_cast<std::size_t>(n_orbitals)) {
    throw ValidationError("orbital_irreps length " +
                          std::to_string(orbital_irreps.size()) +
                          " does not match k=" + std::to_string(n_orbitals));
  }
}

IntegralTable::IntegralTable(ActiveSpace space) : space_(std::move(space)) {
  space_.validate();
  const int k = space_.n_orbitals;
  n_pairs_ = k * (k + 1) / 2;
  h_.assign(static_cast<std::size_t>(k) * k, 0.0);
  eri_.assign(static_cast<std::size_t>(n_pairs_) * n_pairs_, 0.0);
}

void IntegralTable::check_index(int p) const {
  if (p < 0 || p >= space_.n_orbitals) {
    throw ValidationError("orbital index " + std::to_string(p) +
                          " out of range 0.." +
                          std::to_string(space_.n_orbitals - 1));
  }
}

double IntegralTable::h(int p, int q) const {
  check_index(p);
  check_index(q);
  return h_[static_cast<std::size_t>(p) * space_.n_orbitals + q];
}

void IntegralTable::set_h(int p, int q, double value) {
  check_index(p);
  check_index(q);
  h_[static_cast<std::size_t>(p) * space_.n_orbitals + q] = value;
  h_[static_cast<std::size_t>(q) * space_.n_orbitals + p] = value;
}

double IntegralTable::eri(int p, int q, int r, int s) const {
  check_index(p);
  check_index(q);
  check_index(r);
  check_index(s);
  return eri_pair(pair_index(p, q), pair_index(r, s));
}

void IntegralTable::set_eri(int p, int q, int r, int s, double value) {
  check_index(p);
  check_index(q);
  check_index(r);
  check_index(s);
  const int pq = pair_index(p, q);
  const int rs = pair_index(r, s);
  eri_[static_cast<std::size_t>(pq) * n_pairs_ + rs] = value;
  eri_[static_cast<std::size_t>(rs) * n_pairs_ + pq] = value;
}

}  // namespace orbent
