// Copyright 2026 The Orbent Authors
// SPDX-License-Identifier: Apache-2.0

#include "orbent/determinants.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace orbent {
namespace {

// Mask with bits [0, n) set; n may be 0 or 64.
std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// All n-subsets of k bits in ascending bit-pattern order.
std::vector<std::uint64_t> enumerate_strings(int k, int n) {
  std::vector<std::uint64_t> out;
  if (n == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t v = low_mask(n);
  const std::uint64_t limit = low_mask(k);
  while (v <= limit) {
    out.push_back(v);
    if (v == (limit & ~low_mask(k - n))) break;  // highest pattern reached
    // Gosper's hack: next bit pattern with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;  // exact: product of i consecutive ints
  }
  return result;
}

}  // namespace

SectorBasis SectorBasis::enumerate(const ActiveSpace& space,
                                   std::size_t dimension_cap) {
  space.validate();
  const int k = space.n_orbitals;
  const int na = space.n_alpha();
  const int nb = space.n_beta();
  if (na > k || nb > k) {
    throw ValidationError("sector (N=" + std::to_string(space.n_electrons) +
                          ", ms2=" + std::to_string(space.ms2) +
                          ") needs more than k=" + std::to_string(k) +
                          " orbitals per spin");
  }
  const unsigned __int128 dim =
      static_cast<unsigned __int128>(binomial(k, na)) * binomial(k, nb);
  if (dim > dimension_cap) {
    throw CapacityError("sector dimension exceeds cap " +
                        std::to_string(dimension_cap));
  }
  SectorBasis basis;
  basis.space_ = space;
  basis.alpha_strings_ = enumerate_strings(k, na);
  basis.beta_strings_ = enumerate_strings(k, nb);
  return basis;
}

Determinant SectorBasis::determinant(std::size_t address) const {
  const std::size_t nb = beta_strings_.size();
  if (address >= dimension()) {
    throw LogicError("determinant address " + std::to_string(address) +
                     " out of range");
  }
  return Determinant{alpha_strings_[address / nb], beta_strings_[address % nb]};
}

std::size_t SectorBasis::string_index(Spin s, std::uint64_t mask) const {
  const auto& strings = s == Spin::alpha ? alpha_strings_ : beta_strings_;
  const auto it = std::lower_bound(strings.begin(), strings.end(), mask);
  if (it == strings.end() || *it != mask) {
    throw LogicError("occupation string not in sector");
  }
  return static_cast<std::size_t>(it - strings.begin());
}

std::size_t SectorBasis::address(const Determinant& d) const {
  return string_index(Spin::alpha, d.alpha) * beta_strings_.size() +
         string_index(Spin::beta, d.beta);
}

SectorBasis enumerate_sector(const ActiveSpace& space,
                             std::size_t dimension_cap) {
  return SectorBasis::enumerate(space, dimension_cap);
}

int string_excitation_phase(std::uint64_t string, int from_orb, int to_orb) {
  const int lo = std::min(from_orb, to_orb);
  const int hi = std::max(from_orb, to_orb);
  const std::uint64_t between = low_mask(hi) & ~low_mask(lo + 1);
  return (std::popcount(string & between) & 1) ? -1 : 1;
}

std::pair<Determinant, int> excitation_sign(const Determinant& d, Spin spin,
                                            int from_orb, int to_orb) {
  const std::uint64_t word = d.word(spin);
  if (!((word >> from_orb) & 1u)) {
    throw LogicError("excitation source orbital " + std::to_string(from_orb) +
                     " is unoccupied");
  }
  if ((word >> to_orb) & 1u) {
    throw LogicError("excitation target orbital " + std::to_string(to_orb) +
                     " is occupied");
  }
  Determinant out = d;
  out.word(spin) =
      word ^ (std::uint64_t{1} << from_orb) ^ (std::uint64_t{1} << to_orb);
  return {out, string_excitation_phase(word, from_orb, to_orb)};
}

int reorder_phase_front(const Determinant& d, std::span<const int> orbitals) {
  std::uint64_t subsystem = 0;
  for (int p : orbitals) subsystem |= std::uint64_t{1} << p;
  const std::uint64_t env_alpha = d.alpha & ~subsystem;
  const std::uint64_t env_beta = d.beta & ~subsystem;

  // For each occupied subsystem spin-orbital, count occupied environment
  // spin-orbitals that precede it in the interleaved canonical order;
  // orbital p's alpha sits at position 2p, its beta at 2p+1.
  int crossings = 0;
  for (int p : orbitals) {
    if ((d.alpha >> p) & 1u) {
      crossings += std::popcount(env_alpha & low_mask(p));
      crossings += std::popcount(env_beta & low_mask(p));
    }
    if ((d.beta >> p) & 1u) {
      crossings += std::popcount(env_alpha & low_mask(p + 1));
      crossings += std::popcount(env_beta & low_mask(p));
    }
  }
  return (crossings & 1) ? -1 : 1;
}

}  // namespace orbent
