// Copyright 2026 The Orbent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "orbent/integrals.hpp"

namespace orbent {

enum class Spin { alpha, beta };

/// Slater determinant over k <= 64 spatial orbitals: bit p of each word
/// is set iff spin-orbital p(alpha/beta) is occupied.
struct Determinant {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;

  /// Local occupation code of orbital p: 0 empty, 1 up, 2 down, 3 updown.
  int code(int p) const noexcept {
    return static_cast<int>((alpha >> p) & 1u) +
           2 * static_cast<int>((beta >> p) & 1u);
  }

  std::uint64_t& word(Spin s) noexcept { return s == Spin::alpha ? alpha : beta; }
  std::uint64_t word(Spin s) const noexcept {
    return s == Spin::alpha ? alpha : beta;
  }

  friend bool operator==(const Determinant&, const Determinant&) = default;
};

/// The full determinant basis of one (N, Sz) sector. Alpha and beta
/// occupation strings are enumerated separately and a determinant's
/// address is alpha-major: address = alpha_index * n_beta_strings +
/// beta_index. Strings are ordered by ascending bit-pattern value, which
/// makes lookup a binary search and the ordering reproducible.
class SectorBasis {
 public:
  static constexpr std::size_t default_dimension_cap = 100'000'000;

  /// Enumerate the sector. Throws ValidationError for an inconsistent
  /// space (including N_alpha or N_beta exceeding k) and CapacityError
  /// when the dimension exceeds the cap.
  static SectorBasis enumerate(const ActiveSpace& space,
                               std::size_t dimension_cap = default_dimension_cap);

  const ActiveSpace& space() const noexcept { return space_; }
  std::size_t dimension() const noexcept {
    return alpha_strings_.size() * beta_strings_.size();
  }
  std::size_t n_alpha_strings() const noexcept { return alpha_strings_.size(); }
  std::size_t n_beta_strings() const noexcept { return beta_strings_.size(); }

  std::uint64_t alpha_string(std::size_t i) const { return alpha_strings_[i]; }
  std::uint64_t beta_string(std::size_t i) const { return beta_strings_[i]; }
  std::span<const std::uint64_t> alpha_strings() const noexcept {
    return alpha_strings_;
  }
  std::span<const std::uint64_t> beta_strings() const noexcept {
    return beta_strings_;
  }

  Determinant determinant(std::size_t address) const;
  std::size_t address(const Determinant& d) const;

  /// Index of an occupation string within its spin list; throws
  /// LogicError if the string is not part of the sector.
  std::size_t string_index(Spin s, std::uint64_t mask) const;

 private:
  ActiveSpace space_;
  std::vector<std::uint64_t> alpha_strings_;
  std::vector<std::uint64_t> beta_strings_;
};

SectorBasis enumerate_sector(const ActiveSpace& space,
                             std::size_t dimension_cap =
                                 SectorBasis::default_dimension_cap);

/// Move one electron of the given spin from `from_orb` to `to_orb`.
/// Returns the excited determinant and the fermionic phase
/// (-1)^(number of set bits strictly between the two positions in that
/// spin string). Throws LogicError when `from_orb` is unoccupied or
/// `to_orb` is occupied.
std::pair<Determinant, int> excitation_sign(const Determinant& d, Spin spin,
                                            int from_orb, int to_orb);

/// Phase within a single occupation string, without materializing the
/// excited determinant.
int string_excitation_phase(std::uint64_t string, int from_orb, int to_orb);

/// Parity of the permutation that moves all occupied spin-orbitals of
/// the given spatial orbitals (1 or 2 of them) to the front of the
/// canonical interleaved spin-orbital ordering 1a,1b,2a,2b,...,ka,kb,
/// preserving relative order otherwise. This is the phase convention
/// shared by the orbital RDM construction and the Fock-space reference.
int reorder_phase_front(const Determinant& d, std::span<const int> orbitals);

}  // namespace orbent
