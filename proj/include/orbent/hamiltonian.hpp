// Copyright 2026 The Orbent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "orbent/determinants.hpp"
#include "orbent/integrals.hpp"

namespace orbent {

/// Wave-function amplitudes over one sector basis.
struct CIVector {
  std::shared_ptr<const SectorBasis> basis;
  std::vector<double> amplitudes;
  std::string label;

  double norm() const;
  /// Scale to unit 2-norm; throws ValidationError on a zero vector.
  void normalize();
};

CIVector make_ci_vector(std::shared_ptr<const SectorBasis> basis,
                        std::string label = {});

/// Second-quantized Hamiltonian action on a sector, evaluated matrix-free
/// through Slater-Condon rules. Single-excitation tables and diagonal
/// elements are precomputed at construction; the integral table and
/// basis must outlive the engine.
class SectorHamiltonian {
 public:
  SectorHamiltonian(const IntegralTable& table,
                    std::shared_ptr<const SectorBasis> basis);

  std::size_t dimension() const noexcept { return basis_->dimension(); }
  const SectorBasis& basis() const noexcept { return *basis_; }
  std::shared_ptr<const SectorBasis> basis_ptr() const noexcept {
    return basis_;
  }
  const std::vector<double>& diagonal() const noexcept { return diagonal_; }

  /// y = H x. Output rows are partitioned across `threads` workers; each
  /// y[j] is accumulated sequentially in a fixed order, so results are
  /// bitwise-reproducible for any worker count.
  void apply(std::span<const double> x, std::span<double> y,
             int threads = 1) const;
  CIVector apply(const CIVector& x, int threads = 1) const;

  /// Materialized dense matrix; throws CapacityError above the cap.
  Eigen::MatrixXd dense(std::size_t dimension_cap = 4000) const;

 private:
  struct SingleExcitation {
    std::uint32_t target;   // string index after the excitation
    std::uint16_t pair;     // packed pair index of (to,from)
    std::uint8_t to, from;  // orbitals p (target), q (source)
    float sign;             // in-string fermionic phase, +-1
    double base;            // h(p,q) plus the same-spin Coulomb-exchange sum
  };

  void build_tables(Spin spin, std::vector<std::vector<SingleExcitation>>& out);
  void compute_diagonal();
  void apply_range(std::span<const double> x, std::span<double> y,
                   std::size_t begin, std::size_t end) const;

  /// Calls emit(source_address, element) for every nonzero Hamiltonian
  /// element in row `addr`, the diagonal included; each source address
  /// is emitted at most once, in a fixed deterministic order.
  template <class Emit>
  void enumerate_row(std::size_t addr, Emit&& emit) const;

  const IntegralTable* table_;
  std::shared_ptr<const SectorBasis> basis_;
  std::vector<std::vector<SingleExcitation>> alpha_singles_;
  std::vector<std::vector<SingleExcitation>> beta_singles_;
  std::vector<double> diagonal_;
};

/// One-shot convenience wrappers over SectorHamiltonian.
CIVector apply_hamiltonian(const IntegralTable& table,
                           std::shared_ptr<const SectorBasis> basis,
                           const CIVector& x, int threads = 1);
Eigen::MatrixXd build_dense(const IntegralTable& table,
                            std::shared_ptr<const SectorBasis> basis,
                            std::size_t dimension_cap = 4000);

}  // namespace orbent
