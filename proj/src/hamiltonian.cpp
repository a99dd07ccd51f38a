// Copyright 2026 The Orbent Authors
// SPDX-License-Identifier: Apache-2.0

#include "orbent/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <thread>

namespace orbent {
namespace {

// Occupied orbital list of an occupation string.
inline int occupied_list(std::uint64_t mask, int* out) {
  int n = 0;
  while (mask) {
    out[n++] = std::countr_zero(mask);
    mask &= mask - 1;
  }
  return n;
}

inline int virtual_list(std::uint64_t mask, int k, int* out) {
  int n = 0;
  for (int p = 0; p < k; ++p) {
    if (!((mask >> p) & 1u)) out[n++] = p;
  }
  return n;
}

void check_compatible(const IntegralTable& table, const SectorBasis& basis) {
  const ActiveSpace& a = table.space();
  const ActiveSpace& b = basis.space();
  if (a.n_orbitals != b.n_orbitals || a.n_electrons != b.n_electrons ||
      a.ms2 != b.ms2) {
    throw ValidationError(
        "integral table and sector basis describe different active spaces");
  }
}

}  // namespace

double CIVector::norm() const {
  double s = 0.0;
  for (double a : amplitudes) s += a * a;
  return std::sqrt(s);
}

void CIVector::normalize() {
  const double n = norm();
  if (!(n > 0.0)) throw ValidationError("cannot normalize a zero CI vector");
  for (double& a : amplitudes) a /= n;
}

CIVector make_ci_vector(std::shared_ptr<const SectorBasis> basis,
                        std::string label) {
  CIVector x;
  x.amplitudes.assign(basis->dimension(), 0.0);
  x.basis = std::move(basis);
  x.label = std::move(label);
  return x;
}

SectorHamiltonian::SectorHamiltonian(const IntegralTable& table,
                                     std::shared_ptr<const SectorBasis> basis)
    : table_(&table), basis_(std::move(basis)) {
  check_compatible(table, *basis_);
  build_tables(Spin::alpha, alpha_singles_);
  build_tables(Spin::beta, beta_singles_);
  compute_diagonal();
}

void SectorHamiltonian::build_tables(
    Spin spin, std::vector<std::vector<SingleExcitation>>& out) {
  const auto strings = spin == Spin::alpha ? basis_->alpha_strings()
                                           : basis_->beta_strings();
  const int k = basis_->space().n_orbitals;
  const IntegralTable& t = *table_;
  out.resize(strings.size());
  int occ[64], vir[64];
  for (std::size_t si = 0; si < strings.size(); ++si) {
    const std::uint64_t s = strings[si];
    const int n_occ = occupied_list(s, occ);
    const int n_vir = virtual_list(s, k, vir);
    auto& entries = out[si];
    entries.reserve(static_cast<std::size_t>(n_occ) * n_vir);
    for (int oi = 0; oi < n_occ; ++oi) {
      const int q = occ[oi];
      for (int vi = 0; vi < n_vir; ++vi) {
        const int p = vir[vi];
        const std::uint64_t target =
            s ^ (std::uint64_t{1} << q) ^ (std::uint64_t{1} << p);
        SingleExcitation e;
        e.target = static_cast<std::uint32_t>(basis_->string_index(spin, target));
        e.pair = static_cast<std::uint16_t>(t.pair_index(p, q));
        e.to = static_cast<std::uint8_t>(p);
        e.from = static_cast<std::uint8_t>(q);
        e.sign = static_cast<float>(string_excitation_phase(s, q, p));
        // Same-spin mean-field part of the single-excitation element;
        // the opposite-spin Coulomb sum depends on the partner string
        // and is added during apply().
        double base = t.h(p, q);
        for (int mi = 0; mi < n_occ; ++mi) {
          const int m = occ[mi];
          if (m == q) continue;
          base += t.eri(p, q, m, m) - t.eri(p, m, m, q);
        }
        e.base = base;
        entries.push_back(e);
      }
    }
  }
}

void SectorHamiltonian::compute_diagonal() {
  const IntegralTable& t = *table_;
  const int k = basis_->space().n_orbitals;
  const auto alpha = basis_->alpha_strings();
  const auto beta = basis_->beta_strings();
  int occ[64];

  // Same-spin diagonal contribution per string, plus each alpha string's
  // Coulomb field over orbitals for the cross term.
  const auto same_spin = [&](std::uint64_t s) {
    const int n = occupied_list(s, occ);
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
      d += t.h(occ[i], occ[i]);
      for (int j = i + 1; j < n; ++j) {
        d += t.eri(occ[i], occ[i], occ[j], occ[j]) -
             t.eri(occ[i], occ[j], occ[j], occ[i]);
      }
    }
    return d;
  };

  std::vector<double> diag_alpha(alpha.size());
  std::vector<double> field_alpha(alpha.size() * k);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    diag_alpha[i] = same_spin(alpha[i]);
    const int n = occupied_list(alpha[i], occ);
    for (int q = 0; q < k; ++q) {
      double f = 0.0;
      for (int m = 0; m < n; ++m) f += t.eri(occ[m], occ[m], q, q);
      field_alpha[i * k + q] = f;
    }
  }
  std::vector<double> diag_beta(beta.size());
  for (std::size_t j = 0; j < beta.size(); ++j) diag_beta[j] = same_spin(beta[j]);

  diagonal_.resize(basis_->dimension());
  const double core = t.core_energy();
  std::size_t addr = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = 0; j < beta.size(); ++j, ++addr) {
      double cross = 0.0;
      const int n = occupied_list(beta[j], occ);
      for (int m = 0; m < n; ++m) cross += field_alpha[i * k + occ[m]];
      diagonal_[addr] = core + diag_alpha[i] + diag_beta[j] + cross;
    }
  }
}

template <class Emit>
void SectorHamiltonian::enumerate_row(std::size_t addr, Emit&& emit) const {
  const IntegralTable& t = *table_;
  const int k = basis_->space().n_orbitals;
  const std::size_t nb = basis_->n_beta_strings();
  int occ_a[64], occ_b[64], vir_a[64], vir_b[64];

  const std::size_t ai = addr / nb;
  const std::size_t bi = addr % nb;
  const std::uint64_t a_mask = basis_->alpha_string(ai);
  const std::uint64_t b_mask = basis_->beta_string(bi);
  const int na = occupied_list(a_mask, occ_a);
  const int nb_occ = occupied_list(b_mask, occ_b);
  const int nv_a = virtual_list(a_mask, k, vir_a);
  const int nv_b = virtual_list(b_mask, k, vir_b);

  emit(addr, diagonal_[addr]);

  // Single excitations; the opposite-spin Coulomb sum completes the
  // Slater-Condon element on top of the precomputed same-spin base.
  for (const auto& e : alpha_singles_[ai]) {
    double elem = e.base;
    for (int m = 0; m < nb_occ; ++m) {
      elem += t.eri(e.to, e.from, occ_b[m], occ_b[m]);
    }
    emit(e.target * nb + bi, e.sign * elem);
  }
  for (const auto& e : beta_singles_[bi]) {
    double elem = e.base;
    for (int m = 0; m < na; ++m) {
      elem += t.eri(e.to, e.from, occ_a[m], occ_a[m]);
    }
    emit(ai * nb + e.target, e.sign * elem);
  }

  // Same-spin double excitations: occupied pair (q<s) to virtual pair
  // (p<r), phase from sequential application q->p then s->r.
  const auto same_spin_doubles = [&](Spin spin, std::uint64_t mask,
                                     const int* occ, int n_occ, const int* vir,
                                     int n_vir, auto address_of) {
    for (int i = 0; i < n_occ; ++i) {
      const int q = occ[i];
      for (int j = i + 1; j < n_occ; ++j) {
        const int s = occ[j];
        for (int u = 0; u < n_vir; ++u) {
          const int p = vir[u];
          const int sign1 = string_excitation_phase(mask, q, p);
          const std::uint64_t m1 =
              mask ^ (std::uint64_t{1} << q) ^ (std::uint64_t{1} << p);
          for (int v = u + 1; v < n_vir; ++v) {
            const int r = vir[v];
            const double integral = t.eri(p, q, r, s) - t.eri(p, s, r, q);
            if (integral == 0.0) continue;
            const int sign2 = string_excitation_phase(m1, s, r);
            const std::uint64_t m2 =
                m1 ^ (std::uint64_t{1} << s) ^ (std::uint64_t{1} << r);
            const std::size_t ti = basis_->string_index(spin, m2);
            emit(address_of(ti), sign1 * sign2 * integral);
          }
        }
      }
    }
  };
  same_spin_doubles(Spin::alpha, a_mask, occ_a, na, vir_a, nv_a,
                    [&](std::size_t ti) { return ti * nb + bi; });
  same_spin_doubles(Spin::beta, b_mask, occ_b, nb_occ, vir_b, nv_b,
                    [&](std::size_t ti) { return ai * nb + ti; });

  // Opposite-spin doubles factorize into one single per spin string.
  for (const auto& ea : alpha_singles_[ai]) {
    const std::size_t row = ea.target * nb;
    const double sa = ea.sign;
    for (const auto& eb : beta_singles_[bi]) {
      emit(row + eb.target, sa * eb.sign * t.eri_pair(ea.pair, eb.pair));
    }
  }
}

void SectorHamiltonian::apply_range(std::span<const double> x,
                                    std::span<double> y, std::size_t begin,
                                    std::size_t end) const {
  for (std::size_t addr = begin; addr < end; ++addr) {
    double sum = 0.0;
    enumerate_row(addr,
                  [&](std::size_t src, double value) { sum += value * x[src]; });
    y[addr] = sum;
  }
}

void SectorHamiltonian::apply(std::span<const double> x, std::span<double> y,
                              int threads) const {
  const std::size_t dim = dimension();
  if (x.size() != dim || y.size() != dim) {
    throw ValidationError("vector length does not match sector dimension");
  }
  const std::size_t n_workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, dim));
  if (n_workers == 1) {
    apply_range(x, y, 0, dim);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(n_workers);
  const std::size_t chunk = (dim + n_workers - 1) / n_workers;
  for (std::size_t w = 0; w < n_workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(dim, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back(
        [this, x, y, begin, end] { apply_range(x, y, begin, end); });
  }
  for (auto& w : workers) w.join();
}

CIVector SectorHamiltonian::apply(const CIVector& x, int threads) const {
  if (!x.basis || x.basis->dimension() != dimension()) {
    throw ValidationError("CI vector does not match sector basis");
  }
  check_compatible(*table_, *x.basis);
  CIVector y = make_ci_vector(basis_, x.label.empty() ? "" : "H*" + x.label);
  apply(x.amplitudes, y.amplitudes, threads);
  return y;
}

Eigen::MatrixXd SectorHamiltonian::dense(std::size_t dimension_cap) const {
  const std::size_t dim = dimension();
  if (dim > dimension_cap) {
    throw CapacityError("sector dimension " + std::to_string(dim) +
                        " exceeds dense matrix cap " +
                        std::to_string(dimension_cap));
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<double> unit(dim, 0.0), column(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    unit[j] = 1.0;
    apply(unit, column, 1);
    for (std::size_t i = 0; i < dim; ++i) out(static_cast<Eigen::Index>(i),
                                              static_cast<Eigen::Index>(j)) =
        column[i];
    unit[j] = 0.0;
  }
  return out;
}

CIVector apply_hamiltonian(const IntegralTable& table,
                           std::shared_ptr<const SectorBasis> basis,
                           const CIVector& x, int threads) {
  SectorHamiltonian engine(table, std::move(basis));
  return engine.apply(x, threads);
}

Eigen::MatrixXd build_dense(const IntegralTable& table,
                            std::shared_ptr<const SectorBasis> basis,
                            std::size_t dimension_cap) {
  SectorHamiltonian engine(table, std::move(basis));
  return engine.dense(dimension_cap);
}

}  // namespace orbent
