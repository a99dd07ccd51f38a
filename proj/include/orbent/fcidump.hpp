// Copyright 2026 The Orbent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orbent/integrals.hpp"

namespace orbent {

/// Parse an FCIDUMP stream into an IntegralTable.
///
/// Accepted dialect: a namelist header starting with "&FCI" (any case)
/// containing NORB and NELEC, optionally MS2 (default 0), ORBSYM and
/// ISYM, terminated by "&END" or "/"; keys separated by commas or
/// whitespace, values possibly spanning lines. Body lines are
/// `value i j k l` with 1-based indices and Fortran D-exponents
/// normalized. Index patterns: (0,0,0,0) is the core energy, (i,j,0,0)
/// a one-electron integral, four nonzero indices a chemist-notation
/// (ij|kl). Later duplicates overwrite earlier values; a warning is
/// recorded for each overwrite when `warnings` is non-null.
IntegralTable parse_fcidump(std::istream& in,
                            std::vector<std::string>* warnings = nullptr);

/// Serialize a table so that parse_fcidump reads back an equal one
/// (exact zero entries are omitted). Throws IoError on sink failure.
void write_fcidump(const IntegralTable& table, std::ostream& out);

IntegralTable read_fcidump_file(const std::string& path,
                                std::vector<std::string>* warnings = nullptr);
void write_fcidump_file(const IntegralTable& table, const std::string& path);

/// One-dimensional Hubbard chain as an integral table: nearest-neighbor
/// hopping -t (with a wraparound bond when periodic and L > 2), on-site
/// repulsion (ii|ii) = U, zero core energy.
IntegralTable build_hubbard_chain(int n_sites, double t, double u,
                                  int n_electrons, int ms2,
                                  bool periodic = false);

}  // namespace orbent
