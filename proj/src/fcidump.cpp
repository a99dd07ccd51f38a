// Copyright 2026 The Orbent Authors
// SPDX-License-Identifier: Apache-2.0

#include "orbent/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace orbent {
namespace {

std::string to_upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

// Fortran floating-point literals use D as the exponent marker.
std::string normalize_exponent(std::string token) {
  for (char& c : token) {
    if (c == 'd' || c == 'D') c = 'E';
  }
  return token;
}

double parse_double(const std::string& token, std::size_t line) {
  const std::string t = normalize_exponent(token);
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(t, &pos);
  } catch (const std::exception&) {
    if (!token.empty() && token.front() == '(') {
      throw ParseError("complex integral value '" + token +
                           "' not supported (real orbitals only)",
                       line);
    }
    throw ParseError("expected a numeric value, got '" + token + "'", line);
  }
  if (pos != t.size()) {
    throw ParseError("trailing characters in numeric value '" + token + "'",
                     line);
  }
  return value;
}

long parse_long(const std::string& token, std::size_t line) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
  if (pos != token.size()) {
    throw ParseError("trailing characters in integer '" + token + "'", line);
  }
  return value;
}

struct Header {
  std::optional<long> norb;
  std::optional<long> nelec;
  long ms2 = 0;
  std::optional<long> isym;
  std::vector<int> orbsym;
};

// The namelist is read as a flat token stream; commas and whitespace
// both separate, '=' may carry surrounding spaces. A key keeps
// consuming values until the next KEY=, so multi-valued ORBSYM works.
void parse_header_tokens(const std::string& text, std::size_t line,
                         Header& header) {
  std::string prepared;
  prepared.reserve(text.size() + 16);
  for (char c : text) {
    if (c == ',') {
      prepared += ' ';
    } else if (c == '=') {
      prepared += " = ";
    } else {
      prepared += c;
    }
  }
  std::istringstream in(prepared);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);

  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i + 1 < tokens.size() && tokens[i + 1] == "=") {
      key = to_upper(tokens[i]);
      ++i;
      continue;
    }
    if (tokens[i] == "=") {
      throw ParseError("stray '=' in namelist header", line);
    }
    if (key.empty()) {
      throw ParseError(
          "unexpected token '" + tokens[i] + "' in namelist header", line);
    }
    const std::string& value = tokens[i];
    if (key == "NORB") {
      header.norb = parse_long(value, line);
    } else if (key == "NELEC") {
      header.nelec = parse_long(value, line);
    } else if (key == "MS2") {
      header.ms2 = parse_long(value, line);
    } else if (key == "ISYM") {
      header.isym = parse_long(value, line);
    } else if (key == "ORBSYM") {
      header.orbsym.push_back(static_cast<int>(parse_long(value, line)));
    } else if (key == "IUHF") {
      if (parse_long(value, line) != 0) {
        throw ParseError("IUHF spin-orbital FCIDUMP files are not supported",
                         line);
      }
    }
    // Values of unknown keys are skipped.
  }
}

}  // namespace

IntegralTable parse_fcidump(std::istream& in,
                            std::vector<std::string>* warnings) {
  std::string line;
  std::size_t line_no = 0;

  // Header: everything from &FCI up to &END or a line-terminating '/'.
  Header header;
  std::string header_text;
  bool header_done = false;
  bool saw_begin = false;
  while (!header_done && std::getline(in, line)) {
    ++line_no;
    std::string upper = to_upper(line);
    std::size_t start = 0;
    if (!saw_begin) {
      const auto amp = upper.find('&');
      if (amp == std::string::npos) {
        if (upper.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw ParseError("expected namelist header starting with &FCI",
                         line_no);
      }
      const auto name_end = upper.find_first_of(" \t\r,", amp);
      start = name_end == std::string::npos ? upper.size() : name_end;
      saw_begin = true;
    }
    std::string chunk = line.substr(start);
    std::string chunk_upper = upper.substr(start);
    const auto end_tag = chunk_upper.find("&END");
    const auto slash = chunk_upper.find('/');
    std::size_t stop = std::string::npos;
    if (end_tag != std::string::npos) stop = end_tag;
    if (slash != std::string::npos) stop = std::min(stop, slash);
    if (stop != std::string::npos) {
      chunk = chunk.substr(0, stop);
      header_done = true;
    }
    header_text += chunk;
    header_text += ' ';
    if (!header_done) continue;
  }
  if (!saw_begin) {
    throw ParseError("empty stream: no FCIDUMP namelist header found",
                     line_no ? line_no : 1);
  }
  if (!header_done) {
    throw ParseError("namelist header not terminated by &END or /", line_no);
  }
  parse_header_tokens(header_text, line_no, header);

  if (!header.norb) throw ParseError("missing NORB in header", line_no);
  if (!header.nelec) throw ParseError("missing NELEC in header", line_no);

  ActiveSpace space;
  space.n_orbitals = static_cast<int>(*header.norb);
  space.n_electrons = static_cast<int>(*header.nelec);
  space.ms2 = static_cast<int>(header.ms2);
  space.orbital_irreps = header.orbsym;
  space.validate();  // ValidationError on e.g. odd N + ms2

  IntegralTable table(space);
  const int k = space.n_orbitals;

  // Overwrite tracking for the duplicate-record warning.
  std::vector<bool> seen_h(static_cast<std::size_t>(k) * k, false);
  std::vector<bool> seen_eri(
      static_cast<std::size_t>(table.n_pairs()) * table.n_pairs(), false);
  bool seen_core = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string value_token;
    if (!(ls >> value_token)) continue;  // blank line
    const double value = parse_double(value_token, line_no);
    long idx[4];
    for (int t = 0; t < 4; ++t) {
      std::string tok;
      if (!(ls >> tok)) {
        throw ParseError("expected four indices after the value", line_no);
      }
      idx[t] = parse_long(tok, line_no);
      if (idx[t] < 0 || idx[t] > k) {
        throw ParseError("orbital index " + std::to_string(idx[t]) +
                             " out of range 0.." + std::to_string(k),
                         line_no);
      }
    }
    std::string extra;
    if (ls >> extra) {
      throw ParseError("unexpected trailing token '" + extra + "'", line_no);
    }
    const long i = idx[0], j = idx[1], kk = idx[2], l = idx[3];
    if (i == 0 && j == 0 && kk == 0 && l == 0) {
      if (seen_core && warnings) {
        warnings->push_back("line " + std::to_string(line_no) +
                            ": duplicate core energy record, last one wins");
      }
      seen_core = true;
      table.set_core_energy(value);
    } else if (kk == 0 && l == 0 && i > 0 && j > 0) {
      const int p = static_cast<int>(i) - 1;
      const int q = static_cast<int>(j) - 1;
      const std::size_t slot =
          static_cast<std::size_t>(std::max(p, q)) * k + std::min(p, q);
      if (seen_h[slot] && warnings) {
        warnings->push_back("line " + std::to_string(line_no) +
                            ": duplicate h(" + std::to_string(i) + "," +
                            std::to_string(j) + ") record, last one wins");
      }
      seen_h[slot] = true;
      table.set_h(p, q, value);
    } else if (i > 0 && j > 0 && kk > 0 && l > 0) {
      const int p = static_cast<int>(i) - 1;
      const int q = static_cast<int>(j) - 1;
      const int r = static_cast<int>(kk) - 1;
      const int s = static_cast<int>(l) - 1;
      const int pq = table.pair_index(p, q);
      const int rs = table.pair_index(r, s);
      const std::size_t slot =
          static_cast<std::size_t>(std::max(pq, rs)) * table.n_pairs() +
          std::min(pq, rs);
      if (seen_eri[slot] && warnings) {
        warnings->push_back("line " + std::to_string(line_no) +
                            ": duplicate (" + std::to_string(i) +
                            std::to_string(j) + "|" + std::to_string(kk) +
                            std::to_string(l) + ") record, last one wins");
      }
      seen_eri[slot] = true;
      table.set_eri(p, q, r, s, value);
    } else {
      throw ParseError("invalid index pattern (" + std::to_string(i) + " " +
                           std::to_string(j) + " " + std::to_string(kk) + " " +
                           std::to_string(l) + ")",
                       line_no);
    }
  }
  return table;
}

void write_fcidump(const IntegralTable& table, std::ostream& out) {
  const ActiveSpace& space = table.space();
  const int k = space.n_orbitals;
  out << "&FCI NORB=" << k << ",NELEC=" << space.n_electrons
      << ",MS2=" << space.ms2 << ",\n";
  if (!space.orbital_irreps.empty()) {
    out << "  ORBSYM=";
    for (int s : space.orbital_irreps) out << s << ",";
    out << "\n";
  }
  out << " &END\n";

  char buf[64];
  const auto emit = [&](double v, int i, int j, int r, int s) {
    std::snprintf(buf, sizeof(buf), "%24.16E %4d %4d %4d %4d\n", v, i, j, r,
                  s);
    out << buf;
  };
  // Canonical quadruples p>=q, r>=s, (pq)>=(rs), 1-based on output.
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q <= p; ++q) {
      for (int r = 0; r <= p; ++r) {
        const int s_max = (r == p) ? q : r;
        for (int s = 0; s <= s_max; ++s) {
          const double v = table.eri(p, q, r, s);
          if (v != 0.0) emit(v, p + 1, q + 1, r + 1, s + 1);
        }
      }
    }
  }
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q <= p; ++q) {
      const double v = table.h(p, q);
      if (v != 0.0) emit(v, p + 1, q + 1, 0, 0);
    }
  }
  if (table.core_energy() != 0.0) {
    emit(table.core_energy(), 0, 0, 0, 0);
  }
  if (!out) throw IoError("failed writing FCIDUMP stream");
}

IntegralTable read_fcidump_file(const std::string& path,
                                std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open FCIDUMP file: " + path);
  return parse_fcidump(in, warnings);
}

void write_fcidump_file(const IntegralTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open file for writing: " + path);
  write_fcidump(table, out);
  if (!out) throw IoError("failed writing FCIDUMP file: " + path);
}

IntegralTable build_hubbard_chain(int n_sites, double t, double u,
                                  int n_electrons, int ms2, bool periodic) {
  if (n_sites < 1) {
    throw ValidationError("hubbard chain needs at least one site");
  }
  ActiveSpace space;
  space.n_orbitals = n_sites;
  space.n_electrons = n_electrons;
  space.ms2 = ms2;
  space.validate();
  if (space.n_alpha() > n_sites || space.n_beta() > n_sites) {
    throw ValidationError("particle sector does not fit on " +
                          std::to_string(n_sites) + " sites");
  }
  IntegralTable table(space);
  for (int i = 0; i + 1 < n_sites; ++i) {
    table.set_h(i, i + 1, -t);
  }
  if (periodic && n_sites > 2) {
    table.set_h(n_sites - 1, 0, -t);
  }
  for (int i = 0; i < n_sites; ++i) {
    table.set_eri(i, i, i, i, u);
  }
  return table;
}

}  // namespace orbent
