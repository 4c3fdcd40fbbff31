#pragma once

// CSV serialization of sweep rows. Fixed header, 12 significant digits for
// floats, LF line endings, empty fields for unavailable values.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qclearn/analysis.hpp"
#include "qclearn/errors.hpp"

namespace qclearn::csv {

inline constexpr const char* kHeader =
    "family,N,param,s,theta,m,membership_queries,equivalence_queries,"
    "avg_success,gamma,conj1_bound,conj2_bound";

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string to_line(const analysis::SweepRow& row) {
  std::ostringstream out;
  out << row.family << ',' << row.domain << ',';
  if (row.param) out << *row.param;
  out << ',' << format_double(row.s) << ',' << format_double(row.theta) << ','
      << row.m << ',' << row.membership_queries << ','
      << row.equivalence_queries << ',' << format_double(row.avg_success)
      << ',';
  if (row.gamma) out << format_double(*row.gamma);
  out << ',' << format_double(row.conj1_bound) << ',';
  if (row.conj2_bound) out << format_double(*row.conj2_bound);
  return out.str();
}

inline void emit_csv(const std::vector<analysis::SweepRow>& rows,
                     std::ostream& out) {
  out << kHeader << '\n';
  for (const auto& row : rows) out << to_line(row) << '\n';
}

inline void emit_csv(const std::vector<analysis::SweepRow>& rows,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  emit_csv(rows, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace qclearn::csv
