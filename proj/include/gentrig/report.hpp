#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentrig/identities.hpp"

namespace gentrig {

// One flat output row; the same schema serves point evaluations, constants,
// tables and verification sweeps:
//   suite,p,q,r,x,value,margin,err_est,passed
struct OutputRecord {
  std::string suite;
  double p = 0.0, q = 0.0, r = 0.0;
  std::optional<double> x;
  std::optional<double> value;
  std::optional<double> margin;
  double err_est = 0.0;
  bool passed = true;
};

// Shortest round-trip decimal; infinities print as "inf"/"-inf".
std::string format_double(double v);

std::string to_csv(const std::vector<OutputRecord>& records);
std::string to_json_text(const std::vector<OutputRecord>& records);

std::vector<OutputRecord> to_records(const std::vector<MarginReport>& reports);

}  // namespace gentrig
