#pragma once

#include <cstddef>
#include <string>

namespace flt::analysis {

enum class CommMethod { flt, fedsem, ifca };

CommMethod parse_comm_method(const std::string& name);

struct CommParams {
  double M = 0.0;
  double W_enc = 0.0;
  double W_local = 0.0;
  double k = 0.0;
  double e = 0.0;
  double rho = 0.0;
  double T = 0.0;
  double C = 0.0;
};

// Total upload + download in parameter-count units:
//   flt    = M W_enc + k M e + 2 rho M W_local T
//   fedsem = 2 rho M W_local T
//   ifca   = rho M W_local T (C + 1)
double comm_cost(CommMethod method, const CommParams& p);
double comm_cost(const std::string& method, const CommParams& p);

// 64-bit view of a unit count.
inline constexpr double kBytesPerUnit = 8.0;

}  // namespace flt::analysis
