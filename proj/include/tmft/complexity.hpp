#pragma once

#include <iosfwd>
#include <vector>

#include "tmft/common.hpp"

namespace tmft {

// 3^(n+1) stays below 2^63 up to here; formulas use exact integer arithmetic.
inline constexpr unsigned kMaxCostBits = 38;
// instrumented transform runs for the measured report columns
inline constexpr unsigned kMaxMeasuredBits = 12;

// Closed forms for the exact ring-addition tallies, with their summation
// forms as an independent second route (the two must agree everywhere).
u64 cost_fast_tmft(unsigned n);      // (3^(n+1) + 1)/2 - 2^(n+1)
u64 cost_fast_tmft_sum(unsigned n);  // sum_{k=1..n} (3^k - 2^k)
u64 cost_tmft(unsigned n);           // 3^(n+1) - (n+4) 2^n + n + 1
u64 cost_tmft_sum(unsigned n);       // (3^n - 2^n) + sum_{k<n} [2^(n-k)(3^k - 2^k) - (2^k - 1)]
u64 cost_itmft(unsigned n);          // (3^(n+1) + 1)/2 + (n-2) 2^n
u64 cost_itmft_sum(unsigned n);      // sum_{k=1..n} (3^k - 2^k) + n 2^n

u128 cost_direct_conv_mults(unsigned n);  // 4^n
u128 cost_direct_conv_adds(unsigned n);   // 2^n (2^n - 1)

// Transform-stage additions of a spectral convolution: two fast transforms
// plus one inverse, 2*cost_fast_tmft(n) + cost_itmft(n).
u64 cost_spectral_transform_adds(unsigned n);

struct CostRow {
  unsigned n;
  u64 fast_tmft_adds;
  u64 tmft_adds;
  u64 itmft_adds;
  double ratio;  // tmft / fast
  u128 direct_conv_mults;
  u64 spectral_conv_transform_adds;
  bool has_measured = false;
  u64 measured_fast = 0;
  u64 measured_tmft = 0;
  u64 measured_itmft = 0;
};

// Formula values per n; with `measured`, runs instrumented transforms
// (requires n_max <= kMaxMeasuredBits) and appends the measured tallies.
std::vector<CostRow> cost_report(unsigned n_min, unsigned n_max, bool measured = false);

// header: n,fast_tmft,tmft,itmft,ratio,direct_conv_mults,spectral_conv_adds
//         [,measured_fast,measured_tmft,measured_itmft]
void write_cost_csv(std::ostream& os, const std::vector<CostRow>& rows);

}  // namespace tmft
