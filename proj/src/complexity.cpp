#include "tmft/complexity.hpp"

#include <cassert>
#include <cstdio>
#include <ostream>
#include <random>

#include "tmft/transform.hpp"

namespace tmft {

namespace {

void check_range(unsigned n) {
  if (n == 0 || n > kMaxCostBits)
    throw std::invalid_argument("cost formulas require 1 <= n <= 38");
}

u64 pow3(unsigned e) {
  u64 v = 1;
  while (e--) v *= 3;
  return v;
}

}  // namespace

u64 cost_fast_tmft(unsigned n) {
  check_range(n);
  const u64 num = pow3(n + 1) + 1;
  assert(num % 2 == 0);
  return num / 2 - (u64{1} << (n + 1));
}

u64 cost_fast_tmft_sum(unsigned n) {
  check_range(n);
  u64 total = 0;
  for (unsigned k = 1; k <= n; ++k) total += pow3(k) - (u64{1} << k);
  return total;
}

u64 cost_tmft(unsigned n) {
  check_range(n);
  return pow3(n + 1) - (u64{n} + 4) * (u64{1} << n) + n + 1;
}

u64 cost_tmft_sum(unsigned n) {
  check_range(n);
  u64 total = pow3(n) - (u64{1} << n);
  for (unsigned k = 1; k < n; ++k)
    total += (u64{1} << (n - k)) * (pow3(k) - (u64{1} << k)) - ((u64{1} << k) - 1);
  return total;
}

u64 cost_itmft(unsigned n) {
  check_range(n);
  const u64 num = pow3(n + 1) + 1;
  assert(num % 2 == 0);
  const i64 shifted = (static_cast<i64>(n) - 2) * static_cast<i64>(u64{1} << n);
  return static_cast<u64>(static_cast<i64>(num / 2) + shifted);
}

u64 cost_itmft_sum(unsigned n) {
  check_range(n);
  return cost_fast_tmft_sum(n) + u64{n} * (u64{1} << n);
}

u128 cost_direct_conv_mults(unsigned n) {
  check_range(n);
  return u128{1} << (2 * n);
}

u128 cost_direct_conv_adds(unsigned n) {
  check_range(n);
  return (u128{1} << n) * ((u128{1} << n) - 1);
}

u64 cost_spectral_transform_adds(unsigned n) {
  return 2 * cost_fast_tmft(n) + cost_itmft(n);
}

std::vector<CostRow> cost_report(unsigned n_min, unsigned n_max, bool measured) {
  if (n_min == 0 || n_min > n_max || n_max > kMaxCostBits)
    throw std::invalid_argument("cost report range must satisfy 1 <= min <= max <= 38");
  if (measured && n_max > kMaxMeasuredBits)
    throw std::invalid_argument("measured report is limited to n <= 12");

  std::vector<CostRow> rows;
  rows.reserve(n_max - n_min + 1);
  std::mt19937_64 rng(0x746d6674u);  // fixed seed: the report is deterministic
  const Ring ring = Ring::bitvec(8);
  for (unsigned n = n_min; n <= n_max; ++n) {
    CostRow row{n,
                cost_fast_tmft(n),
                cost_tmft(n),
                cost_itmft(n),
                0.0,
                cost_direct_conv_mults(n),
                cost_spectral_transform_adds(n)};
    row.ratio = static_cast<double>(row.tmft_adds) / static_cast<double>(row.fast_tmft_adds);
    if (measured) {
      Signal f{n, ring, std::vector<elem>(std::size_t{1} << n)};
      for (auto& v : f.values) v = rng() & ring.mask();
      const auto fast = tmft_fast(f);
      row.measured_fast = fast.ops.additions;
      row.measured_tmft = tmft_direct(f).ops.additions;
      row.measured_itmft = itmft(fast.spectrum).ops.additions;
      row.has_measured = true;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_cost_csv(std::ostream& os, const std::vector<CostRow>& rows) {
  const bool measured = !rows.empty() && rows.front().has_measured;
  os << "n,fast_tmft,tmft,itmft,ratio,direct_conv_mults,spectral_conv_adds";
  if (measured) os << ",measured_fast,measured_tmft,measured_itmft";
  os << '\n';
  char ratio[32];
  for (const auto& r : rows) {
    std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
    os << r.n << ',' << r.fast_tmft_adds << ',' << r.tmft_adds << ',' << r.itmft_adds << ','
       << ratio << ',' << dec_string(r.direct_conv_mults) << ','
       << r.spectral_conv_transform_adds;
    if (measured)
      os << ',' << r.measured_fast << ',' << r.measured_tmft << ',' << r.measured_itmft;
    os << '\n';
  }
}

}  // namespace tmft
