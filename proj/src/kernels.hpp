#pragma once

#include <span>
#include <vector>

#include "tmft/group.hpp"
#include "tmft/ring.hpp"

// Per-entry accumulation kernels shared by the serial reference and the
// OpenMP lane. Each computes one output element in a fixed order, so the two
// lanes produce bit-identical results and identical tallies.

namespace tmft::detail {

// Sum of table[r] over every r in the k-bit space (mask `full`) with
// r superset of `wanted`; one tallied addition per term after the first.
inline elem superset_sum(const Ring& ring, std::span<const elem> table, u64 wanted, u64 full,
                         u64& adds) {
  const u64 free_bits = full & ~wanted;
  u64 s = free_bits;
  elem acc = table[wanted | s];
  while (s != 0) {
    s = (s - 1) & free_bits;
    acc = ring.add(acc, table[wanted | s]);
    ++adds;
  }
  return acc;
}

// Sum of values[g] over all g whose level label contains every bit of
// `wanted`, scanning g in increasing order. Requires at least one match.
inline elem masked_scan_sum(const Ring& ring, std::span<const elem> values,
                            std::span<const u64> labels, u64 wanted, u64& adds) {
  elem acc = 0;
  bool seeded = false;
  for (std::size_t g = 0; g < values.size(); ++g) {
    if ((wanted & ~labels[g]) != 0) continue;
    if (!seeded) {
      acc = values[g];
      seeded = true;
    } else {
      acc = ring.add(acc, values[g]);
      ++adds;
    }
  }
  return acc;
}

inline std::vector<u64> level_labels(unsigned n, unsigned k, LabelScheme scheme) {
  std::vector<u64> labels(std::size_t{1} << n);
  const u64 slice = low_mask(k);
  for (u64 g = 0; g < labels.size(); ++g) labels[g] = label_bits(k, g & slice, scheme);
  return labels;
}

}  // namespace tmft::detail
