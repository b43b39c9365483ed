#pragma once

#include "tmft/rep_matrix.hpp"
#include "tmft/signal.hpp"

namespace tmft {

inline constexpr unsigned kMaxTransformBits = 24;

struct TransformResult {
  Spectrum spectrum;
  OpCounter ops;
};

struct InverseResult {
  Signal signal;
  OpCounter ops;
};

// Per-level coefficient tables of the fast transform: level_coeffs[k] holds,
// for each k-bit label, the sum of signal values feeding that basis matrix;
// level_coeffs[n] is the bit-relabeled input and level_coeffs[0] = {DC}.
// The all-zero label below the top level is filled in untallied; the counted
// algorithm never forms it.
struct FastTrace {
  std::vector<std::vector<elem>> level_coeffs;
};

// Direct-definition transform: every row entry is an independent scan over
// all 2^n signal values. The tally must equal cost_tmft(n) exactly, so entry 0
// of the lower rows is copied from the top row's leading entry, never resummed.
TransformResult tmft_direct(const Signal& f, LabelScheme scheme = LabelScheme::tree);

// Fast transform. Counting conventions pinned by cost_fast_tmft(n): the top
// level costs 3^n - 2^n additions; each lower level folds the coefficient
// pairs for every nonzero label (2^k - 1 additions) and then forms the row
// entries by naive submask-superset sums, with entry 0 copied from the DC.
TransformResult tmft_fast(const Signal& f, LabelScheme scheme = LabelScheme::tree,
                          FastTrace* trace = nullptr);

// Same spectrum as tmft_fast, computed with in-place superset-sum sweeps.
// Faster, but intentionally untallied: its addition pattern does not follow
// the counting conventions above.
Spectrum tmft_fast_zeta(const Signal& f, LabelScheme scheme = LabelScheme::tree);

// Inverse transform. Per level, a memo table of corner extractions (one per
// label, 2^popcount(label) - 1 additions each) is shared by all samples; each
// sample then costs n additions. Tally equals cost_itmft(n) exactly.
// Throws InvariantError when a row's leading entry disagrees with the DC.
InverseResult itmft(const Spectrum& F);

// Dense level-k coefficient matrix, rebuilt from the stored first row.
RingMatrix coefficient_matrix(const Spectrum& F, unsigned k);

// The g-indexed sequence of matrix labels defining the level-k basis.
// k = 0 yields the scalar pseudo-label {0, 0} for every position.
std::vector<RepLabel> basis_labels(unsigned n, unsigned k, LabelScheme scheme);

}  // namespace tmft
