#pragma once

#include "tmft/transform.hpp"

namespace tmft {

struct ConvolveResult {
  Signal signal;
  OpCounter ops;
};

// Group convolution by definition: output at g sums r(g' xor g) * s(g') over
// all g'. Costs exactly 4^n multiplications and 2^n (2^n - 1) additions.
ConvolveResult convolve_direct(const Signal& r, const Signal& s);

struct SpectralProductResult {
  Spectrum spectrum;
  OpCounter ops;
};

// Level-wise product of two spectra in first-row form: row k of the result is
// (row k of R) times the dense level-k matrix of S, the latter rebuilt by the
// copy-only first-row recursion. The product skips the structurally zero
// strictly-lower triangle; the counter reports the operations actually done.
SpectralProductResult spectral_product(const Spectrum& R, const Spectrum& S);

struct SpectralConvolveResult {
  Signal signal;
  OpCounter transform_ops;  // two forward passes plus the inverse
  OpCounter product_ops;    // the level-wise spectral products

  OpCounter total() const { return transform_ops + product_ops; }
};

// Convolution through the transform domain; equals convolve_direct exactly.
// The transform-stage additions equal 2*cost_fast_tmft(n) + cost_itmft(n).
SpectralConvolveResult convolve_via_tmft(const Signal& r, const Signal& s,
                                         LabelScheme scheme = LabelScheme::tree);

// shift(f, a)(g) = f(g xor a). Level k of its spectrum equals the first row
// of (level-k matrix of f) times the basis matrix labeled by a's level-k
// label; the DC row is unchanged.
Signal shift(const Signal& f, u64 a);

}  // namespace tmft
