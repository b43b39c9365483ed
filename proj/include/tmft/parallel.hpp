#pragma once

#include "tmft/convolution.hpp"
#include "tmft/transform.hpp"

// OpenMP lane. Each kernel splits its independent per-entry / per-sample
// loops across threads and reduces the tallies; every output element is still
// accumulated in the fixed serial order, so results and counters are
// bit-identical to the serial reference.

namespace tmft::par {

TransformResult tmft_direct(const Signal& f, LabelScheme scheme = LabelScheme::tree);
TransformResult tmft_fast(const Signal& f, LabelScheme scheme = LabelScheme::tree);
InverseResult itmft(const Spectrum& F);
ConvolveResult convolve_direct(const Signal& r, const Signal& s);

}  // namespace tmft::par
