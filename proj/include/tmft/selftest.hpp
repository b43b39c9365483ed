#pragma once

#include <iosfwd>

namespace tmft {

// Runs the built-in golden vectors (basis labeling table, fast-transform
// coefficient groupings, impulse and indicator spectra, per-sample inverse
// corner arguments), the counter-exactness sweep for n = 1..10 over every
// ring kind and both labeling schemes, and the convolution cross-check up to
// n = 6. Prints one ok/FAIL line per item; returns the number of failures.
int run_selftest(std::ostream& os);

}  // namespace tmft
