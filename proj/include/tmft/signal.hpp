#pragma once

#include <vector>

#include "tmft/group.hpp"
#include "tmft/ring.hpp"

namespace tmft {

// A length-2^n sequence of ring elements; entry j holds the function value at
// the group element with decimal index j.
struct Signal {
  unsigned n;
  Ring ring;
  std::vector<elem> values;

  friend bool operator==(const Signal&, const Signal&) = default;
};

// Transform output in first-row form: rows[0] is the single DC value, and
// rows[k] (k >= 1) is the first row of the level-k coefficient matrix, so the
// whole spectrum holds 2^(n+1) - 1 elements. Entry 0 of every row equals the
// DC value.
struct Spectrum {
  unsigned n;
  Ring ring;
  LabelScheme scheme;
  std::vector<std::vector<elem>> rows;

  elem dc() const { return rows[0][0]; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Signal dirac(unsigned n, const Ring& ring);
Signal indicator(unsigned n, u64 g0, const Ring& ring);

// Structural checks; throw std::invalid_argument on violation.
void check_signal(const Signal& f);
void check_spectrum_shape(const Spectrum& F);

}  // namespace tmft
