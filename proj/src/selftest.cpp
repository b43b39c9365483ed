#include "tmft/selftest.hpp"

#include <array>
#include <functional>
#include <ostream>
#include <random>

#include "tmft/complexity.hpp"
#include "tmft/convolution.hpp"
#include "tmft/transform.hpp"

namespace tmft {

namespace {

Signal random_signal(unsigned n, const Ring& ring, std::mt19937_64& rng) {
  Signal f{n, ring, std::vector<elem>(std::size_t{1} << n)};
  for (auto& v : f.values) v = rng() & ring.mask();
  return f;
}

bool labeling_table() {
  // level-k label of every group element for n = 3, tree scheme
  const std::array<std::array<u64, 8>, 3> want = {{
      {0, 1, 0, 1, 0, 1, 0, 1},
      {0, 1, 3, 2, 0, 1, 3, 2},
      {0, 1, 3, 2, 7, 6, 4, 5},
  }};
  for (unsigned k = 1; k <= 3; ++k) {
    const auto labels = basis_labels(3, k, LabelScheme::tree);
    for (u64 g = 0; g < 8; ++g)
      if (labels[g].bits != want[k - 1][g] || labels[g].k != k) return false;
  }
  for (const auto& l : basis_labels(3, 0, LabelScheme::tree))
    if (l.k != 0) return false;
  return true;
}

bool fast_groupings() {
  // one-hot probe: value bit j marks the contribution of sample j, so each
  // coefficient is the exact set of samples folded into its label
  const Ring ring = Ring::bitvec(8);
  Signal probe{3, ring, {}};
  for (u64 j = 0; j < 8; ++j) probe.values.push_back(u64{1} << j);
  FastTrace trace;
  tmft_fast(probe, LabelScheme::tree, &trace);

  const std::vector<std::vector<elem>> want = {
      {0xff},
      {0x55, 0xaa},
      {0x11, 0x22, 0x88, 0x44},          // labels 00, 01, 10, 11
      {0x01, 0x02, 0x08, 0x04, 0x40, 0x80, 0x20, 0x10},
  };
  return trace.level_coeffs == want;
}

bool impulse_and_indicator() {
  const Ring ring = Ring::gf(2, 0x7);
  {
    const auto got = tmft_fast(dirac(3, ring)).spectrum;
    for (unsigned k = 1; k <= 3; ++k)
      for (std::size_t c = 0; c < got.rows[k].size(); ++c)
        if (got.rows[k][c] != (c == 0 ? ring.one() : ring.zero())) return false;
    if (got.dc() != ring.one()) return false;
  }
  {
    const auto got = tmft_fast(indicator(2, 3, ring)).spectrum;
    const std::vector<std::vector<elem>> want = {{1}, {1, 1}, {1, 0, 1, 0}};
    if (got.rows != want) return false;
  }
  return true;
}

bool inverse_corner_arguments() {
  // per-sample basis labels consumed by the inverse at n = 3
  const std::array<std::array<u64, 3>, 8> want = {{
      {0, 0, 0},
      {1, 1, 1},
      {0, 3, 3},
      {1, 2, 2},
      {0, 0, 7},
      {1, 1, 6},
      {0, 3, 4},
      {1, 2, 5},
  }};
  for (u64 j = 0; j < 8; ++j)
    for (unsigned k = 1; k <= 3; ++k)
      if (rep_label_bits(3, k, j, LabelScheme::tree) != want[j][k - 1]) return false;

  std::mt19937_64 rng(11);
  const Ring ring = Ring::gf(8, 0x11b);
  for (int trial = 0; trial < 20; ++trial) {
    const Signal f = random_signal(3, ring, rng);
    if (itmft(tmft_fast(f).spectrum).signal != f) return false;
  }
  return true;
}

bool counter_exactness(std::ostream& os) {
  const std::array<Ring, 3> rings = {Ring::bitvec(8), Ring::poly(4, 0x11), Ring::gf(8, 0x11b)};
  std::mt19937_64 rng(12);
  for (const auto& ring : rings) {
    for (LabelScheme scheme : {LabelScheme::tree, LabelScheme::flat}) {
      for (unsigned n = 1; n <= 10; ++n) {
        const Signal f = random_signal(n, ring, rng);
        const auto fast = tmft_fast(f, scheme);
        const auto direct = tmft_direct(f, scheme);
        const auto inverse = itmft(fast.spectrum);
        const OpCounter zero_mults{fast.ops.additions, 0};
        if (fast.ops != zero_mults) return false;
        if (fast.ops.additions != cost_fast_tmft(n) || direct.ops.additions != cost_tmft(n) ||
            inverse.ops.additions != cost_itmft(n) || direct.ops.multiplications != 0 ||
            inverse.ops.multiplications != 0) {
          os << "      mismatch at n=" << n << " ring=" << ring.spec_string() << " scheme="
             << scheme_name(scheme) << '\n';
          return false;
        }
        if (direct.spectrum != fast.spectrum) return false;
      }
    }
  }
  return true;
}

bool convolution_cross_check() {
  const std::array<Ring, 3> rings = {Ring::bitvec(8), Ring::poly(4, 0x11), Ring::gf(8, 0x11b)};
  std::mt19937_64 rng(13);
  for (const auto& ring : rings) {
    for (unsigned n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const Signal r = random_signal(n, ring, rng);
        const Signal s = random_signal(n, ring, rng);
        const auto spectral = convolve_via_tmft(r, s);
        if (spectral.signal != convolve_direct(r, s).signal) return false;
        if (spectral.transform_ops.additions != cost_spectral_transform_adds(n)) return false;
      }
    }
  }
  return true;
}

}  // namespace

int run_selftest(std::ostream& os) {
  int failures = 0;
  const auto item = [&](const char* name, const std::function<bool()>& fn) {
    const bool ok = fn();
    os << (ok ? "ok   " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };
  item("labeling table n=3", labeling_table);
  item("fast coefficient groupings n=3", fast_groupings);
  item("impulse and indicator spectra", impulse_and_indicator);
  item("inverse corner arguments n=3", inverse_corner_arguments);
  item("counter exactness n=1..10, all kinds, both schemes",
       [&] { return counter_exactness(os); });
  item("spectral vs direct convolution n<=6", convolution_cross_check);
  return failures;
}

}  // namespace tmft
