#include <doctest.h>

#include <array>

#include "test_util.hpp"
#include "tmft/parallel.hpp"

using namespace tmft;

// The OpenMP lane must be indistinguishable from the serial reference:
// identical spectra/signals and identical tallies.

TEST_CASE("parallel kernels match the serial reference") {
  const std::array<Ring, 3> rings = {Ring::bitvec(8), Ring::poly(4, 0x11), Ring::gf(8, 0x11b)};
  auto rng = test::make_rng(61);
  for (const auto& ring : rings)
    for (LabelScheme scheme : {LabelScheme::tree, LabelScheme::flat})
      for (unsigned n = 1; n <= 10; ++n) {
        const Signal f = test::random_signal(n, ring, rng);

        const auto fast_s = tmft_fast(f, scheme);
        const auto fast_p = par::tmft_fast(f, scheme);
        CHECK(fast_s.spectrum == fast_p.spectrum);
        CHECK(fast_s.ops == fast_p.ops);

        const auto direct_s = tmft_direct(f, scheme);
        const auto direct_p = par::tmft_direct(f, scheme);
        CHECK(direct_s.spectrum == direct_p.spectrum);
        CHECK(direct_s.ops == direct_p.ops);

        const auto inv_s = itmft(fast_s.spectrum);
        const auto inv_p = par::itmft(fast_s.spectrum);
        CHECK(inv_s.signal == inv_p.signal);
        CHECK(inv_s.ops == inv_p.ops);
      }
}

TEST_CASE("parallel direct convolution matches") {
  const Ring ring = Ring::gf(8, 0x11b);
  auto rng = test::make_rng(62);
  for (unsigned n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const Signal a = test::random_signal(n, ring, rng);
      const Signal b = test::random_signal(n, ring, rng);
      const auto serial = convolve_direct(a, b);
      const auto parallel = par::convolve_direct(a, b);
      CHECK(serial.signal == parallel.signal);
      CHECK(serial.ops == parallel.ops);
    }
}

TEST_CASE("parallel inverse enforces the same invariants") {
  const Ring ring = Ring::gf(8, 0x11b);
  auto rng = test::make_rng(63);
  auto F = tmft_fast(test::random_signal(3, ring, rng)).spectrum;
  F.rows[1][0] = ring.add(F.rows[1][0], ring.one());
  CHECK_THROWS_AS(par::itmft(F), InvariantError);
}

TEST_CASE("trivial sizes stay trivial in parallel") {
  const Ring ring = Ring::bitvec(4);
  const Signal f{0, ring, {0xa}};
  CHECK(par::tmft_fast(f).spectrum.rows == std::vector<std::vector<elem>>{{0xa}});
  CHECK(par::tmft_direct(f).ops == OpCounter{});
}
