#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "tmft/convolution.hpp"
#include "tmft/parallel.hpp"
#include "tmft/transform.hpp"

// Compares the serial reference kernels against the OpenMP lane and verifies
// that both produce identical spectra/signals and identical tallies. Timings
// are informational only.

namespace {

using namespace tmft;
using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* kernel, unsigned n, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-14s n=%-2u serial %10.3f ms   parallel %10.3f ms   speedup %5.2fx   %s\n",
              kernel, n, serial_ms, parallel_ms, serial_ms / parallel_ms,
              equal ? "outputs equal" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel comparison"};
  unsigned n_min = 8;
  unsigned n_max = 12;
  unsigned conv_max = 11;
  int reps = 3;
  std::string ring_spec = "gf:8:11b";
  app.add_option("--min", n_min, "smallest exponent (default 8)");
  app.add_option("--max", n_max, "largest exponent (default 12)");
  app.add_option("--conv-max", conv_max, "largest exponent for direct convolution (default 11)");
  app.add_option("--reps", reps, "repetitions per timing, best-of (default 3)");
  app.add_option("--ring", ring_spec, "ring spec (default gf:8:11b)");
  CLI11_PARSE(app, argc, argv);

  const Ring ring = Ring::parse_spec(ring_spec);
  std::mt19937_64 rng(1);
  std::printf("ring %s, hardware threads %u\n", ring.spec_string().c_str(),
              std::thread::hardware_concurrency());

  bool all_equal = true;
  for (unsigned n = n_min; n <= n_max; ++n) {
    Signal f{n, ring, std::vector<elem>(std::size_t{1} << n)};
    for (auto& v : f.values) v = rng() & ring.mask();

    {
      TransformResult serial_out = tmft_fast(f);
      TransformResult parallel_out = par::tmft_fast(f);
      const bool equal =
          serial_out.spectrum == parallel_out.spectrum && serial_out.ops == parallel_out.ops;
      all_equal &= equal;
      report("fast", n, time_ms([&] { tmft_fast(f); }, reps),
             time_ms([&] { par::tmft_fast(f); }, reps), equal);
      report("fast (zeta)", n, time_ms([&] { tmft_fast_zeta(f); }, reps),
             time_ms([&] { par::tmft_fast(f); }, reps),
             tmft_fast_zeta(f) == serial_out.spectrum);

      InverseResult inv_serial = itmft(serial_out.spectrum);
      InverseResult inv_parallel = par::itmft(serial_out.spectrum);
      const bool inv_equal =
          inv_serial.signal == inv_parallel.signal && inv_serial.ops == inv_parallel.ops;
      all_equal &= inv_equal;
      report("inverse", n, time_ms([&] { itmft(serial_out.spectrum); }, reps),
             time_ms([&] { par::itmft(serial_out.spectrum); }, reps), inv_equal);
    }
    {
      TransformResult serial_out = tmft_direct(f);
      TransformResult parallel_out = par::tmft_direct(f);
      const bool equal =
          serial_out.spectrum == parallel_out.spectrum && serial_out.ops == parallel_out.ops;
      all_equal &= equal;
      report("direct", n, time_ms([&] { tmft_direct(f); }, reps),
             time_ms([&] { par::tmft_direct(f); }, reps), equal);
    }
    if (n <= conv_max) {
      Signal g{n, ring, std::vector<elem>(std::size_t{1} << n)};
      for (auto& v : g.values) v = rng() & ring.mask();
      ConvolveResult serial_out = convolve_direct(f, g);
      ConvolveResult parallel_out = par::convolve_direct(f, g);
      const bool equal =
          serial_out.signal == parallel_out.signal && serial_out.ops == parallel_out.ops;
      all_equal &= equal;
      report("convolve", n, time_ms([&] { convolve_direct(f, g); }, reps),
             time_ms([&] { par::convolve_direct(f, g); }, reps), equal);
    }
  }
  return all_equal ? 0 : 1;
}
