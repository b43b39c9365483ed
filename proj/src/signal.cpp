#include "tmft/signal.hpp"

#include "tmft/transform.hpp"

namespace tmft {

Signal dirac(unsigned n, const Ring& ring) { return indicator(n, 0, ring); }

Signal indicator(unsigned n, u64 g0, const Ring& ring) {
  if (n > kMaxTransformBits) throw std::invalid_argument("signal exponent too large");
  if (n < 64 && g0 >> n != 0) throw std::invalid_argument("indicator position out of range");
  Signal f{n, ring, std::vector<elem>(std::size_t{1} << n, ring.zero())};
  f.values[g0] = ring.one();
  return f;
}

void check_signal(const Signal& f) {
  if (f.n > kMaxTransformBits) throw std::invalid_argument("signal exponent too large");
  if (f.values.size() != (std::size_t{1} << f.n))
    throw std::invalid_argument("signal length must be 2^n");
  for (elem v : f.values)
    if ((v & ~f.ring.mask()) != 0) throw std::invalid_argument("signal value outside the ring");
}

void check_spectrum_shape(const Spectrum& F) {
  if (F.n > kMaxTransformBits) throw std::invalid_argument("spectrum exponent too large");
  if (F.rows.size() != F.n + 1) throw std::invalid_argument("spectrum must hold n+1 rows");
  for (unsigned k = 0; k <= F.n; ++k) {
    const std::size_t want = k == 0 ? 1 : std::size_t{1} << k;
    if (F.rows[k].size() != want) throw std::invalid_argument("spectrum row has wrong length");
    for (elem v : F.rows[k])
      if ((v & ~F.ring.mask()) != 0) throw std::invalid_argument("spectrum value outside the ring");
  }
}

}  // namespace tmft
