#include "tmft/convolution.hpp"

namespace tmft {

namespace {

void check_pair(const Signal& r, const Signal& s) {
  check_signal(r);
  check_signal(s);
  if (r.n != s.n) throw std::invalid_argument("signals have different exponents");
  if (!(r.ring == s.ring)) throw std::invalid_argument("signals live in different rings");
}

}  // namespace

ConvolveResult convolve_direct(const Signal& r, const Signal& s) {
  check_pair(r, s);
  CountingRing cr(r.ring);
  const std::size_t size = r.values.size();
  Signal out{r.n, r.ring, std::vector<elem>(size)};
  for (u64 g = 0; g < size; ++g) {
    elem acc = cr.mul(r.values[g], s.values[0]);
    for (u64 gp = 1; gp < size; ++gp)
      acc = cr.add(acc, cr.mul(r.values[gp ^ g], s.values[gp]));
    out.values[g] = acc;
  }
  return {std::move(out), cr.ops()};
}

SpectralProductResult spectral_product(const Spectrum& R, const Spectrum& S) {
  check_spectrum_shape(R);
  check_spectrum_shape(S);
  if (R.n != S.n || !(R.ring == S.ring) || R.scheme != S.scheme)
    throw std::invalid_argument("spectra disagree on exponent, ring or scheme");

  CountingRing cr(R.ring);
  Spectrum out{R.n, R.ring, R.scheme, {}};
  out.rows.resize(R.n + 1);
  out.rows[0] = {cr.mul(R.dc(), S.dc())};
  for (unsigned k = 1; k <= R.n; ++k) {
    const RingMatrix dense = matrix_from_first_row(S.rows[k]);
    const auto& row = R.rows[k];
    auto& prod = out.rows[k];
    prod.resize(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      elem acc = cr.mul(row[0], dense(0, c));
      for (std::size_t r = 1; r <= c; ++r) acc = cr.add(acc, cr.mul(row[r], dense(r, c)));
      prod[c] = acc;
    }
  }
  return {std::move(out), cr.ops()};
}

SpectralConvolveResult convolve_via_tmft(const Signal& r, const Signal& s, LabelScheme scheme) {
  check_pair(r, s);
  auto fr = tmft_fast(r, scheme);
  auto fs = tmft_fast(s, scheme);
  auto prod = spectral_product(fr.spectrum, fs.spectrum);
  auto inv = itmft(prod.spectrum);
  return {std::move(inv.signal), fr.ops + fs.ops + inv.ops, prod.ops};
}

Signal shift(const Signal& f, u64 a) {
  check_signal(f);
  if (f.n < 64 && a >> f.n != 0) throw std::invalid_argument("shift amount out of range");
  Signal out{f.n, f.ring, std::vector<elem>(f.values.size())};
  for (u64 g = 0; g < f.values.size(); ++g) out.values[g] = f.values[g ^ a];
  return out;
}

}  // namespace tmft
