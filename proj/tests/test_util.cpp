#include "test_util.hpp"

namespace tmft::test {

Signal random_signal(unsigned n, const Ring& ring, std::mt19937_64& rng) {
  Signal f{n, ring, std::vector<elem>(std::size_t{1} << n)};
  for (auto& v : f.values) v = random_elem(ring, rng);
  return f;
}

RingMatrix mat_mul(const Ring& ring, const RingMatrix& a, const RingMatrix& b) {
  RingMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) {
      elem acc = ring.zero();
      for (std::size_t t = 0; t < a.size(); ++t)
        acc = ring.add(acc, ring.mul(a(r, t), b(t, c)));
      out(r, c) = acc;
    }
  return out;
}

RingMatrix span_matrix(const Ring& ring, unsigned k, const std::vector<elem>& lambda) {
  RingMatrix out(std::size_t{1} << k);
  for (u64 b = 0; b < lambda.size(); ++b) {
    const RingMatrix e = rep_matrix(ring, {k, b});
    for (std::size_t r = 0; r < out.size(); ++r)
      for (std::size_t c = 0; c < out.size(); ++c)
        out(r, c) = ring.add(out(r, c), ring.mul(lambda[b], e(r, c)));
  }
  return out;
}

std::vector<elem> row_times_matrix(const Ring& ring, const std::vector<elem>& row,
                                   const RingMatrix& m) {
  std::vector<elem> out(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    elem acc = ring.zero();
    for (std::size_t r = 0; r < m.size(); ++r) acc = ring.add(acc, ring.mul(row[r], m(r, c)));
    out[c] = acc;
  }
  return out;
}

RingMatrix dense_coefficient_oracle(const Signal& f, unsigned k, LabelScheme scheme) {
  std::vector<elem> lambda(std::size_t{1} << k, f.ring.zero());
  for (u64 g = 0; g < f.values.size(); ++g) {
    const u64 b = rep_label_bits(f.n, k, g, scheme);
    lambda[b] = f.ring.add(lambda[b], f.values[g]);
  }
  return span_matrix(f.ring, k, lambda);
}

u64 tree_label_recursive(unsigned k, u64 slice) {
  if (k == 0) return 0;
  const u64 below = tree_label_recursive(k - 1, slice & low_mask(k - 1));
  const bool top = (slice >> (k - 1)) & 1;
  // prepend 0, or complement and prepend 1
  return top ? (u64{1} << (k - 1)) | (~below & low_mask(k - 1)) : below;
}

u64 flat_label_recursive(unsigned k, u64 slice) {
  // decompose into a representative below the generator plus the generator bit
  const u64 rep = slice & low_mask(k - 1);
  const bool gen = (slice >> (k - 1)) & 1;
  return gen ? rep ^ low_mask(k) : rep;
}

Spectrum spectrum_linear(const Ring& ring, elem alpha, const Spectrum& a, elem beta,
                         const Spectrum& b) {
  Spectrum out = a;
  for (unsigned k = 0; k <= a.n; ++k)
    for (std::size_t i = 0; i < a.rows[k].size(); ++i)
      out.rows[k][i] =
          ring.add(ring.mul(alpha, a.rows[k][i]), ring.mul(beta, b.rows[k][i]));
  return out;
}

}  // namespace tmft::test
