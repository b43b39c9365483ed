#include "tmft/parallel.hpp"

#include "kernels.hpp"

namespace tmft::par {

TransformResult tmft_direct(const Signal& f, LabelScheme scheme) {
  check_signal(f);
  const Ring& ring = f.ring;
  const unsigned n = f.n;
  Spectrum out{n, ring, scheme, {}};
  out.rows.resize(n + 1);
  if (n == 0) {
    out.rows[0] = {f.values[0]};
    return {std::move(out), {}};
  }

  u64 adds = 0;
  const std::size_t size = std::size_t{1} << n;
  {
    const auto labels = detail::level_labels(n, n, scheme);
    auto& row = out.rows[n];
    row.resize(size);
#pragma omp parallel for schedule(static) reduction(+ : adds)
    for (u64 c = 0; c < size; ++c)
      row[c] = detail::masked_scan_sum(ring, f.values, labels, c, adds);
  }
  const elem dc = out.rows[n][0];
  out.rows[0] = {dc};

  for (unsigned k = 1; k < n; ++k) {
    const auto labels = detail::level_labels(n, k, scheme);
    auto& row = out.rows[k];
    row.resize(std::size_t{1} << k);
    row[0] = dc;
    const u64 row_size = row.size();
#pragma omp parallel for schedule(static) reduction(+ : adds)
    for (u64 c = 1; c < row_size; ++c)
      row[c] = detail::masked_scan_sum(ring, f.values, labels, c, adds);
  }
  return {std::move(out), OpCounter{adds, 0}};
}

TransformResult tmft_fast(const Signal& f, LabelScheme scheme) {
  check_signal(f);
  const Ring& ring = f.ring;
  const unsigned n = f.n;
  Spectrum out{n, ring, scheme, {}};
  out.rows.resize(n + 1);
  if (n == 0) {
    out.rows[0] = {f.values[0]};
    return {std::move(out), {}};
  }

  u64 adds = 0;
  const std::size_t size = std::size_t{1} << n;
  const u64 full = low_mask(n);

  std::vector<elem> coeff(size);
  for (u64 j = 0; j < size; ++j) coeff[label_bits(n, j, scheme)] = f.values[j];

  auto& top = out.rows[n];
  top.resize(size);
#pragma omp parallel for schedule(static) reduction(+ : adds)
  for (u64 c = 0; c < size; ++c) top[c] = detail::superset_sum(ring, coeff, c, full, adds);
  const elem dc = top[0];
  out.rows[0] = {dc};

  for (unsigned k = n - 1; k >= 1; --k) {
    const u64 level_mask = low_mask(k);
    const u64 level_size = u64{1} << k;
    std::vector<elem> folded(level_size);
    // level folding is level-synchronous and cheap; kept serial
    for (u64 p = 1; p < level_size; ++p) {
      const auto [lo, hi] = fold_children(k, p, scheme);
      folded[p] = ring.add(coeff[lo], coeff[hi]);
      ++adds;
    }
    auto& row = out.rows[k];
    row.resize(level_size);
    row[0] = dc;
#pragma omp parallel for schedule(static) reduction(+ : adds)
    for (u64 c = 1; c < level_size; ++c)
      row[c] = detail::superset_sum(ring, folded, c, level_mask, adds);
    coeff = std::move(folded);
  }
  return {std::move(out), OpCounter{adds, 0}};
}

InverseResult itmft(const Spectrum& F) {
  check_spectrum_shape(F);
  const Ring& ring = F.ring;
  const unsigned n = F.n;
  const elem dc = F.dc();
  for (unsigned k = 1; k <= n; ++k)
    if (F.rows[k][0] != dc)
      throw InvariantError("spectrum row " + std::to_string(k) +
                           " disagrees with the DC component");

  Signal out{n, ring, std::vector<elem>(std::size_t{1} << n)};
  if (n == 0) {
    out.values[0] = dc;
    return {std::move(out), {}};
  }

  u64 adds = 0;
  std::vector<std::vector<elem>> corner_tab(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    const u64 level_mask = low_mask(k);
    const u64 level_size = u64{1} << k;
    auto& tab = corner_tab[k];
    tab.resize(level_size);
    const auto& row = F.rows[k];
#pragma omp parallel for schedule(static) reduction(+ : adds)
    for (u64 b = 0; b < level_size; ++b)
      tab[b] = detail::superset_sum(ring, row, level_mask ^ b, level_mask, adds);
  }

  const u64 size = out.values.size();
  const LabelScheme scheme = F.scheme;
#pragma omp parallel for schedule(static) reduction(+ : adds)
  for (u64 j = 0; j < size; ++j) {
    elem acc = dc;
    for (unsigned k = 1; k <= n; ++k) {
      acc = ring.add(acc, corner_tab[k][label_bits(k, j & low_mask(k), scheme)]);
      ++adds;
    }
    out.values[j] = acc;
  }
  return {std::move(out), OpCounter{adds, 0}};
}

ConvolveResult convolve_direct(const Signal& r, const Signal& s) {
  check_signal(r);
  check_signal(s);
  if (r.n != s.n) throw std::invalid_argument("signals have different exponents");
  if (!(r.ring == s.ring)) throw std::invalid_argument("signals live in different rings");

  const Ring& ring = r.ring;
  const u64 size = r.values.size();
  Signal out{r.n, ring, std::vector<elem>(size)};
  u64 adds = 0;
  u64 mults = 0;
#pragma omp parallel for schedule(static) reduction(+ : adds, mults)
  for (u64 g = 0; g < size; ++g) {
    elem acc = ring.mul(r.values[g], s.values[0]);
    ++mults;
    for (u64 gp = 1; gp < size; ++gp) {
      acc = ring.add(acc, ring.mul(r.values[gp ^ g], s.values[gp]));
      ++adds;
      ++mults;
    }
    out.values[g] = acc;
  }
  return {std::move(out), OpCounter{adds, mults}};
}

}  // namespace tmft::par
