#include "tmft/transform.hpp"

#include "kernels.hpp"

namespace tmft {

namespace {

Spectrum empty_spectrum(const Signal& f, LabelScheme scheme) {
  Spectrum out{f.n, f.ring, scheme, {}};
  out.rows.resize(f.n + 1);
  return out;
}

}  // namespace

TransformResult tmft_direct(const Signal& f, LabelScheme scheme) {
  check_signal(f);
  const Ring& ring = f.ring;
  const unsigned n = f.n;
  Spectrum out = empty_spectrum(f, scheme);
  if (n == 0) {
    out.rows[0] = {f.values[0]};
    return {std::move(out), {}};
  }

  u64 adds = 0;
  const std::size_t size = std::size_t{1} << n;

  // top level first: its leading entry is the DC value reused by every lower row
  {
    const auto labels = detail::level_labels(n, n, scheme);
    auto& row = out.rows[n];
    row.resize(size);
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
    for (u64 c = 1; c < row.size(); ++c)
      row[c] = detail::masked_scan_sum(ring, f.values, labels, c, adds);
  }
  return {std::move(out), OpCounter{adds, 0}};
}

TransformResult tmft_fast(const Signal& f, LabelScheme scheme, FastTrace* trace) {
  check_signal(f);
  const Ring& ring = f.ring;
  const unsigned n = f.n;
  Spectrum out = empty_spectrum(f, scheme);
  if (trace) trace->level_coeffs.assign(n + 1, {});
  if (n == 0) {
    out.rows[0] = {f.values[0]};
    if (trace) trace->level_coeffs[0] = {f.values[0]};
    return {std::move(out), {}};
  }

  u64 adds = 0;
  const std::size_t size = std::size_t{1} << n;
  const u64 full = low_mask(n);

  std::vector<elem> coeff(size);
  for (u64 j = 0; j < size; ++j) coeff[label_bits(n, j, scheme)] = f.values[j];

  auto& top = out.rows[n];
  top.resize(size);
  for (u64 c = 0; c < size; ++c) top[c] = detail::superset_sum(ring, coeff, c, full, adds);
  const elem dc = top[0];
  out.rows[0] = {dc};
  if (trace) {
    trace->level_coeffs[n] = coeff;
    trace->level_coeffs[0] = {dc};
  }

  for (unsigned k = n - 1; k >= 1; --k) {
    const u64 level_mask = low_mask(k);
    std::vector<elem> folded(std::size_t{1} << k);
    for (u64 p = 1; p <= level_mask; ++p) {
      const auto [lo, hi] = fold_children(k, p, scheme);
      folded[p] = ring.add(coeff[lo], coeff[hi]);
      ++adds;
    }
    if (trace) {
      // the zero-label coefficient feeds only the copied leading entry; fill
      // it for the trace without touching the tally. Its children include the
      // previous level's zero label, which only the traced table holds.
      auto table = folded;
      const auto [lo, hi] = fold_children(k, 0, scheme);
      const auto& above = trace->level_coeffs[k + 1];
      table[0] = ring.add(above[lo], above[hi]);
      trace->level_coeffs[k] = std::move(table);
    }

    auto& row = out.rows[k];
    row.resize(folded.size());
    row[0] = dc;
    for (u64 c = 1; c <= level_mask; ++c)
      row[c] = detail::superset_sum(ring, folded, c, level_mask, adds);
    coeff = std::move(folded);
  }
  return {std::move(out), OpCounter{adds, 0}};
}

Spectrum tmft_fast_zeta(const Signal& f, LabelScheme scheme) {
  check_signal(f);
  const Ring& ring = f.ring;
  const unsigned n = f.n;
  Spectrum out = empty_spectrum(f, scheme);
  if (n == 0) {
    out.rows[0] = {f.values[0]};
    return out;
  }

  const std::size_t size = std::size_t{1} << n;
  std::vector<elem> coeff(size);
  for (u64 j = 0; j < size; ++j) coeff[label_bits(n, j, scheme)] = f.values[j];

  for (unsigned k = n; k >= 1; --k) {
    if (k < n) {
      std::vector<elem> folded(std::size_t{1} << k);
      for (u64 p = 0; p < folded.size(); ++p) {
        const auto [lo, hi] = fold_children(k, p, scheme);
        folded[p] = ring.add(coeff[lo], coeff[hi]);
      }
      coeff = std::move(folded);
    }
    // in-place superset-sum sweep over the k-bit lattice
    auto row = coeff;
    for (unsigned bit = 0; bit < k; ++bit)
      for (u64 c = 0; c < row.size(); ++c)
        if (((c >> bit) & 1) == 0) row[c] = ring.add(row[c], row[c | (u64{1} << bit)]);
    out.rows[k] = std::move(row);
  }
  out.rows[0] = {out.rows[n][0]};
  return out;
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
  // corner_tab[k][b] = corner of (level-k matrix times the b-labeled basis
  // matrix) = sum of the row entries selected by b's last column
  std::vector<std::vector<elem>> corner_tab(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    const u64 level_mask = low_mask(k);
    corner_tab[k].resize(std::size_t{1} << k);
    for (u64 b = 0; b <= level_mask; ++b)
      corner_tab[k][b] = detail::superset_sum(ring, F.rows[k], level_mask ^ b, level_mask, adds);
  }

  for (u64 j = 0; j < out.values.size(); ++j) {
    elem acc = dc;
    for (unsigned k = 1; k <= n; ++k) {
      acc = ring.add(acc, corner_tab[k][label_bits(k, j & low_mask(k), F.scheme)]);
      ++adds;
    }
    out.values[j] = acc;
  }
  return {std::move(out), OpCounter{adds, 0}};
}

RingMatrix coefficient_matrix(const Spectrum& F, unsigned k) {
  check_spectrum_shape(F);
  if (k == 0 || k > F.n) throw std::invalid_argument("level k must satisfy 1 <= k <= n");
  return matrix_from_first_row(F.rows[k]);
}

std::vector<RepLabel> basis_labels(unsigned n, unsigned k, LabelScheme scheme) {
  if (n > kMaxTransformBits) throw std::invalid_argument("exponent too large");
  if (k > n) throw std::invalid_argument("level k must satisfy 0 <= k <= n");
  std::vector<RepLabel> labels(std::size_t{1} << n);
  for (u64 g = 0; g < labels.size(); ++g)
    labels[g] = k == 0 ? RepLabel{0, 0} : RepLabel{k, rep_label_bits(n, k, g, scheme)};
  return labels;
}

}  // namespace tmft
