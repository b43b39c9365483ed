#include "tmft/rep_matrix.hpp"

#include <bit>

namespace tmft {

namespace {

void check_label(RepLabel label) {
  if (label.k == 0 || label.k > kMaxRepBits)
    throw std::invalid_argument("representation label width must be in 1..20");
  if (label.bits >> label.k != 0)
    throw std::invalid_argument("label bits wider than the stated width");
}

}  // namespace

RingMatrix::RingMatrix(std::size_t size) : size_(size), cells_(size * size, elem{}) {
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("matrix size must be a power of two");
}

std::size_t BitVec::count() const {
  std::size_t total = 0;
  for (u64 w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool rep_entry(RepLabel label, u64 r, u64 c) {
  check_label(label);
  const u64 full = low_mask(label.k);
  if (r > full || c > full) throw std::invalid_argument("matrix index out of range");
  return (r & ~c) == 0 && ((r ^ c) & ~label.bits) == 0;
}

RingMatrix rep_matrix(const Ring& ring, RepLabel label) {
  check_label(label);
  RingMatrix m(1);
  m(0, 0) = ring.one();
  for (unsigned i = 0; i < label.k; ++i) {
    const bool bit = (label.bits >> (label.k - 1 - i)) & 1;
    RingMatrix next(m.size() * 2);
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (std::size_t c = 0; c < m.size(); ++c) {
        const elem v = m(r, c);
        if (v == 0) continue;
        next(2 * r, 2 * c) = v;
        next(2 * r + 1, 2 * c + 1) = v;
        if (bit) next(2 * r, 2 * c + 1) = v;
      }
    }
    m = std::move(next);
  }
  return m;
}

BitVec rep_first_row(RepLabel label) {
  check_label(label);
  BitVec v(std::size_t{1} << label.k);
  for (u64 c = 0; c < v.size(); ++c)
    if ((c & ~label.bits) == 0) v.set(c);
  return v;
}

BitVec rep_last_column(RepLabel label) {
  check_label(label);
  const u64 full = low_mask(label.k);
  BitVec v(std::size_t{1} << label.k);
  for (u64 r = 0; r < v.size(); ++r)
    if (((full ^ r) & ~label.bits) == 0) v.set(r);
  return v;
}

elem corner(const RingMatrix& m) { return m(0, m.size() - 1); }

RingMatrix matrix_from_first_row(std::span<const elem> first_row) {
  const std::size_t size = first_row.size();
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("first row length must be a power of two");
  RingMatrix m(size);
  for (std::size_t c = 0; c < size; ++c) m(0, c) = first_row[c];
  for (std::size_t filled = 1; filled < size; filled *= 2) {
    // rows [filled, 2*filled) receive shifted copies; untouched cells stay zero
    for (std::size_t r = 0; r < filled; ++r)
      for (std::size_t base = 0; base + 2 * filled <= size; base += 2 * filled)
        for (std::size_t c = 0; c < filled; ++c)
          m(filled + r, base + filled + c) = m(r, base + c);
  }
  return m;
}

}  // namespace tmft
