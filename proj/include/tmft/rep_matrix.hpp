#pragma once

#include <span>
#include <vector>

#include "tmft/ring.hpp"

namespace tmft {

// Identifies the 2^k x 2^k representation matrix of the k-bit vector `bits`
// (MSB-first). Matrix row/column indices use the same MSB-first convention.
struct RepLabel {
  unsigned k;
  u64 bits;

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

inline constexpr unsigned kMaxRepBits = 20;

// Dense square matrix of ring elements, row-major, side a power of two.
class RingMatrix {
 public:
  explicit RingMatrix(std::size_t size);

  std::size_t size() const { return size_; }
  elem operator()(std::size_t r, std::size_t c) const { return cells_[r * size_ + c]; }
  elem& operator()(std::size_t r, std::size_t c) { return cells_[r * size_ + c]; }
  std::span<const elem> row(std::size_t r) const { return {cells_.data() + r * size_, size_}; }

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<elem> cells_;
};

// Packed bit vector; holds one bit per matrix row or column.
class BitVec {
 public:
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i) { words_[i / 64] |= u64{1} << (i % 64); }
  std::size_t count() const;

 private:
  std::size_t size_;
  std::vector<u64> words_;
};

// Entry (r, c) of the representation matrix, evaluated without materializing
// it: nonzero iff r never exceeds c in any bit position and the positions
// where r and c disagree all lie inside the label.
bool rep_entry(RepLabel label, u64 r, u64 c);

// The representation matrix built by repeated 2x2 blow-up (leftmost label bit
// first), entries being the ring's zero and one.
RingMatrix rep_matrix(const Ring& ring, RepLabel label);

// First row (bit c set iff c is a submask of the label) and last column
// (bit r set iff the complement of r is a submask). Both have exactly
// 2^popcount(label) set bits.
BitVec rep_first_row(RepLabel label);
BitVec rep_last_column(RepLabel label);

// Top-right corner element. Replaces the trace in the inversion formula,
// which vanishes identically in characteristic 2.
elem corner(const RingMatrix& m);

// Rebuilds the unique matrix in the span of the representation matrices with
// the given first row, by the block-copy recursion: stage j appends below the
// current 2^j-row block a copy of its even column-blocks shifted one block to
// the right. Performs no ring operations.
RingMatrix matrix_from_first_row(std::span<const elem> first_row);

}  // namespace tmft
