#pragma once

#include <string>
#include <string_view>

#include "tmft/common.hpp"

namespace tmft {

// An element of a finite commutative ring of characteristic 2, packed into the
// low `width` bits of a word. Bit 0 is the constant coefficient.
using elem = u64;

enum class RingKind { bitvec, poly, gf };

struct RingSpec {
  RingKind kind;
  unsigned width;  // m, 1..64
  u128 modulus;    // degree-m binary polynomial including its leading term; 0 for bitvec

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// A configurable finite commutative ring of characteristic 2:
//   bitvec  (F2^m, xor, and)
//   poly    F2[x] / phi(x), phi any degree-m polynomial
//   gf      F2[x] / phi(x), phi irreducible, i.e. the field F_{2^m}
//
// Rings are immutable values and safe to share across threads.
class Ring {
 public:
  static Ring bitvec(unsigned m);
  static Ring poly(unsigned m, u128 modulus);
  static Ring gf(unsigned m, u128 modulus);
  static Ring make(const RingSpec& spec);

  // Grammar: bitvec:<m> | poly:<m>:<phi-hex> | gf:<m>:<phi-hex>, e.g. "gf:8:11b".
  static Ring parse_spec(std::string_view text);

  elem zero() const { return 0; }
  elem one() const { return one_; }
  // Addition is xor of coefficient vectors in every kind.
  elem add(elem a, elem b) const { return a ^ b; }
  elem mul(elem a, elem b) const;

  unsigned width() const { return spec_.width; }
  RingKind kind() const { return spec_.kind; }
  u64 mask() const { return low_mask(spec_.width); }
  const RingSpec& spec() const { return spec_; }
  std::string spec_string() const;

  // Canonical textual element encoding is lowercase minimal hex.
  elem parse(std::string_view text) const;  // throws FormatError
  std::string format(elem v) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.spec_ == b.spec_; }

 private:
  explicit Ring(const RingSpec& spec);

  RingSpec spec_;
  elem one_;
};

// Delegating wrapper that tallies ring operations. Holds per-invocation state:
// one counter per running computation, never shared between concurrent transforms.
class CountingRing {
 public:
  explicit CountingRing(const Ring& ring) : ring_(&ring) {}

  elem zero() const { return ring_->zero(); }
  elem one() const { return ring_->one(); }
  elem add(elem a, elem b) {
    ++ops_.additions;
    return ring_->add(a, b);
  }
  elem mul(elem a, elem b) {
    ++ops_.multiplications;
    return ring_->mul(a, b);
  }

  const Ring& ring() const { return *ring_; }
  const OpCounter& ops() const { return ops_; }

 private:
  const Ring* ring_;
  OpCounter ops_;
};

// True iff `phi` (with (phi >> degree) == 1) has no nontrivial factor over F2.
bool is_irreducible(u128 phi, unsigned degree);

namespace detail {
// Exhaustive divisor trial, practical for degree <= 32.
bool irreducible_by_trial(u128 phi, unsigned degree);
// Squaring-based test, used for larger degrees.
bool irreducible_by_squaring(u128 phi, unsigned degree);
}  // namespace detail

}  // namespace tmft
