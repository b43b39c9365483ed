#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmft {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Malformed external input: file contents, element text. CLI maps this to exit code 2.
class FormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally well-formed data that violates a documented invariant
// (e.g. a spectrum whose per-level leading entries disagree with the DC value).
// CLI maps this to exit code 3.
class InvariantError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tally of ring operations performed by one computation. Counters only grow.
struct OpCounter {
  u64 additions = 0;
  u64 multiplications = 0;

  OpCounter& operator+=(const OpCounter& o) {
    additions += o.additions;
    multiplications += o.multiplications;
    return *this;
  }
  friend OpCounter operator+(OpCounter a, const OpCounter& b) { return a += b; }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

constexpr u64 low_mask(unsigned bits) {
  return bits >= 64 ? ~u64{0} : (u64{1} << bits) - 1;
}

// lowercase, no leading zeros, "0" for zero
std::string hex_string(u128 v);
std::string dec_string(u128 v);

// nullopt on empty input, non-hex digit or overflow past 128 bits
std::optional<u128> parse_hex(std::string_view text);

}  // namespace tmft
