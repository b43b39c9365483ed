#include "tmft/group.hpp"

namespace tmft {

namespace {

void check_level(unsigned n, unsigned k) {
  if (k == 0 || k > n) throw std::invalid_argument("level k must satisfy 1 <= k <= n");
}

}  // namespace

GroupElem group_add(GroupElem a, GroupElem b) {
  if (a.n != b.n) throw std::invalid_argument("group elements have different widths");
  return {a.n, a.index ^ b.index};
}

u64 index_of_bits(std::span<const u8> bits) {
  if (bits.size() > 64) throw std::invalid_argument("bit vectors are limited to 64 bits");
  u64 j = 0;
  for (u8 b : bits) {
    if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
    j = (j << 1) | b;
  }
  return j;
}

std::vector<u8> bits_of_index(u64 j, unsigned n) {
  if (n > 64) throw std::invalid_argument("bit vectors are limited to 64 bits");
  if (n < 64 && j >> n != 0) throw std::invalid_argument("index out of range for width");
  std::vector<u8> bits(n);
  for (unsigned i = 0; i < n; ++i) bits[i] = static_cast<u8>((j >> (n - 1 - i)) & 1);
  return bits;
}

GroupElem level_generator(unsigned n, unsigned k) {
  check_level(n, k);
  return {n, u64{1} << (k - 1)};
}

std::vector<GroupElem> enumerate_subgroup(unsigned n, unsigned k, SubgroupSet which) {
  check_level(n, k);
  if (n >= 63) throw std::invalid_argument("enumeration is limited to n < 63");
  std::vector<GroupElem> out;
  switch (which) {
    case SubgroupSet::subgroup:
      out.reserve(std::size_t{1} << k);
      for (u64 j = 0; j < (u64{1} << k); ++j) out.push_back({n, j});
      break;
    case SubgroupSet::quotient:
      out.reserve(std::size_t{1} << (n - k));
      for (u64 j = 0; j < (u64{1} << (n - k)); ++j) out.push_back({n, j << k});
      break;
    case SubgroupSet::subgroup_mod_generator:
      out.reserve(std::size_t{1} << (k - 1));
      for (u64 j = 0; j < (u64{1} << (k - 1)); ++j) out.push_back({n, j});
      break;
  }
  return out;
}

u64 half_label(unsigned n, unsigned k, u64 u) {
  check_level(n, k);
  if (u >= (u64{1} << (k - 1)))
    throw std::invalid_argument("representative is not below the level generator");
  return u;
}

u64 half_label_complement(unsigned n, unsigned k, u64 u) {
  return half_label(n, k, u) ^ low_mask(k);
}

LabelScheme scheme_from_name(std::string_view name) {
  if (name == "tree") return LabelScheme::tree;
  if (name == "flat") return LabelScheme::flat;
  throw FormatError("unknown labeling scheme '" + std::string(name) + "'");
}

u64 label_bits(unsigned k, u64 s, LabelScheme scheme) {
  if (k == 0 || k > 64) throw std::invalid_argument("label width must be in 1..64");
  if (k < 64 && s >> k != 0) throw std::invalid_argument("slice wider than the label");
  if (scheme == LabelScheme::tree) {
    // suffix-xor fold: bit i becomes the parity of all bits at positions >= i
    u64 t = s;
    for (unsigned sh = 1; sh < k; sh <<= 1) t ^= t >> sh;
    return t;
  }
  const u64 top = u64{1} << (k - 1);
  return (s & top) ? s ^ (top - 1) : s;
}

u64 inverse_label_bits(unsigned k, u64 label, LabelScheme scheme) {
  if (k == 0 || k > 64) throw std::invalid_argument("label width must be in 1..64");
  if (k < 64 && label >> k != 0) throw std::invalid_argument("label wider than k bits");
  if (scheme == LabelScheme::tree) return label ^ (label >> 1);
  const u64 top = u64{1} << (k - 1);
  return (label & top) ? label ^ (top - 1) : label;  // the flat map is an involution
}

u64 rep_label_bits(unsigned n, unsigned k, u64 g, LabelScheme scheme) {
  check_level(n, k);
  if (n < 64 && g >> n != 0) throw std::invalid_argument("group index out of range");
  return label_bits(k, g & low_mask(k), scheme);
}

std::pair<u64, u64> fold_children(unsigned k, u64 parent, LabelScheme scheme) {
  if (k >= 64) throw std::invalid_argument("label width must be below 64");
  const u64 slice = inverse_label_bits(k, parent, scheme);
  return {label_bits(k + 1, slice, scheme),
          label_bits(k + 1, (u64{1} << k) | slice, scheme)};
}

}  // namespace tmft
