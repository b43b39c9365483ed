#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tmft/common.hpp"

namespace tmft {

// Element of the group of n-bit vectors under xor, indexed by its decimal
// value. The bit/decimal correspondence is MSB-first: the first bit of the
// vector carries weight 2^(n-1).
struct GroupElem {
  unsigned n;
  u64 index;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

GroupElem group_add(GroupElem a, GroupElem b);  // errors on mismatched n

u64 index_of_bits(std::span<const u8> bits);            // MSB-first, |bits| <= 64
std::vector<u8> bits_of_index(u64 j, unsigned n);       // errors when j >= 2^n

// Generator separating chain level k from level k-1: the single set bit has
// decimal weight 2^(k-1).
GroupElem level_generator(unsigned n, unsigned k);

// The nested chain fixes the top n-k bits of level-k members to zero.
//   subgroup                 level-k members                      (2^k elements)
//   quotient                 representatives with low k bits zero (2^(n-k))
//   subgroup_mod_generator   level-k members below the generator  (2^(k-1))
enum class SubgroupSet { subgroup, quotient, subgroup_mod_generator };
std::vector<GroupElem> enumerate_subgroup(unsigned n, unsigned k, SubgroupSet which);

// k-bit label of a coset representative u < 2^(k-1) (leading label bit 0),
// and its bitwise complement (leading bit 1). The plain form is additive;
// the complement form is not.
u64 half_label(unsigned n, unsigned k, u64 u);
u64 half_label_complement(unsigned n, unsigned k, u64 u);

// Two interchangeable labeling homomorphisms from the group onto k-bit
// vectors. Both are linear with kernel = quotient representatives and map the
// level generator to all-ones; they agree for k <= 2 and differ from k = 3 on.
// tree is the canonical default everywhere.
enum class LabelScheme { tree, flat };

constexpr const char* scheme_name(LabelScheme s) {
  return s == LabelScheme::tree ? "tree" : "flat";
}
LabelScheme scheme_from_name(std::string_view name);  // throws FormatError

// Label of the k-bit slice s (the low k bits of a group index, MSB-first):
//   tree: bit i of the label is the parity of s >> i (prefix parity)
//   flat: the low k-1 bits are complemented when the top slice bit is set
u64 label_bits(unsigned k, u64 s, LabelScheme scheme);
u64 inverse_label_bits(unsigned k, u64 label, LabelScheme scheme);

// Label of the representation matrix assigned to group element g at level k.
u64 rep_label_bits(unsigned n, unsigned k, u64 g, LabelScheme scheme);

// The two level-(k+1) labels whose preimages partition the preimage of
// `parent` at level k; .first collects the elements whose new slice bit is 0.
std::pair<u64, u64> fold_children(unsigned k, u64 parent, LabelScheme scheme);

}  // namespace tmft
