#include "tmft/common.hpp"

namespace tmft {

std::string hex_string(u128 v) {
  if (v == 0) return "0";
  char buf[32];
  int pos = 32;
  while (v != 0) {
    buf[--pos] = "0123456789abcdef"[static_cast<unsigned>(v & 0xf)];
    v >>= 4;
  }
  return std::string(buf + pos, buf + 32);
}

std::string dec_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

std::optional<u128> parse_hex(std::string_view text) {
  if (text.empty() || text.size() > 32) return std::nullopt;
  u128 v = 0;
  for (char ch : text) {
    unsigned digit;
    if (ch >= '0' && ch <= '9') digit = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') digit = static_cast<unsigned>(ch - 'a' + 10);
    else if (ch >= 'A' && ch <= 'F') digit = static_cast<unsigned>(ch - 'A' + 10);
    else return std::nullopt;
    v = (v << 4) | digit;
  }
  return v;
}

}  // namespace tmft
