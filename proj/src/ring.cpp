#include "tmft/ring.hpp"

#include <bit>
#include <charconv>
#include <vector>

namespace tmft {

namespace {

constexpr unsigned kMaxWidth = 64;

unsigned poly_degree(u128 v) {
  // requires v != 0
  const u64 hi = static_cast<u64>(v >> 64);
  if (hi != 0) return 63 + std::bit_width(hi);
  return std::bit_width(static_cast<u64>(v)) - 1;
}

u128 poly_rem(u128 a, u128 d) {
  const unsigned dd = poly_degree(d);
  while (a != 0) {
    const unsigned da = poly_degree(a);
    if (da < dd) break;
    a ^= d << (da - dd);
  }
  return a;
}

u128 poly_gcd(u128 a, u128 b) {
  while (b != 0) {
    a = poly_rem(a, b);
    std::swap(a, b);
  }
  return a;
}

// square of a degree-<64 polynomial, reduced mod phi
u128 square_mod(u128 a, u128 phi) {
  u128 spread = 0;
  const u64 x = static_cast<u64>(a);
  for (unsigned i = 0; i < 64; ++i)
    if ((x >> i) & 1) spread ^= u128{1} << (2 * i);
  return poly_rem(spread, phi);
}

std::vector<unsigned> prime_factors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

namespace detail {

bool irreducible_by_trial(u128 phi, unsigned degree) {
  // a reducible polynomial has a factor of degree <= degree/2
  const u64 limit = u64{1} << (degree / 2 + 1);
  for (u64 d = 2; d < limit; ++d)
    if (poly_rem(phi, d) == 0) return false;
  return true;
}

bool irreducible_by_squaring(u128 phi, unsigned degree) {
  if (degree == 1) return true;
  const u128 x = 2;
  std::vector<unsigned> checkpoints;
  for (unsigned p : prime_factors(degree)) checkpoints.push_back(degree / p);

  u128 cur = x;
  for (unsigned i = 1; i <= degree; ++i) {
    cur = square_mod(cur, phi);
    for (unsigned cp : checkpoints)
      if (cp == i && poly_gcd(cur ^ x, phi) != 1) return false;
  }
  return cur == x;  // x^(2^degree) == x mod phi
}

}  // namespace detail

bool is_irreducible(u128 phi, unsigned degree) {
  if (degree == 0 || degree > kMaxWidth) throw std::invalid_argument("polynomial degree must be in 1..64");
  if (phi >> degree != 1) throw std::invalid_argument("polynomial degree does not match the stated degree");
  if (degree <= 32) return detail::irreducible_by_trial(phi, degree);
  return detail::irreducible_by_squaring(phi, degree);
}

Ring::Ring(const RingSpec& spec) : spec_(spec) {
  one_ = spec.kind == RingKind::bitvec ? mask() : elem{1};
}

Ring Ring::bitvec(unsigned m) {
  if (m == 0 || m > kMaxWidth) throw std::invalid_argument("ring width must be in 1..64");
  return Ring({RingKind::bitvec, m, 0});
}

Ring Ring::poly(unsigned m, u128 modulus) {
  if (m == 0 || m > kMaxWidth) throw std::invalid_argument("ring width must be in 1..64");
  if (modulus == 0 || (modulus >> m) != 1)
    throw std::invalid_argument("modulus degree must equal the ring width");
  return Ring({RingKind::poly, m, modulus});
}

Ring Ring::gf(unsigned m, u128 modulus) {
  Ring r = poly(m, modulus);
  if (!is_irreducible(modulus, m))
    throw std::invalid_argument("gf modulus must be irreducible over F2");
  r.spec_.kind = RingKind::gf;
  return r;
}

Ring Ring::make(const RingSpec& spec) {
  switch (spec.kind) {
    case RingKind::bitvec: return bitvec(spec.width);
    case RingKind::poly: return poly(spec.width, spec.modulus);
    case RingKind::gf: return gf(spec.width, spec.modulus);
  }
  throw std::invalid_argument("unknown ring kind");
}

elem Ring::mul(elem a, elem b) const {
  if (spec_.kind == RingKind::bitvec) return a & b;
  // schoolbook shift-xor product, then reduction mod the modulus
  const unsigned m = spec_.width;
  u128 acc = 0;
  for (unsigned i = 0; i < m; ++i)
    if ((b >> i) & 1) acc ^= u128{a} << i;
  for (unsigned d = 2 * m - 2; d + 1 > m; --d)
    if ((acc >> d) & 1) acc ^= spec_.modulus << (d - m);
  return static_cast<elem>(acc);
}

Ring Ring::parse_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    if (colon == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
  auto bad = [&](const char* why) {
    return std::invalid_argument("bad ring spec '" + std::string(text) + "': " + why);
  };
  if (parts.size() < 2) throw bad("expected kind:<m>[:<phi-hex>]");

  unsigned m = 0;
  const auto* first = parts[1].data();
  const auto* last = first + parts[1].size();
  const auto [ptr, ec] = std::from_chars(first, last, m);
  if (ec != std::errc{} || ptr != last) throw bad("width is not a decimal number");

  if (parts[0] == "bitvec") {
    if (parts.size() != 2) throw bad("bitvec takes no modulus");
    return bitvec(m);
  }
  if (parts[0] == "poly" || parts[0] == "gf") {
    if (parts.size() != 3) throw bad("poly/gf require a modulus");
    const auto modulus = parse_hex(parts[2]);
    if (!modulus) throw bad("modulus is not hex");
    return parts[0] == "poly" ? poly(m, *modulus) : gf(m, *modulus);
  }
  throw bad("kind must be bitvec, poly or gf");
}

std::string Ring::spec_string() const {
  std::string out;
  switch (spec_.kind) {
    case RingKind::bitvec: out = "bitvec"; break;
    case RingKind::poly: out = "poly"; break;
    case RingKind::gf: out = "gf"; break;
  }
  out += ':';
  out += std::to_string(spec_.width);
  if (spec_.kind != RingKind::bitvec) {
    out += ':';
    out += hex_string(spec_.modulus);
  }
  return out;
}

elem Ring::parse(std::string_view text) const {
  const auto v = parse_hex(text);
  if (!v) throw FormatError("bad hex element '" + std::string(text) + "'");
  if (*v > mask()) throw FormatError("element '" + std::string(text) + "' exceeds ring width");
  return static_cast<elem>(*v);
}

std::string Ring::format(elem v) const { return hex_string(v); }

}  // namespace tmft
