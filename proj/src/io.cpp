#include "tmft/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "tmft/transform.hpp"

namespace tmft {

namespace {

std::string trim(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

Signal read_signal(std::istream& is, unsigned n, const Ring& ring) {
  if (n > kMaxTransformBits) throw std::invalid_argument("signal exponent too large");
  const std::size_t want = std::size_t{1} << n;
  std::vector<elem> values;
  values.reserve(want);
  std::string line;
  while (std::getline(is, line)) {
    const std::string tok = trim(line);
    if (tok.empty()) continue;
    if (values.size() == want) throw FormatError("signal file has more than 2^n elements");
    values.push_back(ring.parse(tok));
  }
  if (values.size() != want)
    throw FormatError("signal file holds " + std::to_string(values.size()) +
                      " elements, expected " + std::to_string(want));
  return {n, ring, std::move(values)};
}

Signal read_signal_file(const std::string& path, unsigned n, const Ring& ring) {
  auto in = open_in(path);
  return read_signal(in, n, ring);
}

void write_signal(std::ostream& os, const Signal& f) {
  check_signal(f);
  for (elem v : f.values) os << f.ring.format(v) << '\n';
}

void write_signal_file(const std::string& path, const Signal& f) {
  auto out = open_out(path);
  write_signal(out, f);
  if (!out) throw FormatError("failed writing '" + path + "'");
}

Spectrum read_spectrum(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("spectrum file is empty");
  const auto header = split_tokens(trim(line));
  if (header.size() != 3 || !header[0].starts_with("n=") || !header[1].starts_with("ring=") ||
      !header[2].starts_with("scheme="))
    throw FormatError("spectrum header must be 'n=<n> ring=<spec> scheme=<tree|flat>'");

  unsigned n = 0;
  {
    const std::string field = header[0].substr(2);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), n);
    if (ec != std::errc{} || ptr != field.data() + field.size() || n > kMaxTransformBits)
      throw FormatError("bad exponent in spectrum header");
  }
  Ring ring = [&] {
    try {
      return Ring::parse_spec(header[1].substr(5));
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("bad ring in spectrum header: ") + e.what());
    }
  }();
  const LabelScheme scheme = scheme_from_name(header[2].substr(7));

  Spectrum F{n, ring, scheme, {}};
  F.rows.resize(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    if (!std::getline(is, line))
      throw FormatError("spectrum file truncated at level " + std::to_string(k));
    const auto tokens = split_tokens(line);
    const std::size_t want = k == 0 ? 1 : std::size_t{1} << k;
    if (tokens.size() != want)
      throw FormatError("spectrum level " + std::to_string(k) + " holds " +
                        std::to_string(tokens.size()) + " elements, expected " +
                        std::to_string(want));
    F.rows[k].reserve(want);
    for (const auto& tok : tokens) F.rows[k].push_back(ring.parse(tok));
  }
  while (std::getline(is, line))
    if (!trim(line).empty()) throw FormatError("trailing content after the last spectrum level");
  return F;
}

Spectrum read_spectrum_file(const std::string& path) {
  auto in = open_in(path);
  return read_spectrum(in);
}

void write_spectrum(std::ostream& os, const Spectrum& F) {
  check_spectrum_shape(F);
  os << "n=" << F.n << " ring=" << F.ring.spec_string() << " scheme=" << scheme_name(F.scheme)
     << '\n';
  for (unsigned k = 0; k <= F.n; ++k) {
    for (std::size_t i = 0; i < F.rows[k].size(); ++i) {
      if (i != 0) os << ' ';
      os << F.ring.format(F.rows[k][i]);
    }
    os << '\n';
  }
}

void write_spectrum_file(const std::string& path, const Spectrum& F) {
  auto out = open_out(path);
  write_spectrum(out, F);
  if (!out) throw FormatError("failed writing '" + path + "'");
}

}  // namespace tmft
