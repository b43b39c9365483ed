#pragma once

#include <iosfwd>
#include <string>

#include "tmft/signal.hpp"

namespace tmft {

// Signal file: 2^n lines, one element in canonical hex per line, in decimal
// index order. Spectrum file: header line `n=<n> ring=<ringspec>
// scheme=<tree|flat>`, then the DC value, then 2^k space-separated elements
// per level k = 1..n. Writing then parsing is the identity on canonical form.
// All parse failures throw FormatError.

Signal read_signal(std::istream& is, unsigned n, const Ring& ring);
Signal read_signal_file(const std::string& path, unsigned n, const Ring& ring);
void write_signal(std::ostream& os, const Signal& f);
void write_signal_file(const std::string& path, const Signal& f);

Spectrum read_spectrum(std::istream& is);
Spectrum read_spectrum_file(const std::string& path);
void write_spectrum(std::ostream& os, const Spectrum& F);
void write_spectrum_file(const std::string& path, const Spectrum& F);

}  // namespace tmft
