#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tmft/complexity.hpp"
#include "tmft/convolution.hpp"
#include "tmft/io.hpp"
#include "tmft/parallel.hpp"
#include "tmft/selftest.hpp"
#include "tmft/transform.hpp"

namespace {

using namespace tmft;

constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitInvariant = 3;

struct CommonOpts {
  unsigned n = 0;
  std::string ring_spec;
  std::string scheme_name = "tree";
  bool parallel = false;
  bool count = false;
};

LabelScheme scheme_of(const std::string& name) {
  if (name == "tree") return LabelScheme::tree;
  if (name == "flat") return LabelScheme::flat;
  throw std::invalid_argument("scheme must be tree or flat");
}

int run_transform(const CommonOpts& opts, const std::string& method, const std::string& in_path,
                  const std::string& out_path) {
  if (opts.n == 0) throw std::invalid_argument("--n must be at least 1");
  const Ring ring = Ring::parse_spec(opts.ring_spec);
  const LabelScheme scheme = scheme_of(opts.scheme_name);
  const Signal f = read_signal_file(in_path, opts.n, ring);

  if (method == "zeta") {
    if (opts.count) throw std::invalid_argument("--count is not available with --method zeta");
    if (opts.parallel) throw std::invalid_argument("--parallel is not available with --method zeta");
    write_spectrum_file(out_path, tmft_fast_zeta(f, scheme));
    return 0;
  }

  TransformResult result = [&] {
    if (method == "fast") return opts.parallel ? par::tmft_fast(f, scheme) : tmft_fast(f, scheme);
    if (method == "direct")
      return opts.parallel ? par::tmft_direct(f, scheme) : tmft_direct(f, scheme);
    throw std::invalid_argument("method must be fast, direct or zeta");
  }();
  write_spectrum_file(out_path, result.spectrum);
  if (opts.count) {
    const u64 formula = method == "fast" ? cost_fast_tmft(opts.n) : cost_tmft(opts.n);
    std::cout << "additions=" << result.ops.additions << " formula=" << formula << '\n';
  }
  return 0;
}

int run_inverse(const CommonOpts& opts, const std::string& in_path, const std::string& out_path) {
  const Spectrum F = read_spectrum_file(in_path);
  if (opts.n != 0 && opts.n != F.n) throw FormatError("spectrum header disagrees with --n");
  if (!opts.ring_spec.empty() && Ring::parse_spec(opts.ring_spec).spec() != F.ring.spec())
    throw FormatError("spectrum header disagrees with --ring");
  if (!opts.scheme_name.empty() && scheme_of(opts.scheme_name) != F.scheme)
    throw FormatError("spectrum header disagrees with --scheme");

  const InverseResult result = opts.parallel ? par::itmft(F) : itmft(F);
  write_signal_file(out_path, result.signal);
  if (opts.count && F.n >= 1)
    std::cout << "additions=" << result.ops.additions << " formula=" << cost_itmft(F.n) << '\n';
  return 0;
}

int run_convolve(const CommonOpts& opts, const std::string& method,
                 const std::vector<std::string>& in_paths, const std::string& out_path) {
  if (opts.n == 0) throw std::invalid_argument("--n must be at least 1");
  const Ring ring = Ring::parse_spec(opts.ring_spec);
  const Signal a = read_signal_file(in_paths.at(0), opts.n, ring);
  const Signal b = read_signal_file(in_paths.at(1), opts.n, ring);

  if (method == "direct") {
    const ConvolveResult result = opts.parallel ? par::convolve_direct(a, b) : convolve_direct(a, b);
    write_signal_file(out_path, result.signal);
    if (opts.count)
      std::cout << "multiplications=" << result.ops.multiplications
                << " additions=" << result.ops.additions
                << " formula_multiplications=" << dec_string(cost_direct_conv_mults(opts.n))
                << '\n';
    return 0;
  }
  if (method == "spectral") {
    if (opts.parallel)
      throw std::invalid_argument("--parallel applies to --method direct only");
    const auto result = convolve_via_tmft(a, b, scheme_of(opts.scheme_name));
    write_signal_file(out_path, result.signal);
    if (opts.count)
      std::cout << "transform_additions=" << result.transform_ops.additions
                << " formula_transform_additions=" << cost_spectral_transform_adds(opts.n)
                << " product_multiplications=" << result.product_ops.multiplications
                << " product_additions=" << result.product_ops.additions << '\n';
    return 0;
  }
  throw std::invalid_argument("method must be direct or spectral");
}

int run_cost(unsigned n_min, unsigned n_max, bool measured, const std::string& out_path) {
  const auto rows = cost_report(n_min, n_max, measured);
  if (out_path.empty()) {
    write_cost_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw FormatError("cannot open '" + out_path + "' for writing");
    write_cost_csv(out, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-modular Fourier transform toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string method = "fast";
  std::string in_path;
  std::string out_path;
  std::vector<std::string> in_paths;
  unsigned n_min = 1;
  unsigned n_max = 20;
  bool measured = false;
  std::string csv_path;

  auto* transform = app.add_subcommand("transform", "signal file -> spectrum file");
  transform->add_option("--n", opts.n, "group exponent")->required();
  transform->add_option("--ring", opts.ring_spec, "ring spec, e.g. gf:8:11b")->required();
  transform->add_option("--scheme", opts.scheme_name, "tree|flat (default tree)");
  transform->add_option("--method", method, "fast|direct|zeta (default fast)");
  transform->add_option("--in", in_path, "input signal file")->required();
  transform->add_option("--out", out_path, "output spectrum file")->required();
  transform->add_flag("--count", opts.count, "print measured additions and the formula value");
  transform->add_flag("--parallel", opts.parallel, "use the OpenMP kernels");

  auto* inverse = app.add_subcommand("inverse", "spectrum file -> signal file");
  inverse->add_option("--n", opts.n, "cross-check against the header");
  inverse->add_option("--ring", opts.ring_spec, "cross-check against the header");
  std::string inv_scheme;
  inverse->add_option("--scheme", inv_scheme, "cross-check against the header");
  inverse->add_option("--in", in_path, "input spectrum file")->required();
  inverse->add_option("--out", out_path, "output signal file")->required();
  inverse->add_flag("--count", opts.count, "print measured additions and the formula value");
  inverse->add_flag("--parallel", opts.parallel, "use the OpenMP kernels");

  auto* convolve = app.add_subcommand("convolve", "two signal files -> signal file");
  convolve->add_option("--n", opts.n, "group exponent")->required();
  convolve->add_option("--ring", opts.ring_spec, "ring spec")->required();
  convolve->add_option("--scheme", opts.scheme_name, "tree|flat (spectral method)");
  std::string conv_method = "direct";
  convolve->add_option("--method", conv_method, "direct|spectral (default direct)");
  convolve->add_option("--in", in_paths, "the two input signal files")->expected(2)->required();
  convolve->add_option("--out", out_path, "output signal file")->required();
  convolve->add_flag("--count", opts.count, "print the operation counters");
  convolve->add_flag("--parallel", opts.parallel, "use the OpenMP kernels (direct method)");

  auto* cost = app.add_subcommand("cost", "emit the cost CSV report");
  cost->add_option("--min", n_min, "smallest n (default 1)");
  cost->add_option("--max", n_max, "largest n (default 20)");
  cost->add_flag("--measured", measured, "append measured tallies (requires max <= 12)");
  cost->add_option("--out", csv_path, "CSV path (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "run the built-in golden checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (transform->parsed()) return run_transform(opts, method, in_path, out_path);
    if (inverse->parsed()) {
      opts.scheme_name = inv_scheme;
      return run_inverse(opts, in_path, out_path);
    }
    if (convolve->parsed()) return run_convolve(opts, conv_method, in_paths, out_path);
    if (cost->parsed()) return run_cost(n_min, n_max, measured, csv_path);
    if (selftest->parsed()) {
      const int failures = tmft::run_selftest(std::cout);
      if (failures != 0) {
        std::cerr << failures << " selftest item(s) failed\n";
        return kExitInvariant;
      }
      return 0;
    }
  } catch (const tmft::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const tmft::FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
