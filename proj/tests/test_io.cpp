#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "tmft/io.hpp"
#include "tmft/transform.hpp"

using namespace tmft;

TEST_CASE("signal files") {
  const Ring ring = Ring::gf(8, 0x11b);
  auto rng = test::make_rng(51);
  const Signal f = test::random_signal(3, ring, rng);
  std::ostringstream os;
  write_signal(os, f);
  {
    std::istringstream is(os.str());
    CHECK(read_signal(is, 3, ring) == f);
  }
  {
    // canonical form survives a second pass byte for byte
    std::istringstream is(os.str());
    std::ostringstream os2;
    write_signal(os2, read_signal(is, 3, ring));
    CHECK(os.str() == os2.str());
  }
  {
    std::istringstream is("00\n00\n00\n00\n");
    const Signal zero = read_signal(is, 2, Ring::bitvec(8));
    for (elem v : zero.values) CHECK(v == 0);
  }
  {
    std::istringstream is("0\n1\n2\n");  // 3 lines, want 4
    CHECK_THROWS_AS(read_signal(is, 2, ring), FormatError);
  }
  {
    std::istringstream is("0\n1\n2\n3\n4\n");
    CHECK_THROWS_AS(read_signal(is, 2, ring), FormatError);
  }
  {
    std::istringstream is("0\nzz\n2\n3\n");
    CHECK_THROWS_AS(read_signal(is, 2, ring), FormatError);
  }
  {
    std::istringstream is("0\n100\n2\n3\n");  // exceeds 8 bits
    CHECK_THROWS_AS(read_signal(is, 2, ring), FormatError);
  }
}

TEST_CASE("spectrum files") {
  const Ring ring = Ring::gf(2, 0x7);
  {
    const auto F = tmft_fast(dirac(2, ring)).spectrum;
    std::ostringstream os;
    write_spectrum(os, F);
    CHECK(os.str() == "n=2 ring=gf:2:7 scheme=tree\n1\n1 0\n1 0 0 0\n");
    std::istringstream is(os.str());
    CHECK(read_spectrum(is) == F);
  }
  auto rng = test::make_rng(52);
  for (const Ring& r : {Ring::bitvec(8), Ring::poly(4, 0x11), Ring::gf(8, 0x11b)})
    for (LabelScheme scheme : {LabelScheme::tree, LabelScheme::flat})
      for (unsigned n = 1; n <= 5; ++n) {
        const auto F = tmft_fast(test::random_signal(n, r, rng), scheme).spectrum;
        std::ostringstream os;
        write_spectrum(os, F);
        std::istringstream is(os.str());
        CHECK(read_spectrum(is) == F);
      }
}

TEST_CASE("spectrum parse failures") {
  auto reject = [](const std::string& text) {
    std::istringstream is(text);
    CHECK_THROWS_AS(read_spectrum(is), FormatError);
  };
  reject("");
  reject("n=2 ring=gf:2:7\n1\n1 0\n1 0 0 0\n");                   // missing scheme
  reject("n=2 ring=gf:2:7 scheme=spiral\n1\n1 0\n1 0 0 0\n");     // bad scheme
  reject("n=2 ring=gf:2:5 scheme=tree\n1\n1 0\n1 0 0 0\n");       // reducible gf modulus
  reject("n=x ring=gf:2:7 scheme=tree\n1\n1 0\n1 0 0 0\n");       // bad exponent
  reject("n=2 ring=gf:2:7 scheme=tree\n1\n1 0\n1 0 0\n");         // short level
  reject("n=2 ring=gf:2:7 scheme=tree\n1\n1 0\n");                // truncated
  reject("n=2 ring=gf:2:7 scheme=tree\n1\n1 0\n1 0 0 0\n7\n");    // trailing content
  reject("n=2 ring=gf:2:7 scheme=tree\n1\n1 9\n1 0 0 0\n");       // element outside ring
}

TEST_CASE("a parsed spectrum can still violate the DC invariant") {
  std::istringstream is("n=2 ring=gf:2:7 scheme=tree\n1\n2 0\n1 0 0 0\n");
  const Spectrum F = read_spectrum(is);  // structurally fine
  CHECK_THROWS_AS(itmft(F), InvariantError);
}
