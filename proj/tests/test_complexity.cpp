#include <doctest.h>

#include <sstream>

#include "tmft/complexity.hpp"

using namespace tmft;

TEST_CASE("closed forms at small n") {
  CHECK(cost_fast_tmft(1) == 1);
  CHECK(cost_fast_tmft(2) == 6);
  CHECK(cost_fast_tmft(3) == 25);
  CHECK(cost_fast_tmft(4) == 90);
  CHECK(cost_tmft(1) == 1);
  CHECK(cost_tmft(2) == 6);
  CHECK(cost_tmft(3) == 29);
  CHECK(cost_tmft(4) == 120);
  CHECK(cost_itmft(1) == 3);
  CHECK(cost_itmft(2) == 14);
  CHECK(cost_itmft(3) == 49);
  CHECK(cost_itmft(4) == 154);
  CHECK(cost_direct_conv_mults(3) == 64);
  CHECK(cost_direct_conv_adds(3) == 56);
  CHECK(cost_spectral_transform_adds(3) == 99);
}

TEST_CASE("closed forms equal their summation forms everywhere") {
  for (unsigned n = 1; n <= kMaxCostBits; ++n) {
    CHECK(cost_fast_tmft(n) == cost_fast_tmft_sum(n));
    CHECK(cost_tmft(n) == cost_tmft_sum(n));
    CHECK(cost_itmft(n) == cost_itmft_sum(n));
  }
}

TEST_CASE("spectral-path additions decompose into the stage costs") {
  for (unsigned n = 1; n <= kMaxCostBits; ++n) {
    const u64 spectral = cost_spectral_transform_adds(n);
    CHECK(spectral == 2 * cost_fast_tmft(n) + cost_itmft(n));
    // the equivalent single closed form
    u64 pow3 = 1;
    for (unsigned i = 0; i <= n; ++i) pow3 *= 3;
    const u64 inner = pow3 - (u64{1} << (n + 2)) + 1;
    CHECK(inner % 2 == 0);
    CHECK(spectral == 3 * (inner / 2) + u64{n} * (u64{1} << n));
  }
}

TEST_CASE("costs grow strictly and their ratio approaches two") {
  for (unsigned n = 2; n <= kMaxCostBits; ++n) {
    CHECK(cost_fast_tmft(n) > cost_fast_tmft(n - 1));
    CHECK(cost_tmft(n) > cost_tmft(n - 1));
    CHECK(cost_itmft(n) > cost_itmft(n - 1));
  }
  double prev = 0.0;
  for (unsigned n = 2; n <= 30; ++n) {
    const double ratio = static_cast<double>(cost_tmft(n)) / static_cast<double>(cost_fast_tmft(n));
    CHECK(ratio > prev);
    prev = ratio;
  }
  const double at20 = static_cast<double>(cost_tmft(20)) / static_cast<double>(cost_fast_tmft(20));
  CHECK(at20 > 1.9);
  CHECK(at20 < 2.0);
}

TEST_CASE("range guards") {
  CHECK_THROWS_AS(cost_fast_tmft(0), std::invalid_argument);
  CHECK_THROWS_AS(cost_fast_tmft(39), std::invalid_argument);
  CHECK_THROWS_AS(cost_report(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(cost_report(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(cost_report(1, 39), std::invalid_argument);
  CHECK_THROWS_AS(cost_report(1, 13, true), std::invalid_argument);
}

TEST_CASE("measured report matches the formulas") {
  const auto rows = cost_report(1, 8, true);
  REQUIRE(rows.size() == 8);
  for (const auto& row : rows) {
    CHECK(row.has_measured);
    CHECK(row.measured_fast == row.fast_tmft_adds);
    CHECK(row.measured_tmft == row.tmft_adds);
    CHECK(row.measured_itmft == row.itmft_adds);
  }
}

TEST_CASE("csv shape") {
  {
    std::ostringstream os;
    write_cost_csv(os, cost_report(1, 3));
    const std::string text = os.str();
    CHECK(text.starts_with(
        "n,fast_tmft,tmft,itmft,ratio,direct_conv_mults,spectral_conv_adds\n"));
    CHECK(text.find("3,25,29,49,1.160000,64,99\n") != std::string::npos);
  }
  {
    std::ostringstream os;
    write_cost_csv(os, cost_report(2, 2, true));
    CHECK(os.str() ==
          "n,fast_tmft,tmft,itmft,ratio,direct_conv_mults,spectral_conv_adds,"
          "measured_fast,measured_tmft,measured_itmft\n"
          "2,6,6,14,1.000000,16,26,6,6,14\n");
  }
  {
    // the wide multiplication column is exact beyond 64 bits
    std::ostringstream os;
    write_cost_csv(os, cost_report(38, 38));
    CHECK(os.str().find(",75557863725914323419136,") != std::string::npos);
  }
}
