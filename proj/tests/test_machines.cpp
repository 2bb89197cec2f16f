#include <doctest.h>

#include "colorpart/error.hpp"
#include "colorpart/machines.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Triplet T(int n, const std::string& d, const std::string& g, const std::string& m) {
  auto pl = [&](const std::string& s) { return s.empty() ? std::vector<ColoredPart>{} : parts(n, s); };
  return Triplet{pl(d), pl(g), pl(m)};
}

}  // namespace

TEST_CASE("phi on the seven-part example") {
  const auto lambda = part_list(4, "5_b,3_d,2_a,1_d,1_c,1_b,1_a", Ground::O);
  const auto r = phi(lambda);
  CHECK(r.output.parts == parts(4, "5_b,4_ad,3_bc,2_ad"));
  const std::vector<Triplet> table = {T(4, "", "5_b,3_d,2_a", "1_d,1_c,1_b,1_a"),
                                      T(4, "5_b,4_ad", "2_d,1_c", "1_b,1_a"),
                                      T(4, "5_b,4_ad,3_bc", "1_d", "1_a"),
                                      T(4, "5_b,4_ad,3_bc,2_ad", "", "")};
  CHECK(phi_triplets(r.trace) == table);
}

TEST_CASE("psi on the four-part example") {
  const auto nu = part_list(4, "5_b,4_ad,3_bc,2_ad", Ground::E);
  const auto r = psi(nu);
  CHECK(r.output == parts(4, "5_b,3_d,2_a,1_d,1_c,1_b,1_a"));
  const std::vector<Triplet> table = {T(4, "5_b,4_ad,3_bc,2_ad", "", ""), T(4, "5_b,4_ad,3_bc", "1_d", "1_a"),
                                      T(4, "5_b,4_ad", "2_d,1_c", "1_b,1_a"),
                                      T(4, "", "5_b,3_d,2_a", "1_d,1_c,1_b,1_a")};
  CHECK(psi_triplets(r.trace) == table);
}

TEST_CASE("phi on the fourteen-part example") {
  const auto lambda = part_list(4, "12_a,7_b,6_d,6_c,5_a,4_d,4_c,4_b,4_a,3_c,1_d,1_c,1_b,1_a", Ground::O);
  CHECK(phi(lambda).output.parts == parts(4, "14_bd,11_a,10_ad,9_bc,8_ac,3_c,2_cd,2_ab"));
}

TEST_CASE("psi on six colors") {
  CHECK(psi(part_list(6, "4_ae,3_cd,3_ab", Ground::E)).output == parts(6, "4_a,2_a,1_e,1_d,1_c,1_b"));
  // A second preimage of the same output: psi is not injective on E.
  CHECK(psi(part_list(6, "4_a,3_ae,2_cd,1_b", Ground::E)).output == parts(6, "4_a,2_a,1_e,1_d,1_c,1_b"));
  const auto out = psi(part_list(6, "4_e,3_ef,3_cd,3_ab,1_f", Ground::E)).output;
  CHECK(out == parts(6, "4_e,4_f,1_f,1_e,1_d,1_c,1_b,1_a"));
  CHECK_FALSE(in_O(out));
}

TEST_CASE("trivial inputs") {
  CHECK(phi(part_list(4, "")).output.empty());
  CHECK(psi(part_list(4, "")).output.empty());
  const auto calm = part_list(4, "9_d,6_b,3_c,1_a", Ground::O);
  const auto r = phi(calm);
  CHECK(r.output.parts == calm.parts);
  const auto ts = phi_triplets(r.trace);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].mu.empty());
  const auto p = psi(calm);
  CHECK(p.output == calm.parts);
  CHECK(psi_triplets(p.trace).size() == 1);
}

TEST_CASE("machines reject inputs outside their ground sets") {
  CHECK_THROWS_AS(phi(part_list(4, "4_ad,1_a")), input_error);
  CHECK_THROWS_AS(phi(part_list(4, "1_a,2_b")), input_error);
  CHECK_THROWS_AS(psi(part_list(4, "3_ad,3_ad")), input_error);
}

TEST_CASE("round trip, invariants and snapshot reversal") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= (n == 4 ? 14 : 12); ++m)
      for_each_O(n, m, [&](std::span<const ColoredPart> s) {
        const Partition lambda{n, {s.begin(), s.end()}, Ground::O};
        const auto f = phi(lambda);
        REQUIRE(in_E(f.output.parts));
        CHECK(f.output.size() == m);
        CHECK(color_product(f.output) == color_product(lambda));
        const auto b = psi(f.output);
        REQUIRE(b.output == lambda.parts);
        (void)phi_triplets(f.trace);
        (void)psi_triplets(b.trace);
        check_reversal(f.trace, b.trace);
      });
}

TEST_CASE("psi keeps size and colors on all of E") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 0; m <= 11; ++m)
      for_each_E(n, m, [&](std::span<const ColoredPart> s) {
        const Partition nu{n, {s.begin(), s.end()}, Ground::E};
        const auto r = psi(nu, false);
        CHECK(total_size(r.output) == m);
        CHECK(color_product(n, r.output) == color_product(nu));
        for (const auto& p : r.output) CHECK(p.primary());
      });
}
