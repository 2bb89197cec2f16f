#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "colorpart/error.hpp"
#include "colorpart/identity.hpp"
#include "support.hpp"

using namespace testing;

namespace {

using Ints = std::vector<int>;

// Partitions of m into exactly k distinct positive parts.
std::uint64_t distinct_parts(int m, int k, int max_part) {
  if (k == 0) return m == 0;
  std::uint64_t c = 0;
  for (int p = std::min(m, max_part); p >= 1; --p) c += distinct_parts(m - p, k - 1, p - 1);
  return c;
}

void partitions_of(int N, int max_part, Ints& cur, const std::function<void(const Ints&)>& f) {
  if (N == 0) {
    f(cur);
    return;
  }
  for (int p = std::min(N, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(N - p, p, cur, f);
    cur.pop_back();
  }
}

std::set<Ints> distinct_in_classes(int N) {
  std::set<Ints> out;
  Ints cur;
  partitions_of(N, N, cur, [&](const Ints& v) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
      if (v[k] == v[k + 1]) return;
    for (int x : v)
      if (x % 12 != 4 && x % 12 != 8 && x % 12 != 10 && x % 12 != 11) return;
    out.insert(v);
  });
  return out;
}

// The gap conditions restated directly on integer partitions.
bool gap_rules(const Ints& v) {
  for (int x : v) {
    if (x % 12 == 1 || x % 12 == 5) return false;
    if (x == 2 || x == 3 || x == 6 || x == 7 || x == 9) return false;
  }
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    const int d = v[k] - v[k + 1];
    if (d > 12) continue;
    if (d == 12) {
      const int r = v[k] % 12;
      if (r == 4 || r == 8 || r == 10 || r == 11) continue;
      return false;
    }
    if (d == 9 && (v[k] % 12 == 3 || v[k] % 12 == 9)) {
      if (k + 2 >= v.size() || v[k] - v[k + 2] >= 24) continue;
      if (v[k] == 27 && v[k + 1] == 18 && v[k + 2] == 4) continue;
    }
    return false;
  }
  return true;
}

std::set<Ints> gap_partitions(int N) {
  std::set<Ints> out;
  Ints cur;
  partitions_of(N, N, cur, [&](const Ints& v) {
    if (gap_rules(v)) out.insert(v);
  });
  return out;
}

std::set<Ints> as_set(const std::vector<Ints>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("product series coefficients") {
  const auto s = product_series(2, 2);
  CHECK(s.coefficient(ColorProduct{{1, 1}}, 2) == 1);
  CHECK(s.coefficient(ColorProduct{{0, 0}}, 0) == 1);
  CHECK(s.coefficient(ColorProduct{{2, 0}}, 2) == 0);
  for (std::size_t m = 0; m < s.terms.size(); ++m) CHECK(int(m) <= 2);
  const int M = 30;
  const auto one = product_series(1, M);
  for (int m = 0; m <= M; ++m)
    for (int k = 0; k <= 8; ++k) CHECK(one.coefficient(ColorProduct{{k}}, m) == distinct_parts(m, k, m));
}

TEST_CASE("stratum counts") {
  const auto ab = parse_color_product("ab", 4);
  CHECK(count_U(4, ab, 2) == 1);
  const ColorProduct none{{0, 0, 0, 0}};
  CHECK(count_U(4, none, 0) == 1);
  CHECK(count_V(4, none, 0) == 1);
  for (E1Route r : {E1Route::cond2, E1Route::cond3, E1Route::roundtrip}) CHECK(count_W(4, none, 0, r) == 1);
  // 3_cd,3_ab,1_c is in E but not E1.
  const auto c = parse_color_product("abc^2d", 4);
  CHECK(count_V(4, c, 7) > count_W(4, c, 7, E1Route::cond3));
}

TEST_CASE("series against counts") {
  for (int n = 1; n <= 4; ++n) {
    const int M = n <= 2 ? 14 : 10;
    const auto s = product_series(n, M);
    for (int m = 0; m <= M; ++m)
      for (const auto& [e, coeff] : s.terms[m]) CHECK(BigInt(count_U(n, ColorProduct{e}, m)) == coeff);
  }
}

TEST_CASE("identity and inequality sweeps") {
  for (int n = 1; n <= 3; ++n) {
    const auto rep = verify_identity(n, 12);
    CHECK(rep.passed());
    for (const auto& row : rep.rows) CHECK(row.U == row.V);
  }
  const auto four = verify_identity(4, 12, 2);
  CHECK(four.passed());
  CHECK(four.partitions_O > 0);
  const auto ineq = verify_inequality(4, 10);
  CHECK(ineq.passed());
  REQUIRE(ineq.strict_witness.has_value());
  CHECK(ineq.strict_witness->U < ineq.strict_witness->V);
  const auto flat = verify_inequality(1, 15);
  CHECK(flat.passed());
  CHECK_FALSE(flat.strict_witness.has_value());
}

TEST_CASE("worker count does not change reports") {
  const auto a = verify_identity(4, 9, 1);
  const auto b = verify_identity(4, 9, 3);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    CHECK(a.rows[k].c == b.rows[k].c);
    CHECK(a.rows[k].U == b.rows[k].U);
    CHECK(a.rows[k].W == b.rows[k].W);
  }
}

TEST_CASE("mod 12 specialization") {
  CHECK(specialize_12(part_list(4, "1_d")) == Ints{11});
  CHECK(specialize_12(part_list(4, "3_b,2_ad,1_c")) == Ints{32, 15, 10});
  CHECK_THROWS_AS(specialize_12(part_list(5, "1_e")), input_error);
  CHECK(gap_rules({27, 18, 4}));
  CHECK(satisfies_mod12_gaps({27, 18, 4}));
  CHECK_FALSE(gap_rules({28, 19, 4}));
}

TEST_CASE("mod 12 corollary against integer oracles") {
  for (int N = 1; N <= 60; ++N) {
    CAPTURE(N);
    const auto c = corollary12(N);
    CHECK(as_set(c.from_O) == distinct_in_classes(N));
    CHECK(as_set(c.from_E1) == gap_partitions(N));
    CHECK(c.from_O.size() == c.from_E1.size());
    for (const auto& v : c.from_E1) CHECK(satisfies_mod12_gaps(v));
  }
}

TEST_CASE("size 49 in detail") {
  const auto c = corollary12(49);
  const std::set<Ints> O = {{35, 10, 4}, {34, 11, 4},  {28, 11, 10},       {23, 22, 4},
                            {23, 16, 10}, {22, 16, 11}, {16, 11, 10, 8, 4}, {20, 11, 10, 8}};
  const std::set<Ints> E = {{35, 14}, {34, 15}, {33, 16}, {45, 4}, {39, 10}, {38, 11}, {27, 18, 4}, {31, 18}};
  CHECK(as_set(c.from_O) == O);
  CHECK(as_set(c.from_E1) == E);
}
