#include <doctest.h>

#include "colorpart/bridge.hpp"
#include "colorpart/error.hpp"
#include "colorpart/machines.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const char* eight = "14_bd,11_a,10_ad,9_bc,8_ac,3_c,2_cd,2_ab";
const char* six_color = "20_ef,20_ad,19_bc,16_de,14_af,11_ad,6_c";

std::vector<int> bridges(const BridgeTable& br) {
  std::vector<int> v;
  for (const auto& [i, b] : br) v.push_back(b);
  return v;
}

template <class F>
void sweep_E(int max_n, int max_m, F f) {
  for (int n = 1; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m)
      for_each_E(n, m, [&](std::span<const ColoredPart> s) { f(Partition{n, {s.begin(), s.end()}, Ground::E}); });
}

}  // namespace

TEST_CASE("index split of the eight-part example") {
  const auto ip = index_split(part_list(4, eight, Ground::E));
  CHECK(ip.halves == parts(4, "7_d,7_b,11_a,5_d,5_a,5_b,4_c,4_c,4_a,3_c,1_d,1_c,1_b,1_a"));
  CHECK(ip.J == std::vector<int>{3, 10});
  CHECK(ip.I == std::vector<int>{1, 4, 6, 8, 11, 13});
  CHECK(troublesome_secondary(ip) == std::vector<int>{4, 11});
  CHECK(bridges(bridge_direct(ip)) == std::vector<int>{3, 8, 8, 8, 11, 13});
  CHECK(bridges(bridge_recursive(ip)) == std::vector<int>{3, 8, 8, 8, 11, 13});
}

TEST_CASE("index split shapes") {
  const auto prim = index_split(part_list(4, "6_d,4_b,1_a", Ground::E));
  CHECK(prim.I.empty());
  CHECK(prim.J == std::vector<int>{1, 2, 3});
  CHECK(troublesome_secondary(prim).empty());
  CHECK(bridge_direct(prim).empty());
  // Re-merging the I-indexed pairs gives the partition back.
  sweep_E(4, 10, [](const Partition& nu) {
    const auto ip = index_split(nu);
    std::vector<ColoredPart> back;
    for (int x = 1; x <= ip.count(); ++x) {
      if (ip.is_upper(x)) {
        back.push_back(merge(ip.halves[x - 1], ip.halves[x]));
        ++x;
      } else {
        back.push_back(ip.halves[x - 1]);
      }
    }
    CHECK(back == nu.parts);
    CHECK(int(ip.I.size() * 2 + ip.J.size()) == ip.count());
  });
}

TEST_CASE("bridges on six colors") {
  const auto nu = part_list(6, six_color, Ground::E);
  const auto ip = index_split(nu);
  CHECK(bridges(bridge_direct(ip)) == std::vector<int>{5, 5, 5, 7, 13, 13});
  CHECK(bridges(bridge_recursive(ip)) == std::vector<int>{5, 5, 5, 7, 13, 13});
  CHECK(fixed_points(bridge_direct(ip)) == std::vector<int>{5, 7});
  CHECK(troublesome_secondary(ip) == std::vector<int>{1});
  CHECK(in_E1(nu));
  const auto out = psi(nu).output;
  CHECK(out == parts(6, "12_b,11_a,9_f,9_e,9_d,9_c,8_e,8_d,8_c,7_a,6_f,5_d,5_a"));
  CHECK(phi(Partition{6, out, Ground::O}).output == nu);
}

TEST_CASE("a lone secondary part bridges to itself") {
  for (const char* s : {"5_bc", "9_d,5_bc", "2_ab"}) {
    const auto ip = index_split(part_list(4, s, Ground::E));
    const auto br = bridge_direct(ip);
    REQUIRE(br.size() == 1);
    CHECK(br.begin()->second == br.begin()->first);
  }
}

TEST_CASE("E1 membership") {
  CHECK(in_E1(part_list(4, eight, Ground::E)));
  CHECK_FALSE(in_E1(part_list(4, "3_cd,3_ab,1_c", Ground::E)));
  CHECK(in_E1(part_list(4, "3_ad,2_bc,1_a", Ground::E)));
  CHECK_FALSE(in_E1(part_list(4, "4_ad,3_bc,2_a", Ground::E)));
  sweep_E(4, 10, [](const Partition& nu) {
    if (in_E2(nu.parts)) {
      CHECK(troublesome_secondary(index_split(nu)).empty());
      CHECK(in_E1(nu));
    }
  });
  for (int n = 1; n <= 3; ++n) sweep_E(n, 10, [](const Partition& nu) { CHECK(in_E1(nu)); });
}

TEST_CASE("bridge properties on a sweep") {
  sweep_E(4, 11, [](const Partition& nu) {
    const auto ip = index_split(nu);
    const auto direct = bridge_direct(ip);
    CHECK(bridge_scan(ip) == direct);
    const auto v = e1_verdicts(nu);
    CHECK(v.cond2 == v.cond3);
    CHECK(v.cond2 == v.roundtrip);
    int prev = 0;
    for (const auto& [i, b] : direct) {
      CHECK(b >= i);
      CHECK(b >= prev);
      prev = b;
      if (direct.count(b)) CHECK(direct.at(b) == b);
    }
  });
}

TEST_CASE("first crossing under psi") {
  // For i in I with Br(i) > i, the first primary part crossed by the
  // secondary part at i is piece Br(i) grown by (Br(i) - i)/2 - 1.
  sweep_E(4, 11, [](const Partition& nu) {
    const auto ip = index_split(nu);
    const auto br = bridge_direct(ip);
    const auto tr = psi(nu).trace;
    for (const auto& [i, b] : br) {
      const MachineEvent* first = nullptr;
      for (const auto& e : tr.events)
        if (e.kind == EventKind::cross && e.tag == i) {
          first = &e;
          break;
        }
      if (b == i) {
        CHECK(first == nullptr);
        continue;
      }
      REQUIRE(first != nullptr);
      REQUIRE(first->crossed.has_value());
      CHECK(*first->crossed == materialize(ip.at(b) + ((b - i) / 2 - 1)));
    }
  });
}
