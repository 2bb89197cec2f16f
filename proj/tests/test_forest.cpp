#include <doctest.h>

#include <algorithm>
#include <regex>
#include <sstream>

#include "colorpart/forest.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const char* eight = "14_bd,11_a,10_ad,9_bc,8_ac,3_c,2_cd,2_ab";

template <class F>
void sweep_E(int max_n, int max_m, F f) {
  for (int n = 1; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m)
      for_each_E(n, m, [&](std::span<const ColoredPart> s) { f(Partition{n, {s.begin(), s.end()}, Ground::E}); });
}

// Loose line grammar for the emitted DOT: header, node, edge, closing brace.
bool dot_parses(const std::string& dot) {
  static const std::regex header(R"(^digraph \w+ \{$)");
  static const std::regex stmt(R"(^  (\w+( -> \w+)?|node|edge|graph|rankdir=\w+)( \[.*\])?;$)");
  std::istringstream in(dot);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  if (lines.size() < 2 || !std::regex_match(lines.front(), header) || lines.back() != "}") return false;
  for (std::size_t k = 1; k + 1 < lines.size(); ++k)
    if (!std::regex_match(lines[k], stmt)) return false;
  return true;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("theta, word and forest of the eight-part example") {
  const auto nu = part_list(4, eight, Ground::E);
  const auto th = theta(nu);
  CHECK(th.theta == std::vector<int>{2, 3, 1, 5, 6, 7, 8, 4, 9, 10, 11, 12, 13, 14});
  CHECK(motzkin_word(nu).letters == "HUDUUDUDDHUDUD");
  const auto br = bridge_from_theta(nu);
  CHECK(br.at(1) == 3);
  CHECK(br.at(4) == 8);

  const auto f = forest(nu);
  REQUIRE(f.trees.size() == 3);
  CHECK(f.edge_count() == 6);
  CHECK(f.trees[0].children.empty());
  CHECK(*f.trees[0].root_annotation == P(4, 11, "a"));
  const auto& t1 = f.trees[1];
  CHECK(*t1.root_annotation == P(4, 3, "c"));
  REQUIRE(t1.children.size() == 2);
  CHECK(t1.children[0].index == 1);
  CHECK(t1.children[0].children.empty());
  CHECK(t1.children[1].index == 8);
  REQUIRE(t1.children[1].children.size() == 2);
  CHECK(t1.children[1].children[0].index == 4);
  CHECK(t1.children[1].children[1].index == 6);
  const auto& t2 = f.trees[2];
  CHECK(t2.planted());
  REQUIRE(t2.children.size() == 2);
  CHECK(t2.children[0].index == 11);
  CHECK(t2.children[1].index == 13);
  CHECK(forest_word(f) == "HUDUUDUDDHUDUD");
  CHECK(root_edges(f) == std::vector<int>{1, 8, 11, 13});

  const auto dot = dot_export(f);
  CHECK(dot == dot_export(forest(nu)));
  CHECK(dot_parses(dot));
  CHECK(count_of(dot, " -> v") == 6);
  CHECK(count_of(dot, "dashed") == 1);
}

TEST_CASE("degenerate shapes") {
  const auto prim = part_list(4, "6_d,4_b,1_a", Ground::E);
  CHECK(theta(prim).theta == std::vector<int>{1, 2, 3});
  CHECK(motzkin_word(prim).letters == "HHH");
  const auto pf = forest(prim);
  CHECK(pf.trees.size() == 4);
  CHECK(pf.edge_count() == 0);
  for (const auto& t : pf.trees) CHECK(t.children.empty());

  const auto one = part_list(4, "5_bc", Ground::E);
  CHECK(motzkin_word(one).letters == "UD");
  CHECK(forest(one).trees.size() == 1);

  WeightedForest empty;
  const auto dot = dot_export(empty);
  CHECK(dot_parses(dot));
  CHECK(count_of(dot, ";") == 0);
  CHECK(dot == "digraph forest {\n}\n");
}

TEST_CASE("forest and theta properties on a sweep") {
  sweep_E(4, 12, [](const Partition& nu) {
    const auto ip = index_split(nu);
    const auto th = theta(nu);
    const int N = ip.count();
    auto sorted = th.theta;
    std::sort(sorted.begin(), sorted.end());
    for (int x = 1; x <= N; ++x) CHECK(sorted[x - 1] == x);
    check_position_relations(ip, th);

    const auto w = motzkin_word(ip, th);
    CHECK(is_motzkin(w.letters));
    // Every H sits on the axis: primary parts close trees.
    int height = 0;
    for (char c : w.letters) {
      height += c == 'U' ? 1 : c == 'D' ? -1 : 0;
      if (c == 'H') CHECK(height == 0);
    }
    const auto br = bridge_from_theta(ip, th);
    CHECK(br == bridge_direct(ip));

    // Br(i) = i iff theta_{i+1} = i+1, and the displacement count.
    for (int i : ip.I) {
      CHECK((br.at(i) == i) == (th.at(i + 1) == i + 1));
      int c = 0;
      for (int u : ip.I)
        if (u > i && th.at(u) < th.at(i)) ++c;
      for (int u : ip.J)
        if (u > i && th.at(u) < th.at(i)) ++c;
      CHECK(th.at(i + 1) - (i + 1) == c);
    }

    const auto f = forest(ip, th);
    CHECK(f.edge_count() == int(ip.I.size()));
    CHECK(f.trees.size() == ip.J.size() + 1);
    CHECK(forest_word(f) == w.letters);

    // Root edges are the indices whose lower half lands before every later upper half.
    std::vector<int> expect;
    for (int i : ip.I) {
      bool low = true;
      for (int u : ip.I)
        if (u > i && th.at(u) < th.at(i + 1)) low = false;
      if (low) expect.push_back(i);
    }
    CHECK(root_edges(f) == expect);
  });
}

TEST_CASE("motzkin validity") {
  CHECK(is_motzkin(""));
  CHECK(is_motzkin("UHD"));
  CHECK_FALSE(is_motzkin("DU"));
  CHECK_FALSE(is_motzkin("UUD"));
  CHECK_FALSE(is_motzkin("UX"));
}
