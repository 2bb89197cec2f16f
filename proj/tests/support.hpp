#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "colorpart/partition.hpp"

namespace testing {

using namespace colorpart;

// "5_b,4_ad,3_bc" -> parts.
inline std::vector<ColoredPart> parts(int n, const std::string& text) {
  std::vector<ColoredPart> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto us = tok.find('_');
    out.emplace_back(std::stoi(tok.substr(0, us)), parse_color(tok.substr(us + 1), n));
  }
  return out;
}

inline Partition part_list(int n, const std::string& text, Ground g = Ground::raw) {
  return make_partition(n, text.empty() ? std::vector<ColoredPart>{} : parts(n, text), g);
}

// Lexicographic on (size, color rank), for ordered containers in tests.
struct PartsLess {
  bool operator()(const std::vector<ColoredPart>& a, const std::vector<ColoredPart>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
      return std::pair(x.size(), rank(x.color())) < std::pair(y.size(), rank(y.color()));
    });
  }
};
using PartSet = std::set<std::vector<ColoredPart>, PartsLess>;

inline ColoredPart P(int n, int size, const char* color) { return ColoredPart(size, parse_color(color, n)); }
inline Color C(int n, const char* color) { return parse_color(color, n); }

}  // namespace testing
