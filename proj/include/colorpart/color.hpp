#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace colorpart {

constexpr int max_colors = 64;

// A primary color a_i (j == 0) or a secondary color a_i a_j with i < j.
// Indices are 1-based. n is the number of primary colors in play.
struct Color {
  int n = 0;
  int i = 0;
  int j = 0;

  bool primary() const { return j == 0; }
  bool secondary() const { return j != 0; }

  friend bool operator==(const Color&, const Color&) = default;
};

Color primary_color(int n, int i);
Color secondary_color(int n, int i, int j);

// Number of colors, primary and secondary: n(n+1)/2.
int color_count(int n);

// Every color for n, ascending in the chain
// a1a2 < ... < a1an < a1 < a2a3 < ... < a2 < ... < an.
std::vector<Color> all_colors(int n);
std::vector<Color> secondary_colors(int n);

// 0-based position of c in the chain, by closed formula.
int rank(const Color& c, int n);
inline int rank(const Color& c) { return rank(c, c.n); }

// rank(p) <= rank(q); throws input_error when p.n != q.n.
bool color_le(const Color& p, const Color& q);

// Chain comparison without the n check, for hot loops. The chain order does
// not depend on n: compare first indices, then the second index with the
// primary color placed after every secondary sharing its first index.
inline int chain_key(const Color& c) { return c.i * (max_colors + 2) + (c.j == 0 ? max_colors + 1 : c.j); }
inline bool chain_le(const Color& p, const Color& q) { return chain_key(p) <= chain_key(q); }

// (p, q) = (a_k a_l, a_i a_j) with i<j<k<l or k<i<j<l.
bool special_pair(const Color& p, const Color& q);

// Minimal k - l with beta(k_p) > alpha(l_q), by closed formula.
int delta(const Color& p, const Color& q);

// "a1a4" style.
std::string canonical_name(const Color& c);
// "ad" style; falls back to canonical_name when n > 26.
std::string pretty_name(const Color& c);
// Accepts both styles ("a1a4", "ad", "a3", "c").
Color parse_color(std::string_view text, int n);

}  // namespace colorpart
