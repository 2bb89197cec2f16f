#pragma once

#include <concepts>
#include <span>
#include <string>
#include <vector>

#include "colorpart/color.hpp"

namespace colorpart {

// (size, color) with size >= 1, and size >= 2 when the color is secondary.
class ColoredPart {
 public:
  ColoredPart() = default;
  ColoredPart(int size, Color color);

  // Skips validation; callers guarantee the invariants.
  static ColoredPart unchecked(int size, Color color) {
    ColoredPart p;
    p.size_ = size;
    p.color_ = color;
    return p;
  }

  int size() const { return size_; }
  const Color& color() const { return color_; }
  bool primary() const { return color_.primary(); }
  bool secondary() const { return color_.secondary(); }

  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;

 private:
  int size_ = 1;
  Color color_{};
};

// A part with an integer added to its size. Only the size moves; the color
// stays. The shifted size may drop below one (the 0_{a_n} sentinel).
struct ShiftedPart {
  ColoredPart part;
  int shift = 0;

  int size() const { return part.size() + shift; }
  const Color& color() const { return part.color(); }

  friend bool operator==(const ShiftedPart& a, const ShiftedPart& b) {
    return a.size() == b.size() && a.color() == b.color();
  }
};

inline ShiftedPart operator+(const ColoredPart& p, int d) { return ShiftedPart{p, d}; }
inline ShiftedPart operator-(const ColoredPart& p, int d) { return ShiftedPart{p, -d}; }
inline ShiftedPart operator+(const ShiftedPart& p, int d) { return ShiftedPart{p.part, p.shift + d}; }
inline ShiftedPart operator-(const ShiftedPart& p, int d) { return ShiftedPart{p.part, p.shift - d}; }

template <class T>
concept PartLike = requires(const T& t) {
  { t.size() } -> std::convertible_to<int>;
  { t.color() } -> std::convertible_to<const Color&>;
};

// Turns a shifted value back into a part; throws internal_error when the
// result breaks the size invariants.
ColoredPart materialize(const ShiftedPart& p);

// k_p > l_q  iff  k - l >= chi(p <= q).
template <PartLike A, PartLike B>
bool succ(const A& x, const B& y) {
  return x.size() - y.size() >= int(chain_le(x.color(), y.color()));
}

// "> or identical".
template <PartLike A, PartLike B>
bool succeq(const A& x, const B& y) {
  return (x.size() == y.size() && x.color() == y.color()) || succ(x, y);
}

// x |> y: x >= y+1 when either color is primary, x > y+1 when both are secondary.
template <PartLike A, PartLike B>
bool ord_tri(const A& x, const B& y) {
  const ShiftedPart up{ColoredPart::unchecked(y.size(), y.color()), 1};
  if (x.color().primary() || y.color().primary()) return succeq(x, up);
  return succ(x, up);
}

// x >> y: as |>, relaxed to x > y on special pairs.
template <PartLike A, PartLike B>
bool ord_gg(const A& x, const B& y) {
  if (special_pair(x.color(), y.color())) return succ(x, y);
  return ord_tri(x, y);
}

// Upper and lower halves of a secondary part.
ColoredPart alpha(const ColoredPart& x);
ColoredPart beta(const ColoredPart& x);

// Two primary parts with x > y but not x >> y.
bool is_troublesome(const ColoredPart& x, const ColoredPart& y);

// The secondary part z with alpha(z) = x, beta(z) = y.
ColoredPart merge(const ColoredPart& x, const ColoredPart& y);

// seq[i] >= seq[j] + d(j - i), 0-based indices.
bool d_different_distant(std::span<const ColoredPart> seq, std::size_t i, std::size_t j, int d);

// Brute-force minimal k - l over secondary k_p, l_q with 2 <= k, l <= bound
// and beta(k_p) > alpha(l_q).
int delta_oracle(const Color& p, const Color& q, int search_bound = 8);

enum class ClassOrder { greater, not_greater };

// Compares the classes of two secondary parts: bigger size wins, and on equal
// sizes the larger first color index wins.
ClassOrder class_compare(const ColoredPart& x, const ColoredPart& y);

enum class Relation { succ, tri, gg };

// Smallest d with (L+d)_p rel L_q for every admissible L; the relations only
// depend on the colors and the difference of sizes.
int min_difference(Relation rel, const Color& p, const Color& q);

std::string pretty_part(const ColoredPart& p);
std::string pretty_parts(std::span<const ColoredPart> parts);

}  // namespace colorpart
