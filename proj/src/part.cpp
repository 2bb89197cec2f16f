#include "colorpart/part.hpp"

#include <limits>

#include "colorpart/error.hpp"

namespace colorpart {

ColoredPart::ColoredPart(int size, Color color) : size_(size), color_(color) {
  if (color.i < 1 || color.i > color.n || (color.j != 0 && (color.j <= color.i || color.j > color.n)))
    throw input_error("invalid color " + canonical_name(color) + " for n=" + std::to_string(color.n));
  if (size < 1) throw input_error("part size must be positive, got " + std::to_string(size));
  if (color.secondary() && size < 2)
    throw input_error("secondary part " + canonical_name(color) + " needs size >= 2");
}

ColoredPart materialize(const ShiftedPart& p) {
  const int s = p.size();
  if (s < 1 || (p.color().secondary() && s < 2))
    throw internal_error("shifted part " + std::to_string(s) + "[" + canonical_name(p.color()) +
                         "] is not a valid part");
  return ColoredPart::unchecked(s, p.color());
}

ColoredPart alpha(const ColoredPart& x) {
  if (!x.secondary()) throw input_error("alpha needs a secondary part");
  const Color& c = x.color();
  const int k = x.size() / 2;
  if (x.size() % 2 == 0) return ColoredPart::unchecked(k, Color{c.n, c.j, 0});
  return ColoredPart::unchecked(k + 1, Color{c.n, c.i, 0});
}

ColoredPart beta(const ColoredPart& x) {
  if (!x.secondary()) throw input_error("beta needs a secondary part");
  const Color& c = x.color();
  const int k = x.size() / 2;
  if (x.size() % 2 == 0) return ColoredPart::unchecked(k, Color{c.n, c.i, 0});
  return ColoredPart::unchecked(k, Color{c.n, c.j, 0});
}

bool is_troublesome(const ColoredPart& x, const ColoredPart& y) {
  if (!x.primary() || !y.primary()) throw input_error("troublesome pairs consist of primary parts");
  return succ(x, y) && !ord_gg(x, y);
}

ColoredPart merge(const ColoredPart& x, const ColoredPart& y) {
  if (!x.primary() || !y.primary() || !is_troublesome(x, y))
    throw input_error("merge needs a troublesome pair, got " + pretty_part(x) + ", " + pretty_part(y));
  const Color& a = x.color();
  const Color& b = y.color();
  const Color c{a.n, std::min(a.i, b.i), std::max(a.i, b.i)};
  const ColoredPart z = ColoredPart::unchecked(x.size() + y.size(), c);
  if (alpha(z) != x || beta(z) != y) throw internal_error("merge produced a part whose halves differ from its inputs");
  return z;
}

bool d_different_distant(std::span<const ColoredPart> seq, std::size_t i, std::size_t j, int d) {
  if (i > j || j >= seq.size()) throw input_error("d_different_distant: indices out of range");
  return succeq(seq[i], seq[j] + d * int(j - i));
}

// beta(k_p) > alpha(l_q) depends only on k - l and the parities of k and l,
// since adding two to a size adds one to each half. No negative difference
// works (beta(k) <= k/2 < alpha(l) when k < l), and the difference 2 always
// works with l even (beta((l+2)_p) has size l/2 + 1 > l/2). So sizes up to 4
// already reach the minimum; the default bound leaves margin.
int delta_oracle(const Color& p, const Color& q, int search_bound) {
  if (!p.secondary() || !q.secondary()) throw input_error("delta_oracle needs two secondary colors");
  int best = std::numeric_limits<int>::max();
  for (int k = 2; k <= search_bound; ++k)
    for (int l = 2; l <= search_bound; ++l)
      if (succ(beta(ColoredPart::unchecked(k, p)), alpha(ColoredPart::unchecked(l, q))))
        best = std::min(best, k - l);
  if (best == std::numeric_limits<int>::max()) throw internal_error("delta_oracle: search bound too small");
  return best;
}

ClassOrder class_compare(const ColoredPart& x, const ColoredPart& y) {
  if (!x.secondary() || !y.secondary()) throw input_error("class_compare needs secondary parts");
  if (x.size() > y.size()) return ClassOrder::greater;
  if (x.size() == y.size() && x.color().i > y.color().i) return ClassOrder::greater;
  return ClassOrder::not_greater;
}

int min_difference(Relation rel, const Color& p, const Color& q) {
  constexpr int base = 16;
  const auto holds = [&](int d) {
    const ColoredPart x = ColoredPart::unchecked(base + d, p);
    const ColoredPart y = ColoredPart::unchecked(base, q);
    switch (rel) {
      case Relation::succ: return succ(x, y);
      case Relation::tri: return ord_tri(x, y);
      case Relation::gg: return ord_gg(x, y);
    }
    return false;
  };
  for (int d = -4; d <= 4; ++d) {
    if (!holds(d)) continue;
    for (int e = d; e <= 8; ++e)
      if (!holds(e)) throw internal_error("relation is not monotone in the size difference");
    return d;
  }
  throw internal_error("no minimal difference found");
}

std::string pretty_part(const ColoredPart& p) {
  return std::to_string(p.size()) + "[" + pretty_name(p.color()) + "]";
}

std::string pretty_parts(std::span<const ColoredPart> parts) {
  std::string out = "(";
  for (std::size_t x = 0; x < parts.size(); ++x) {
    if (x) out += ",";
    out += pretty_part(parts[x]);
  }
  return out + ")";
}

}  // namespace colorpart
