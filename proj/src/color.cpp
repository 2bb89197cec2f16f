#include "colorpart/color.hpp"

#include <cctype>
#include <charconv>

#include "colorpart/error.hpp"

namespace colorpart {

namespace {

void check_n(int n) {
  if (n < 1 || n > max_colors)
    throw input_error("color count must lie in [1, " + std::to_string(max_colors) + "], got " +
                      std::to_string(n));
}

// Positions taken by the blocks of first index 1..i-1; block t holds n-t+1 colors.
int block_start(int i, int n) { return (i - 1) * (n + 1) - (i - 1) * i / 2; }

}  // namespace

Color primary_color(int n, int i) {
  check_n(n);
  if (i < 1 || i > n) throw input_error("primary index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
  return Color{n, i, 0};
}

Color secondary_color(int n, int i, int j) {
  check_n(n);
  if (i < 1 || j > n || i >= j)
    throw input_error("secondary color needs 1 <= i < j <= n, got (" + std::to_string(i) + "," +
                      std::to_string(j) + ") with n=" + std::to_string(n));
  return Color{n, i, j};
}

int color_count(int n) { return n * (n + 1) / 2; }

std::vector<Color> all_colors(int n) {
  check_n(n);
  std::vector<Color> out;
  out.reserve(color_count(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(Color{n, i, j});
    out.push_back(Color{n, i, 0});
  }
  return out;
}

std::vector<Color> secondary_colors(int n) {
  std::vector<Color> out;
  for (const Color& c : all_colors(n))
    if (c.secondary()) out.push_back(c);
  return out;
}

int rank(const Color& c, int n) {
  check_n(n);
  if (c.i < 1 || c.i > n || (c.j != 0 && (c.j <= c.i || c.j > n)))
    throw input_error("color " + canonical_name(c) + " invalid for n=" + std::to_string(n));
  if (c.primary()) return block_start(c.i, n) + (n - c.i);
  return block_start(c.i, n) + (c.j - c.i - 1);
}

bool color_le(const Color& p, const Color& q) {
  if (p.n != q.n)
    throw input_error("comparing colors from different color counts (" + std::to_string(p.n) + " vs " +
                      std::to_string(q.n) + ")");
  return rank(p) <= rank(q);
}

bool special_pair(const Color& p, const Color& q) {
  if (!p.secondary() || !q.secondary()) return false;
  const int k = p.i, l = p.j, i = q.i, j = q.j;
  return (i < j && j < k && k < l) || (k < i && i < j && j < l);
}

int delta(const Color& p, const Color& q) {
  if (!p.secondary() || !q.secondary()) throw input_error("delta needs two secondary colors");
  const int r = p.i, s = p.j, x = q.i, y = q.j;
  return int(r <= y) + int(r <= x) * int(s <= y);
}

std::string canonical_name(const Color& c) {
  std::string out = "a" + std::to_string(c.i);
  if (c.secondary()) out += "a" + std::to_string(c.j);
  return out;
}

std::string pretty_name(const Color& c) {
  if (c.n > 26) return canonical_name(c);
  std::string out(1, char('a' + c.i - 1));
  if (c.secondary()) out += char('a' + c.j - 1);
  return out;
}

Color parse_color(std::string_view text, int n) {
  check_n(n);
  std::vector<int> idx;
  std::size_t pos = 0;
  const auto bad = [&] { return input_error("cannot parse color '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (text.find_first_of("0123456789") != std::string_view::npos) {
    while (pos < text.size()) {
      if (text[pos] != 'a') throw bad();
      ++pos;
      int v = 0;
      auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc() || end == text.data() + pos) throw bad();
      pos = std::size_t(end - text.data());
      idx.push_back(v);
    }
  } else {
    if (n > 26) throw input_error("letter color names need n <= 26");
    for (char ch : text) {
      if (ch < 'a' || ch > 'z') throw bad();
      idx.push_back(ch - 'a' + 1);
    }
  }
  if (idx.size() == 1) return primary_color(n, idx[0]);
  if (idx.size() == 2) return secondary_color(n, idx[0], idx[1]);
  throw bad();
}

}  // namespace colorpart
