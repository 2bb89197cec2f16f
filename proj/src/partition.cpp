#include "colorpart/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "colorpart/error.hpp"

namespace colorpart {

int Partition::size() const { return total_size(parts); }

int total_size(std::span<const ColoredPart> parts) {
  int s = 0;
  for (const auto& p : parts) s += p.size();
  return s;
}

bool in_O(std::span<const ColoredPart> seq) {
  for (std::size_t x = 0; x < seq.size(); ++x) {
    if (!seq[x].primary()) return false;
    if (x + 1 < seq.size() && !succ(seq[x], seq[x + 1])) return false;
  }
  return true;
}

bool in_E(std::span<const ColoredPart> seq) {
  for (std::size_t x = 0; x + 1 < seq.size(); ++x)
    if (!ord_gg(seq[x], seq[x + 1])) return false;
  return true;
}

bool in_E2(std::span<const ColoredPart> seq) {
  for (std::size_t x = 0; x + 1 < seq.size(); ++x)
    if (!ord_tri(seq[x], seq[x + 1])) return false;
  return true;
}

bool in_ground(std::span<const ColoredPart> seq, Ground g) {
  switch (g) {
    case Ground::raw: return true;
    case Ground::O: return in_O(seq);
    case Ground::E: return in_E(seq);
    case Ground::E2: return in_E2(seq);
  }
  return false;
}

Partition make_partition(int n, std::vector<ColoredPart> parts, Ground ground) {
  for (const auto& p : parts)
    if (p.color().n != n) throw input_error("part color count differs from partition color count");
  if (!in_ground(parts, ground))
    throw input_error(pretty_parts(parts) + " is not in " + ground_name(ground));
  return Partition{n, std::move(parts), ground};
}

ColorProduct color_product(int n, std::span<const ColoredPart> parts) {
  ColorProduct c{std::vector<int>(std::size_t(n), 0)};
  for (const auto& p : parts) {
    c.exponents[std::size_t(p.color().i - 1)] += 1;
    if (p.secondary()) c.exponents[std::size_t(p.color().j - 1)] += 1;
  }
  return c;
}

ColorProduct parse_color_product(const std::string& spec, int n) {
  ColorProduct c{std::vector<int>(std::size_t(n), 0)};
  if (spec.empty() || spec == "1") return c;
  if (spec.find(',') != std::string::npos || std::all_of(spec.begin(), spec.end(), ::isdigit)) {
    std::stringstream ss(spec);
    std::string tok;
    std::size_t x = 0;
    while (std::getline(ss, tok, ',')) {
      if (x >= c.exponents.size()) throw input_error("too many exponents in '" + spec + "'");
      try {
        c.exponents[x++] = std::stoi(tok);
      } catch (const std::exception&) {
        throw input_error("bad exponent '" + tok + "'");
      }
      if (c.exponents[x - 1] < 0) throw input_error("negative exponent in '" + spec + "'");
    }
    if (x != c.exponents.size()) throw input_error("expected " + std::to_string(n) + " exponents in '" + spec + "'");
    return c;
  }
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = pos + 1;
    if (spec[pos] == 'a' && end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end])))
      while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
    const Color col = parse_color(spec.substr(pos, end - pos), n);
    if (!col.primary()) throw input_error("color products are written over primary colors");
    int e = 1;
    if (end < spec.size() && spec[end] == '^') {
      std::size_t q = end + 1;
      while (q < spec.size() && std::isdigit(static_cast<unsigned char>(spec[q]))) ++q;
      if (q == end + 1) throw input_error("missing exponent in '" + spec + "'");
      e = std::stoi(spec.substr(end + 1, q - end - 1));
      end = q;
    }
    c.exponents[std::size_t(col.i - 1)] += e;
    pos = end;
  }
  return c;
}

std::string format_color_product(const ColorProduct& c, int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    const int e = c.exponents[std::size_t(i - 1)];
    if (e == 0) continue;
    out += pretty_name(Color{n, i, 0});
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::vector<ColoredPart> parts_up_to(int n, int m, bool with_secondary) {
  std::vector<ColoredPart> out;
  const std::vector<Color> colors = all_colors(n);
  for (int s = m; s >= 1; --s)
    for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
      if (it->secondary() && (!with_secondary || s < 2)) continue;
      out.push_back(ColoredPart::unchecked(s, *it));
    }
  return out;
}

namespace {

// Depth-first generation over a candidate list sorted descending by >.
// Every relation used here implies >, so successors of a part always sit
// further down the list.
class Generator {
 public:
  Generator(Ground g, int n, int m) : g_(g), m_(m), cands_(parts_up_to(n, m, g != Ground::O)) {
    first_with_size_.assign(std::size_t(m + 2), cands_.size());
    for (std::size_t x = cands_.size(); x-- > 0;) first_with_size_[std::size_t(cands_[x].size())] = x;
    for (int s = 1; s <= m + 1; ++s)
      first_with_size_[std::size_t(s)] = std::min(first_with_size_[std::size_t(s)], first_with_size_[std::size_t(s - 1)]);
  }

  void run(const PartitionVisitor& visit) {
    buf_.clear();
    if (m_ == 0) {
      visit(buf_);
      return;
    }
    for (std::size_t x = first_with_size_[std::size_t(m_)]; x < cands_.size(); ++x) descend(x, m_, visit);
  }

  void run_from(const ColoredPart& first, const PartitionVisitor& visit) {
    buf_.clear();
    const auto it = std::find(cands_.begin(), cands_.end(), first);
    if (it == cands_.end()) return;
    descend(std::size_t(it - cands_.begin()), m_, visit);
  }

 private:
  bool related(const ColoredPart& x, const ColoredPart& y) const {
    switch (g_) {
      case Ground::O: return succ(x, y);
      case Ground::E: return ord_gg(x, y);
      case Ground::E2: return ord_tri(x, y);
      case Ground::raw: break;
    }
    return true;
  }

  void descend(std::size_t x, int remaining, const PartitionVisitor& visit) {
    const ColoredPart& part = cands_[x];
    if (part.size() > remaining) return;
    buf_.push_back(part);
    const int rest = remaining - part.size();
    if (rest == 0) {
      visit(buf_);
    } else {
      for (std::size_t y = std::max(x + 1, first_with_size_[std::size_t(rest)]); y < cands_.size(); ++y)
        if (related(part, cands_[y])) descend(y, rest, visit);
    }
    buf_.pop_back();
  }

  Ground g_;
  int m_;
  std::vector<ColoredPart> cands_;
  // Index of the first candidate whose size is at most s.
  std::vector<std::size_t> first_with_size_;
  std::vector<ColoredPart> buf_;
};

void check_args(int n, int m) {
  if (m < 0) throw input_error("partition size must be nonnegative");
  (void)all_colors(n);
}

}  // namespace

void for_each_in(Ground g, int n, int m, const PartitionVisitor& visit) {
  if (g == Ground::raw) throw input_error("cannot enumerate raw sequences");
  check_args(n, m);
  Generator(g, n, m).run(visit);
}

void for_each_O(int n, int m, const PartitionVisitor& visit) { for_each_in(Ground::O, n, m, visit); }
void for_each_E(int n, int m, const PartitionVisitor& visit) { for_each_in(Ground::E, n, m, visit); }
void for_each_E2(int n, int m, const PartitionVisitor& visit) { for_each_in(Ground::E2, n, m, visit); }

void for_each_with_first(Ground g, int n, int m, const ColoredPart& first, const PartitionVisitor& visit) {
  if (g == Ground::raw) throw input_error("cannot enumerate raw sequences");
  check_args(n, m);
  Generator(g, n, m).run_from(first, visit);
}

namespace {
std::vector<Partition> collect(Ground g, int n, int m) {
  std::vector<Partition> out;
  for_each_in(g, n, m, [&](std::span<const ColoredPart> s) {
    out.push_back(Partition{n, std::vector<ColoredPart>(s.begin(), s.end()), g});
  });
  return out;
}
}  // namespace

std::vector<Partition> enumerate_O(int n, int m) { return collect(Ground::O, n, m); }
std::vector<Partition> enumerate_E(int n, int m) { return collect(Ground::E, n, m); }
std::vector<Partition> enumerate_E2(int n, int m) { return collect(Ground::E2, n, m); }

std::string ground_name(Ground g) {
  switch (g) {
    case Ground::raw: return "raw";
    case Ground::O: return "O";
    case Ground::E: return "E";
    case Ground::E2: return "E2";
  }
  return "?";
}

Ground parse_ground(const std::string& s) {
  if (s == "O") return Ground::O;
  if (s == "E") return Ground::E;
  if (s == "E2") return Ground::E2;
  if (s == "raw") return Ground::raw;
  throw input_error("unknown ground set '" + s + "' (expected O, E or E2)");
}

}  // namespace colorpart
