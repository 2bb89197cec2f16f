#include "colorpart/patterns.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <tuple>

#include "colorpart/bridge.hpp"
#include "colorpart/error.hpp"
#include "colorpart/parallel.hpp"

namespace colorpart {

bool PatternInstance::head_flag() const {
  return parts.size() >= 2 && parts[0].secondary() && parts[1].secondary() && !ord_tri(parts[0], parts[1]);
}

PatternInstance make_pattern(int n, std::vector<ColoredPart> parts) {
  (void)all_colors(n);
  if (parts.empty()) throw input_error("a pattern needs at least one part");
  for (std::size_t x = 0; x < parts.size(); ++x) {
    if (parts[x].color().n != n) throw input_error("pattern part uses a different number of colors");
    if (parts[x].primary() && x + 1 != parts.size()) throw input_error("a primary part may only close a pattern");
    if (x > 0 && !ord_gg(parts[x - 1], parts[x]))
      throw input_error("pattern parts " + pretty_part(parts[x - 1]) + " and " + pretty_part(parts[x]) + " are not >>-ordered");
  }
  return PatternInstance{n, std::move(parts)};
}

std::string symbolic_word(const SymbolicPattern& sym) {
  std::string out;
  for (std::size_t x = 0; x < sym.colors.size(); ++x) {
    if (x > 0) out += sym.moves[x - 1] == Move::special ? "->" : "=>";
    out += pretty_name(sym.colors[x]);
  }
  return out;
}

SymbolicPattern parse_symbolic(const std::string& word, int n, int k) {
  SymbolicPattern sym;
  sym.n = n;
  sym.k = k;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = word.size();
    Move mv = Move::special;
    for (const auto& [tok, m] : {std::pair{"->", Move::special}, std::pair{"=>", Move::two_headed}}) {
      const std::size_t at = word.find(tok, pos);
      if (at < next) {
        next = at;
        mv = m;
      }
    }
    sym.colors.push_back(parse_color(std::string_view(word).substr(pos, next - pos), n));
    if (next == word.size()) break;
    sym.moves.push_back(mv);
    pos = next + 2;
  }
  return sym;
}

PatternInstance realize(const SymbolicPattern& sym) {
  if (sym.colors.empty() || sym.moves.size() + 1 != sym.colors.size())
    throw input_error("symbolic pattern needs one move between consecutive colors");
  std::vector<int> sizes(sym.colors.size());
  sizes.back() = sym.k;
  for (std::size_t x = sym.moves.size(); x-- > 0;) {
    const Color& p = sym.colors[x];
    const Color& q = sym.colors[x + 1];
    const int chi = int(chain_le(p, q));
    if (sym.moves[x] == Move::special) {
      if (!special_pair(p, q))
        throw input_error("-> needs a special pair, got " + pretty_name(p) + "->" + pretty_name(q));
      sizes[x] = sizes[x + 1] + chi;
    } else {
      sizes[x] = sizes[x + 1] + 1 + chi;
    }
  }
  std::vector<ColoredPart> parts;
  for (std::size_t x = 0; x < sizes.size(); ++x) parts.emplace_back(sizes[x], sym.colors[x]);
  return make_pattern(sym.n, std::move(parts));
}

std::optional<SymbolicPattern> symbolize(const PatternInstance& pat) {
  if (pat.parts.empty()) return std::nullopt;
  SymbolicPattern sym;
  sym.n = pat.n;
  sym.k = pat.parts.back().size();
  for (std::size_t x = 0; x < pat.parts.size(); ++x) {
    sym.colors.push_back(pat.parts[x].color());
    if (x == 0) continue;
    const ColoredPart& a = pat.parts[x - 1];
    const ColoredPart& b = pat.parts[x];
    const int diff = a.size() - b.size();
    const int chi = int(chain_le(a.color(), b.color()));
    if (special_pair(a.color(), b.color()) && diff == chi)
      sym.moves.push_back(Move::special);
    else if (diff == 1 + chi)
      sym.moves.push_back(Move::two_headed);
    else
      return std::nullopt;
  }
  return sym;
}

namespace {

bool arrow(const ColoredPart& a, const ColoredPart& b) { return ord_gg(a, b) && !ord_tri(a, b); }

bool double_arrow_at(std::span<const ColoredPart> p, std::size_t mid) {
  return mid >= 1 && mid + 1 < p.size() && arrow(p[mid - 1], p[mid]) && arrow(p[mid], p[mid + 1]);
}

}  // namespace

bool has_double_arrow(const PatternInstance& pat) {
  for (std::size_t x = 1; x + 1 < pat.parts.size(); ++x)
    if (double_arrow_at(pat.parts, x)) return true;
  return false;
}

bool is_shortcut(const PatternInstance& pat) {
  if (pat.parts.size() < 2) throw input_error("a shortcut check needs at least two parts");
  for (const auto& p : pat.parts)
    if (!p.secondary()) throw input_error("a shortcut check needs secondary parts only");
  const int s = int(pat.parts.size()) - 1;
  const ColoredPart& head = pat.parts.front();
  const ColoredPart shifted = ColoredPart::unchecked(head.size() - s + 1, head.color());
  return class_compare(pat.parts.back(), shifted) == ClassOrder::greater;
}

bool is_forbidden(const PatternInstance& pat) {
  if (!in_E(pat.parts)) throw input_error("pattern is not >>-ordered");
  return !in_E1(pat.as_partition());
}

bool is_optimal_forbidden(const PatternInstance& pat) {
  if (!is_forbidden(pat)) return false;
  const auto forbidden = [&](std::vector<ColoredPart> v) { return !in_E1(Partition{pat.n, std::move(v), Ground::E}); };
  std::vector<ColoredPart> tail(pat.parts.begin() + 1, pat.parts.end());
  std::vector<ColoredPart> init(pat.parts.begin(), pat.parts.end() - 1);
  return !forbidden(std::move(tail)) && !forbidden(std::move(init));
}

bool canonical_less(const PatternInstance& a, const PatternInstance& b) {
  const auto key = [](const PatternInstance& p) {
    std::vector<int> ranks, sizes;
    for (const auto& x : p.parts) {
      ranks.push_back(rank(x.color()));
      sizes.push_back(x.size());
    }
    return std::tuple(p.parts.size(), p.parts.empty() ? 0 : p.parts.front().size(), ranks, sizes);
  };
  return key(a) < key(b);
}

namespace {

// Single membership route; the routes agree on every swept partition.
bool fast_forbidden(int n, std::span<const ColoredPart> s) {
  const Partition nu{n, std::vector<ColoredPart>(s.begin(), s.end()), Ground::E};
  const IndexedPartition ip = index_split(nu);
  return !in_E1(ip, bridge_direct(ip), E1Route::cond3);
}

struct Miner {
  int n;
  int max_parts;
  const MineOptions& opt;
  const std::vector<ColoredPart>& candidates;
  std::vector<ColoredPart> cur;
  std::vector<PatternInstance> found;

  // Largest value the bridge target of the first part (a piece plus the
  // number of secondary parts before it) can reach in any extension of cur.
  int reach() const {
    const int last = cur.back().size();
    int best = std::max(last - 1, (last + 1) / 2) + max_parts - 1;
    for (std::size_t m = 1; m < cur.size(); ++m)
      if (cur[m].secondary()) best = std::max(best, (cur[m].size() + 1) / 2 + int(m));
    return best;
  }

  // cur and cur minus its first part are both allowed here.
  void grow() {
    if (int(cur.size()) >= max_parts) return;
    // Failing at the first index needs a target at least as big as the head.
    if (!opt.exhaustive && reach() < cur.front().size()) return;
    const ColoredPart x = cur.back();
    for (const ColoredPart& y : candidates) {
      if (y.size() > x.size()) continue;
      if (!ord_gg(x, y)) continue;
      cur.push_back(y);
      if (!(opt.no_double_arrow && double_arrow_at(cur, cur.size() - 2))) {
        const std::span<const ColoredPart> all(cur);
        if (fast_forbidden(n, all)) {
          if (!fast_forbidden(n, all.subspan(1))) found.push_back(PatternInstance{n, cur});
        } else if (y.secondary() && !fast_forbidden(n, all.subspan(1))) {
          grow();
        }
      }
      cur.pop_back();
    }
  }
};

}  // namespace

std::vector<PatternInstance> mine_optimal(int n, int max_parts, int max_size, const MineOptions& opt) {
  (void)all_colors(n);
  if (max_parts < 1 || max_size < 1) throw input_error("mining bounds must be positive");
  std::vector<ColoredPart> candidates = parts_up_to(n, max_size, true);
  std::sort(candidates.begin(), candidates.end(), [](const ColoredPart& a, const ColoredPart& b) {
    return std::pair(a.size(), rank(a.color())) > std::pair(b.size(), rank(b.color()));
  });
  // One task per head: a first secondary part and the part after it.
  std::vector<std::pair<ColoredPart, ColoredPart>> heads;
  for (const ColoredPart& a : candidates) {
    if (!a.secondary()) continue;
    for (const ColoredPart& b : candidates) {
      if (b.size() > a.size() || !ord_gg(a, b)) continue;
      if (!opt.exhaustive && !(b.secondary() && special_pair(a.color(), b.color()) && !ord_tri(a, b))) continue;
      heads.emplace_back(a, b);
    }
  }
  std::vector<PatternInstance> out;
  std::mutex mu;
  if (max_parts >= 2)
    parallel_for(heads.size(), opt.jobs, [&](std::size_t h) {
      Miner m{n, max_parts, opt, candidates, {heads[h].first, heads[h].second}, {}};
      const std::span<const ColoredPart> all(m.cur);
      if (fast_forbidden(n, all)) {
        if (!fast_forbidden(n, all.subspan(0, 1)) && !fast_forbidden(n, all.subspan(1)))
          m.found.push_back(PatternInstance{n, m.cur});
      } else if (m.cur.back().secondary() && !fast_forbidden(n, all.subspan(1))) {
        m.grow();
      }
      std::lock_guard lock(mu);
      out.insert(out.end(), m.found.begin(), m.found.end());
    });
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PatternInstance build_forbidden_from_shortcut(const PatternInstance& zeta, const PatternInstance& eta) {
  if (zeta.n != eta.n) throw input_error("shortcut and tail use different numbers of colors");
  if (!is_shortcut(zeta)) throw input_error("zeta is not a shortcut");
  if (eta.parts.size() < 2 || !eta.ends_primary() || !eta.parts.front().secondary())
    throw input_error("eta must start with a secondary part and end with a primary part");
  if (!in_E1(eta.as_partition())) throw input_error("eta must be allowed");
  {
    const IndexedPartition ip = index_split(eta.as_partition());
    if (bridge_direct(ip).at(1) != ip.count()) throw input_error("the bridge of eta's first index must be its last piece");
  }
  const int n = zeta.n;
  const int s = int(zeta.parts.size()) - 1;
  const auto shifted = [](const ColoredPart& p, int d) { return ColoredPart(p.size() + d, p.color()); };

  int c = 0;
  while (!ord_gg(zeta.parts.back() + c, eta.parts.front())) {
    if (++c > eta.parts.front().size() + 8) throw internal_error("no shift puts zeta above eta");
  }

  const auto build = [&](int K, int u) {
    std::vector<ColoredPart> v;
    for (int w = u; w >= 0; --w)
      for (const auto& p : zeta.parts) v.push_back(shifted(p, c + K + s * w));
    for (const auto& p : eta.parts) v.push_back(shifted(p, K));
    return v;
  };
  const auto bridged_to_end = [&](const std::vector<ColoredPart>& v) {
    if (!in_E(v)) return false;
    const IndexedPartition ip = index_split(Partition{n, v, Ground::E});
    for (const auto& [i, b] : bridge_direct(ip))
      if (b != ip.count()) return false;
    return true;
  };

  const int limit = 64 + 4 * int(zeta.parts.size() + eta.parts.size());
  int K = 0;
  while (!bridged_to_end(build(K, 0)))
    if (++K > limit) throw internal_error("no constant bridges every index to the last piece");
  for (int u = 0; u <= limit; ++u) {
    std::vector<ColoredPart> v = build(K, u);
    if (!bridged_to_end(v)) throw internal_error("iterating the shortcut broke the bridge");
    if (!in_E1(Partition{n, v, Ground::E})) return make_pattern(n, std::move(v));
  }
  throw internal_error("shortcut iteration never left E1");
}

namespace {

struct FamilyRule {
  std::string label;
  std::regex re;
  int k_min;
  int k_max;  // -1: unbounded
  std::vector<std::string> prev_in;
  std::vector<std::string> prev_not_in;
};

FamilyRule rule(std::string notation, int k_min, int k_max, std::vector<std::string> prev_in = {},
                std::vector<std::string> prev_not_in = {}) {
  std::string label = notation + (k_max < 0 ? ", k>=" + std::to_string(k_min) : ", k=" + std::to_string(k_min));
  const auto join = [](const std::vector<std::string>& v) {
    std::string o;
    for (const auto& x : v) o += (o.empty() ? "" : ",") + x;
    return o;
  };
  if (!prev_in.empty()) label += ", before last move: " + join(prev_in);
  if (!prev_not_in.empty()) label += ", before last move not: " + join(prev_not_in);
  std::regex re(notation);
  return FamilyRule{std::move(label), std::move(re), k_min, k_max, std::move(prev_in), std::move(prev_not_in)};
}

const std::vector<FamilyRule>& four_color_rules() {
  static const std::vector<FamilyRule> rules = {
      rule("cd->ab=>(c|d)", 1, -1),
      rule("ad->bc=>a", 2, -1),
  };
  return rules;
}

// Five colors, no part entered and left by special steps. Parenthesized
// groups with ? are optional moves, * iterates a generator.
const std::vector<FamilyRule>& five_color_rules() {
  static const std::vector<FamilyRule> rules = [] {
    const std::string p7 = "ae->cd(=>be->cd)*";
    const std::string p8 = p7 + "(=>be)?(=>bd)?(=>bc)?";
    const std::string p6 = "ae->bd(=>bc)?";
    const std::string p5 = "ae->bc";
    const std::string p9 = "de->bc(=>" + p8 + "|=>" + p6 + "|=>" + p5 + "|(=>ae)?=>ad->bc)*";
    const std::string p10 = p9 + "(=>ae)?(=>ad)?(=>ac)?(=>ab)?";
    const std::string p14 = "(cd|ce)->ab(=>de->ab|=>de->ac(=>ab)?|=>" + p10 + ")*";
    return std::vector<FamilyRule>{
        rule("ad->bc=>a", 2, -1),
        rule("be->cd=>b", 2, -1),
        rule("de->ab=>(d|e)", 1, -1),
        rule("de->ac(=>ab)?=>(d|e)", 1, -1),
        rule("ae->bc=>a", 2, -1),
        rule(p6 + "=>a", 2, -1),
        rule("ae->cd=>b", 2, -1),
        rule(p7 + "=>a", 2, -1),
        rule(p8 + "=>a", 2, -1),
        rule("de->bc=>a", 2, -1),
        rule(p9 + "=>e", 1, -1),
        rule(p10 + "=>e", 1, -1),
        rule(p10 + "=>d", 2, -1),
        rule(p10 + "=>d", 1, 1, {}, {"ae", "be"}),
        rule(p9 + "=>" + p7 + "=>(be|bd)", 2, 2),
        rule(p9 + "=>" + p8 + "=>ae", 2, 2),
        rule(p9 + "=>" + p8 + "=>ad", 2, 2, {}, {"be"}),
        rule("(cd|ce)->ab=>(d|e)", 1, -1),
        rule(p14 + "=>c", 2, -1),
        rule(p14 + "=>de=>c", 2, -1),
        rule(p14 + "=>c", 1, 1, {"ac", "ab", "bc"}),
        rule(p14 + "=>" + p9 + "=>" + p7 + "=>be->cd", 3, 3),
        rule(p14 + "=>" + p9 + "=>" + p8 + "=>ae->cd", 3, 3),
        rule(p14 + "=>" + p9 + "(=>ae)?=>ad=>ac", 2, 2),
        rule(p14 + "=>" + p9 + "=>ac", 2, 2, {"bc"}),
    };
  }();
  return rules;
}

std::optional<std::string> match_rules(const PatternInstance& pat) {
  const std::vector<FamilyRule>* rules = nullptr;
  if (pat.n == 4)
    rules = &four_color_rules();
  else if (pat.n == 5)
    rules = &five_color_rules();
  else
    return std::nullopt;
  const auto sym = symbolize(pat);
  if (!sym || sym->colors.size() < 2) return std::nullopt;
  const std::string word = symbolic_word(*sym);
  const std::string prev = pretty_name(sym->colors[sym->colors.size() - 2]);
  for (const FamilyRule& r : *rules) {
    if (sym->k < r.k_min || (r.k_max >= 0 && sym->k > r.k_max)) continue;
    if (!r.prev_in.empty() && std::find(r.prev_in.begin(), r.prev_in.end(), prev) == r.prev_in.end()) continue;
    if (std::find(r.prev_not_in.begin(), r.prev_not_in.end(), prev) != r.prev_not_in.end()) continue;
    if (std::regex_match(word, r.re)) return r.label;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> match_family(const PatternInstance& pat) {
  if (auto direct = match_rules(pat)) return direct;
  // A secondary last part behaves like its upper half.
  if (pat.parts.size() < 2 || pat.ends_primary()) return std::nullopt;
  PatternInstance cut = pat;
  cut.parts.back() = alpha(pat.parts.back());
  if (!in_E(cut.parts)) return std::nullopt;
  if (auto via = match_rules(cut)) return *via + ", last part replaced by its upper half";
  return std::nullopt;
}

std::vector<FamilyGroup> group_families(const std::vector<PatternInstance>& pats) {
  std::map<std::pair<std::string, std::string>, FamilyGroup> groups;
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& p : pats) {
    const auto sym = symbolize(p);
    const std::string word = sym ? symbolic_word(*sym) : pretty_parts(p.parts);
    const auto fam = match_family(p);
    const std::pair key{word, fam.value_or("")};
    auto [it, fresh] = groups.try_emplace(key, FamilyGroup{word, fam, {}});
    if (fresh) order.push_back(key);
    it->second.ks.push_back(p.parts.back().size());
  }
  std::vector<FamilyGroup> out;
  for (const auto& key : order) {
    FamilyGroup g = std::move(groups.at(key));
    std::sort(g.ks.begin(), g.ks.end());
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace colorpart
