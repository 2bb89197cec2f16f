#include "colorpart/identity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "colorpart/error.hpp"
#include "colorpart/parallel.hpp"

namespace colorpart {

BigInt TruncatedSeries::coefficient(const ColorProduct& c, int m) const {
  if (m < 0 || m > M) return 0;
  const auto& layer = terms[std::size_t(m)];
  const auto it = layer.find(c.exponents);
  return it == layer.end() ? BigInt(0) : it->second;
}

TruncatedSeries product_series(int n, int M) {
  if (M < 0) throw input_error("truncation degree must be nonnegative");
  (void)all_colors(n);
  TruncatedSeries s;
  s.n = n;
  s.M = M;
  s.terms.assign(std::size_t(M + 1), {});
  s.terms[0][std::vector<int>(std::size_t(n), 0)] = 1;
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= M; ++k)
      // Descending m reads layer m-k before this factor touches it.
      for (int m = M; m >= k; --m)
        for (const auto& [e, c] : s.terms[std::size_t(m - k)]) {
          std::vector<int> f = e;
          f[std::size_t(i)] += 1;
          s.terms[std::size_t(m)][f] += c;
        }
  return s;
}

namespace {

struct Tally {
  std::uint64_t U = 0, V = 0, W2 = 0, W3 = 0, Wr = 0;
};

using Stratum = std::map<std::vector<int>, Tally>;

Stratum tally_stratum(int n, int m, bool with_e1) {
  Stratum st;
  for_each_O(n, m, [&](std::span<const ColoredPart> s) { st[color_product(n, s).exponents].U += 1; });
  for_each_E(n, m, [&](std::span<const ColoredPart> s) {
    Tally& t = st[color_product(n, s).exponents];
    t.V += 1;
    if (!with_e1) return;
    const Partition nu{n, std::vector<ColoredPart>(s.begin(), s.end()), Ground::E};
    const IndexedPartition ip = index_split(nu);
    const BridgeTable br = bridge_direct(ip);
    t.W2 += in_E1(ip, br, E1Route::cond2);
    t.W3 += in_E1(ip, br, E1Route::cond3);
    t.Wr += in_E1(ip, br, E1Route::roundtrip);
  });
  return st;
}

CountReport run_check(int n, int M, CheckKind kind, unsigned jobs) {
  if (M < 0) throw input_error("max degree must be nonnegative");
  (void)all_colors(n);
  CountReport rep;
  rep.n = n;
  rep.M = M;
  rep.kind = kind;
  const bool identity = kind == CheckKind::identity;
  std::vector<Stratum> strata(std::size_t(M + 1));
  parallel_for(strata.size(), jobs, [&](std::size_t m) { strata[m] = tally_stratum(n, int(m), identity); });
  const TruncatedSeries series = identity ? product_series(n, M) : TruncatedSeries{};
  for (int m = 0; m <= M; ++m) {
    Stratum& st = strata[std::size_t(m)];
    if (identity)
      for (const auto& [e, c] : series.terms[std::size_t(m)]) (void)st[e];
    for (const auto& [e, t] : st) {
      CountRow row;
      row.c = ColorProduct{e};
      row.m = m;
      row.U = t.U;
      row.V = t.V;
      row.W = t.Wr;
      rep.partitions_O += t.U;
      rep.partitions_E += t.V;
      row.u_le_v = t.U <= t.V;
      if (identity) {
        row.coefficient = series.coefficient(row.c, m);
        row.u_eq_w = t.U == t.Wr && t.W2 == t.Wr && t.W3 == t.Wr;
        row.u_eq_coefficient = BigInt(t.U) == row.coefficient;
        if (!row.u_eq_w || !row.u_eq_coefficient) rep.counterexamples.push_back(row);
      } else {
        if (!row.u_le_v) rep.counterexamples.push_back(row);
        if (t.U < t.V && !rep.strict_witness) rep.strict_witness = row;
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

template <class Pred>
std::uint64_t count_matching(Ground g, int n, const ColorProduct& c, int m, Pred pred) {
  if (int(c.exponents.size()) != n) throw input_error("color product has the wrong number of exponents");
  std::uint64_t total = 0;
  for_each_in(g, n, m, [&](std::span<const ColoredPart> s) {
    if (color_product(n, s) == c && pred(s)) ++total;
  });
  return total;
}

}  // namespace

std::uint64_t count_U(int n, const ColorProduct& c, int m) {
  return count_matching(Ground::O, n, c, m, [](auto) { return true; });
}

std::uint64_t count_V(int n, const ColorProduct& c, int m) {
  return count_matching(Ground::E, n, c, m, [](auto) { return true; });
}

std::uint64_t count_W(int n, const ColorProduct& c, int m, E1Route route) {
  return count_matching(Ground::E, n, c, m, [&](std::span<const ColoredPart> s) {
    return in_E1(Partition{n, std::vector<ColoredPart>(s.begin(), s.end()), Ground::E}, route);
  });
}

CountReport verify_identity(int n, int M, unsigned jobs) { return run_check(n, M, CheckKind::identity, jobs); }
CountReport verify_inequality(int n, int M, unsigned jobs) { return run_check(n, M, CheckKind::inequality, jobs); }

std::vector<int> specialize_12(const Partition& p) {
  if (p.n != 4) throw input_error("the mod-12 specialization needs exactly four primary colors");
  static constexpr int w[5] = {0, 8, 4, 2, 1};
  std::vector<int> out;
  out.reserve(p.parts.size());
  for (const auto& part : p.parts) {
    const Color& c = part.color();
    out.push_back(12 * part.size() - w[c.i] - (c.secondary() ? w[c.j] : 0));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Corollary12 corollary12(int N) {
  if (N < 0) throw input_error("size must be nonnegative");
  Corollary12 res;
  res.N = N;
  // Every part of size k maps to at least 4k.
  for (int m = 0; 4 * m <= N; ++m) {
    for_each_O(4, m, [&](std::span<const ColoredPart> s) {
      const Partition p{4, std::vector<ColoredPart>(s.begin(), s.end()), Ground::O};
      std::vector<int> img = specialize_12(p);
      if (std::accumulate(img.begin(), img.end(), 0) == N) res.from_O.push_back(std::move(img));
    });
    for_each_E(4, m, [&](std::span<const ColoredPart> s) {
      const Partition p{4, std::vector<ColoredPart>(s.begin(), s.end()), Ground::E};
      std::vector<int> img = specialize_12(p);
      if (std::accumulate(img.begin(), img.end(), 0) == N && in_E1(p)) res.from_E1.push_back(std::move(img));
    });
  }
  std::sort(res.from_O.begin(), res.from_O.end(), std::greater<>());
  std::sort(res.from_E1.begin(), res.from_E1.end(), std::greater<>());
  return res;
}

bool satisfies_mod12_gaps(const std::vector<int>& parts) {
  const auto mod = [](int v) { return ((v % 12) + 12) % 12; };
  for (int v : parts) {
    if (v < 1) return false;
    if (mod(v) == 1 || mod(v) == 5) return false;
    if (v == 2 || v == 3 || v == 6 || v == 7 || v == 9) return false;
  }
  for (std::size_t x = 0; x + 1 < parts.size(); ++x) {
    const int a = parts[x];
    const int gap = a - parts[x + 1];
    if (gap > 12) continue;
    if (gap == 9 && (mod(a) == 3 || mod(a) == 9)) {
      if (x + 2 >= parts.size() || a - parts[x + 2] >= 24) continue;
      if (a == 27 && parts[x + 1] == 18 && parts[x + 2] == 4) continue;
      return false;
    }
    if (gap == 12 && (mod(a) == 4 || mod(a) == 8 || mod(a) == 10 || mod(a) == 11)) continue;
    return false;
  }
  return true;
}

}  // namespace colorpart
