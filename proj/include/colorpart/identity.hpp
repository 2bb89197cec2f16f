#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "colorpart/bridge.hpp"
#include "colorpart/partition.hpp"

namespace colorpart {

using BigInt = boost::multiprecision::cpp_int;

// prod_{i<=n} prod_{k<=M} (1 + a_i q^k) with every term of q-degree > M dropped.
struct TruncatedSeries {
  int n = 0;
  int M = 0;
  // m -> exponent vector -> coefficient
  std::vector<std::map<std::vector<int>, BigInt>> terms;

  BigInt coefficient(const ColorProduct& c, int m) const;
};

TruncatedSeries product_series(int n, int M);

std::uint64_t count_U(int n, const ColorProduct& c, int m);
std::uint64_t count_V(int n, const ColorProduct& c, int m);
std::uint64_t count_W(int n, const ColorProduct& c, int m, E1Route route);

struct CountRow {
  ColorProduct c;
  int m = 0;
  std::uint64_t U = 0;
  std::uint64_t V = 0;
  std::uint64_t W = 0;
  BigInt coefficient = 0;
  bool u_eq_w = false;
  bool u_le_v = false;
  bool u_eq_coefficient = false;
};

enum class CheckKind { identity, inequality };

struct CountReport {
  int n = 0;
  int M = 0;
  CheckKind kind = CheckKind::identity;
  std::vector<CountRow> rows;
  std::vector<CountRow> counterexamples;
  // A stratum with U < V, when the inequality check finds one.
  std::optional<CountRow> strict_witness;
  std::uint64_t partitions_O = 0;
  std::uint64_t partitions_E = 0;

  bool passed() const { return counterexamples.empty(); }
};

// Every (C, m <= M) seen by the enumerators or the product: U = W = coefficient,
// with W counted through all three membership routes.
CountReport verify_identity(int n, int M, unsigned jobs = 1);
// U <= V on every (C, m <= M).
CountReport verify_inequality(int n, int M, unsigned jobs = 1);

// n = 4 only: k_{a_i} -> 12k - w_i, k_{a_i a_j} -> 12k - w_i - w_j with
// w = (8, 4, 2, 1); result sorted descending.
std::vector<int> specialize_12(const Partition& p);

struct Corollary12 {
  int N = 0;
  std::vector<std::vector<int>> from_O;
  std::vector<std::vector<int>> from_E1;
};

Corollary12 corollary12(int N);

// The difference conditions met by the images of E1 (parts avoid 1, 5 mod 12
// and 2, 3, 6, 7, 9; gaps above 12 with the 9- and 12-gap exceptions and the
// (27, 18, 4) exception).
bool satisfies_mod12_gaps(const std::vector<int>& parts);

}  // namespace colorpart
