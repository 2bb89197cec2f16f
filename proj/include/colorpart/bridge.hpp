#pragma once

#include <map>
#include <vector>

#include "colorpart/partition.hpp"

namespace colorpart {

// nu with every secondary part replaced in place by its two halves. Pieces
// are numbered 1..N; I holds the upper-half indices, J the indices of parts
// that were primary to begin with.
struct IndexedPartition {
  int n = 0;
  std::vector<ColoredPart> parts;
  std::vector<ColoredPart> halves;
  std::vector<int> I;
  std::vector<int> J;
  // owner[x-1]: 0-based position in parts of the part piece x comes from.
  std::vector<int> owner;

  int count() const { return int(halves.size()); }
  // Piece x for 1 <= x <= N, and the sentinel 0_{a_n} at x = N+1.
  ShiftedPart at(int x) const;
  bool is_upper(int x) const;
  bool is_primary_piece(int x) const;
  // The secondary part whose upper half is piece i.
  const ColoredPart& secondary_at(int i) const;
  // Neighbors of that secondary part in nu, or nullptr.
  const ColoredPart* left_of(int i) const;
  const ColoredPart* right_of(int i) const;
};

IndexedPartition index_split(const Partition& nu);

// Secondary parts (by upper-half index) that are |>-below their left
// neighbor but not |>-above their right neighbor. A first part has no left
// neighbor and passes the left test.
std::vector<int> troublesome_secondary(const IndexedPartition& ip);

// i in I -> Br(i).
using BridgeTable = std::map<int, int>;

BridgeTable bridge_direct(const IndexedPartition& ip);

// Fixed-point scan over the lower halves of each run of consecutive
// secondary parts, right to left. Throws internal_error when the result
// disagrees with bridge_direct.
BridgeTable bridge_recursive(const IndexedPartition& ip);
// The scan alone, without the cross-check.
BridgeTable bridge_scan(const IndexedPartition& ip);

std::vector<int> fixed_points(const BridgeTable& br);

enum class E1Route { cond2, cond3, roundtrip };

bool in_E1(const Partition& nu, E1Route route);
bool in_E1(const IndexedPartition& ip, const BridgeTable& br, E1Route route);

struct E1Verdicts {
  bool cond2 = false;
  bool cond3 = false;
  bool roundtrip = false;
};

E1Verdicts e1_verdicts(const Partition& nu);
// All three routes; throws internal_error if they disagree.
bool in_E1(const Partition& nu);

std::string route_name(E1Route r);

}  // namespace colorpart
