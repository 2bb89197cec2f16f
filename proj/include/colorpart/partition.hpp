#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "colorpart/part.hpp"

namespace colorpart {

enum class Ground { raw, O, E, E2 };

// Parts stored largest first.
struct Partition {
  int n = 0;
  std::vector<ColoredPart> parts;
  Ground ground = Ground::raw;

  int size() const;
  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.n == b.n && a.parts == b.parts; }
};

// Builds a partition and checks it against the requested ground set.
Partition make_partition(int n, std::vector<ColoredPart> parts, Ground ground = Ground::raw);

bool in_O(std::span<const ColoredPart> seq);
bool in_E(std::span<const ColoredPart> seq);
bool in_E2(std::span<const ColoredPart> seq);
bool in_ground(std::span<const ColoredPart> seq, Ground g);

struct ColorProduct {
  std::vector<int> exponents;

  friend bool operator==(const ColorProduct&, const ColorProduct&) = default;
  friend auto operator<=>(const ColorProduct&, const ColorProduct&) = default;
};

ColorProduct color_product(int n, std::span<const ColoredPart> parts);
inline ColorProduct color_product(const Partition& p) { return color_product(p.n, p.parts); }
int total_size(std::span<const ColoredPart> parts);

// Parses "a^2bc", "a1^2a2a3" or an exponent list "2,1,1,0".
ColorProduct parse_color_product(const std::string& spec, int n);
std::string format_color_product(const ColorProduct& c, int n);

using PartitionVisitor = std::function<void(std::span<const ColoredPart>)>;

// Each partition of total size m in the ground set is visited exactly once.
// The span is only valid during the callback.
void for_each_O(int n, int m, const PartitionVisitor& visit);
void for_each_E(int n, int m, const PartitionVisitor& visit);
void for_each_E2(int n, int m, const PartitionVisitor& visit);
void for_each_in(Ground g, int n, int m, const PartitionVisitor& visit);

// Same, restricted to partitions whose first part is `first` (every
// partition with at least one part falls in exactly one such class).
void for_each_with_first(Ground g, int n, int m, const ColoredPart& first, const PartitionVisitor& visit);

// Every part of size <= m, descending in >.
std::vector<ColoredPart> parts_up_to(int n, int m, bool with_secondary);

std::vector<Partition> enumerate_O(int n, int m);
std::vector<Partition> enumerate_E(int n, int m);
std::vector<Partition> enumerate_E2(int n, int m);

std::string ground_name(Ground g);
Ground parse_ground(const std::string& s);

}  // namespace colorpart
