#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colorpart/bridge.hpp"

namespace colorpart {

// theta[x-1] = final position under Psi of piece x of nu.
struct ThetaMap {
  std::vector<int> theta;

  int at(int x) const;  // with theta_0 = 0 and theta_{N+1} = N+1
  std::vector<int> inverse() const;
};

ThetaMap theta(const Partition& nu);

// Position relations between theta and the index sets; throws internal_error
// on the first violation.
void check_position_relations(const IndexedPartition& ip, const ThetaMap& th);

struct MotzkinWord {
  std::string letters;  // over U, D, H
};

MotzkinWord motzkin_word(const IndexedPartition& ip, const ThetaMap& th);
// Computes theta, checks the position relations, and reads the word.
MotzkinWord motzkin_word(const Partition& nu);
bool is_motzkin(const std::string& letters);

BridgeTable bridge_from_theta(const IndexedPartition& ip, const ThetaMap& th);
// Throws internal_error when the result differs from bridge_direct.
BridgeTable bridge_from_theta(const Partition& nu);

struct ForestNode {
  int index = 0;  // upper-half index of the secondary part on the edge above
  ColoredPart weight;
  std::vector<ForestNode> children;
};

struct ForestTree {
  // Primary part closing the segment and its piece index; absent for the
  // last segment, which is drawn as a planted tree.
  std::optional<ColoredPart> root_annotation;
  int root_index = 0;
  std::vector<ForestNode> children;

  bool planted() const { return !root_annotation.has_value(); }
};

struct WeightedForest {
  int n = 0;
  std::vector<ForestTree> trees;

  int edge_count() const;
};

WeightedForest forest(const IndexedPartition& ip, const ThetaMap& th);
WeightedForest forest(const Partition& nu);

// Walks the forest back into a U/D/H word.
std::string forest_word(const WeightedForest& f);

// Upper-half indices of edges leaving a root.
std::vector<int> root_edges(const WeightedForest& f);

std::string dot_export(const WeightedForest& f);

}  // namespace colorpart
