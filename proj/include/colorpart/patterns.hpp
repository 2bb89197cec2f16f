#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colorpart/partition.hpp"

namespace colorpart {

// A >>-chain of secondary parts, optionally closed by one primary part.
struct PatternInstance {
  int n = 0;
  std::vector<ColoredPart> parts;

  bool ends_primary() const { return !parts.empty() && parts.back().primary(); }
  // First two parts are secondary and the first is not |>-above the second.
  bool head_flag() const;
  Partition as_partition() const { return Partition{n, parts, Ground::E}; }

  friend bool operator==(const PatternInstance&, const PatternInstance&) = default;
};

// Validates the chain shape; throws input_error otherwise.
PatternInstance make_pattern(int n, std::vector<ColoredPart> parts);

enum class Move { special, two_headed };

// c_1 o c_2 o ... o c_m with base size k on c_m.
struct SymbolicPattern {
  int n = 0;
  std::vector<Color> colors;
  std::vector<Move> moves;  // colors.size() - 1 entries
  int k = 1;
};

// "ad->bc=>a": pretty color names, "->" for a special step, "=>" otherwise.
std::string symbolic_word(const SymbolicPattern& sym);
SymbolicPattern parse_symbolic(const std::string& word, int n, int k);

PatternInstance realize(const SymbolicPattern& sym);
// The symbolic form when every step is minimal for its move.
std::optional<SymbolicPattern> symbolize(const PatternInstance& pat);

// Some part entered and left by special steps of minimal difference.
bool has_double_arrow(const PatternInstance& pat);

bool is_shortcut(const PatternInstance& pat);
bool is_forbidden(const PatternInstance& pat);
bool is_optimal_forbidden(const PatternInstance& pat);

struct MineOptions {
  bool no_double_arrow = false;
  // Turn off the head and reach cuts; for cross-checks.
  bool exhaustive = false;
  unsigned jobs = 1;
};

// Optimal forbidden patterns with at most max_parts parts of size at most
// max_size, in canonical order.
std::vector<PatternInstance> mine_optimal(int n, int max_parts, int max_size, const MineOptions& opt = {});

// Canonical order: part count, first size, color ranks, sizes.
bool canonical_less(const PatternInstance& a, const PatternInstance& b);

// Iterates the shortcut zeta ahead of eta until the result leaves E1.
PatternInstance build_forbidden_from_shortcut(const PatternInstance& zeta, const PatternInstance& eta);

// Name of the known optimal family containing pat, for four or five colors.
std::optional<std::string> match_family(const PatternInstance& pat);

struct FamilyGroup {
  std::string word;
  std::optional<std::string> family;
  std::vector<int> ks;
};

// Groups instances by symbolic word; instances without one get their own
// group keyed by their part list.
std::vector<FamilyGroup> group_families(const std::vector<PatternInstance>& pats);

}  // namespace colorpart
