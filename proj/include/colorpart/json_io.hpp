#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "colorpart/forest.hpp"
#include "colorpart/identity.hpp"
#include "colorpart/machines.hpp"
#include "colorpart/patterns.hpp"

namespace colorpart {

using Json = nlohmann::ordered_json;

// {"size": 4, "color": "a1a4"}.
Json part_json(const ColoredPart& p);
Json parts_json(std::span<const ColoredPart> parts);
Json partition_json(const Partition& p);

// Accepts {"size": 4, "color": "a1a4"} (or "ad") and the string "4_ad".
ColoredPart part_from_json(const Json& j, int n);
// Accepts {"colors": n, "parts": [...]} or a bare array when n is given.
// A given n must agree with the document.
Partition partition_from_json(const Json& j, std::optional<int> n = std::nullopt);

Json triplet_json(const Triplet& t);
Json phi_json(const Partition& lambda, const PhiResult& r);
Json psi_json(const Partition& nu, const PsiResult& r);
Json bridge_json(const Partition& nu);
Json forest_json(const Partition& nu);
Json enumerate_json(int n, int m, Ground g, const std::vector<Partition>& parts);
Json report_json(const CountReport& rep);
Json corollary_json(const Corollary12& c);
Json patterns_json(int n, int max_parts, int max_size, bool no_cd_moves, const std::vector<PatternInstance>& pats);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace colorpart
