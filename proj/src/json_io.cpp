#include "colorpart/json_io.hpp"

#include <charconv>
#include <functional>
#include <limits>

#include "colorpart/error.hpp"

namespace colorpart {

namespace {

std::string color_text(const Color& c) { return canonical_name(c); }

Json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

Json ints(const std::vector<int>& v) { return Json(v); }

}  // namespace

Json part_json(const ColoredPart& p) { return Json{{"size", p.size()}, {"color", color_text(p.color())}}; }

Json parts_json(std::span<const ColoredPart> parts) {
  Json a = Json::array();
  for (const auto& p : parts) a.push_back(part_json(p));
  return a;
}

Json partition_json(const Partition& p) { return Json{{"colors", p.n}, {"parts", parts_json(p.parts)}}; }

ColoredPart part_from_json(const Json& j, int n) {
  if (j.is_object()) {
    if (!j.contains("size") || !j.contains("color") || !j["size"].is_number_integer() || !j["color"].is_string())
      throw input_error("a part needs an integer \"size\" and a string \"color\"");
    return ColoredPart(j["size"].get<int>(), parse_color(j["color"].get<std::string>(), n));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    int size = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), size);
    if (ec != std::errc() || end == s.data()) throw input_error("cannot parse part '" + s + "'");
    std::string_view rest(end, std::size_t(s.data() + s.size() - end));
    if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
    return ColoredPart(size, parse_color(rest, n));
  }
  throw input_error("a part must be an object or a string like \"4_ad\"");
}

Partition partition_from_json(const Json& j, std::optional<int> n) {
  const Json* parts = &j;
  if (j.is_object()) {
    if (!j.contains("parts") || !j["parts"].is_array()) throw input_error("partition document needs a \"parts\" array");
    if (j.contains("colors")) {
      if (!j["colors"].is_number_integer()) throw input_error("\"colors\" must be an integer");
      const int doc_n = j["colors"].get<int>();
      if (n && *n != doc_n) throw input_error("--colors disagrees with the document's \"colors\"");
      n = doc_n;
    }
    parts = &j["parts"];
  } else if (!j.is_array()) {
    throw input_error("partition must be an object or an array of parts");
  }
  if (!n) throw input_error("number of colors missing: give \"colors\" in the document or --colors");
  (void)all_colors(*n);
  std::vector<ColoredPart> v;
  for (const auto& p : *parts) v.push_back(part_from_json(p, *n));
  return Partition{*n, std::move(v), Ground::raw};
}

Json triplet_json(const Triplet& t) {
  return Json{{"delta", parts_json(t.delta)}, {"gamma", parts_json(t.gamma)}, {"mu", parts_json(t.mu)}};
}

namespace {

Json events_json(const MachineTrace& tr) {
  Json a = Json::array();
  for (const auto& e : tr.events) {
    Json ev{{"kind", event_name(e.kind)}, {"index", e.index}};
    if (tr.kind == MachineKind::psi) ev["tag"] = e.tag;
    if (e.crossed) ev["crossed"] = part_json(*e.crossed);
    a.push_back(std::move(ev));
  }
  return a;
}

Json triplets_json(const std::vector<Triplet>& ts) {
  Json a = Json::array();
  for (const auto& t : ts) a.push_back(triplet_json(t));
  return a;
}

}  // namespace

Json phi_json(const Partition& lambda, const PhiResult& r) {
  return Json{{"command", "phi"},
              {"colors", lambda.n},
              {"input", parts_json(lambda.parts)},
              {"output", parts_json(r.output.parts)},
              {"in_E", in_E(r.output.parts)},
              {"events", events_json(r.trace)},
              {"triplets", triplets_json(phi_triplets(r.trace))}};
}

Json psi_json(const Partition& nu, const PsiResult& r) {
  return Json{{"command", "psi"},
              {"colors", nu.n},
              {"input", parts_json(nu.parts)},
              {"output", parts_json(r.output)},
              {"in_O", in_O(r.output)},
              {"events", events_json(r.trace)},
              {"triplets", triplets_json(psi_triplets(r.trace))},
              {"theta", ints(r.trace.theta)}};
}

Json bridge_json(const Partition& nu) {
  if (!in_E(nu.parts)) throw input_error(pretty_parts(nu.parts) + " is not in E");
  const IndexedPartition ip = index_split(nu);
  const BridgeTable br = bridge_recursive(ip);
  Json table = Json::array();
  for (const auto& [i, b] : br) table.push_back(Json{{"i", i}, {"bridge", b}});
  const E1Verdicts v = e1_verdicts(nu);
  return Json{{"command", "bridge"},
              {"colors", nu.n},
              {"input", parts_json(nu.parts)},
              {"halves", parts_json(ip.halves)},
              {"I", ints(ip.I)},
              {"J", ints(ip.J)},
              {"TS", ints(troublesome_secondary(ip))},
              {"Br", table},
              {"fixed_points", ints(fixed_points(br))},
              {"in_E1", Json{{"cond2", v.cond2}, {"cond3", v.cond3}, {"roundtrip", v.roundtrip}}}};
}

Json forest_json(const Partition& nu) {
  if (!in_E(nu.parts)) throw input_error(pretty_parts(nu.parts) + " is not in E");
  const IndexedPartition ip = index_split(nu);
  const ThetaMap th = theta(nu);
  const MotzkinWord w = motzkin_word(nu);
  const WeightedForest f = forest(ip, th);
  std::function<Json(const ForestNode&)> node = [&](const ForestNode& x) {
    Json kids = Json::array();
    for (const auto& c : x.children) kids.push_back(node(c));
    return Json{{"index", x.index}, {"weight", part_json(x.weight)}, {"children", kids}};
  };
  Json trees = Json::array();
  for (const auto& t : f.trees) {
    Json kids = Json::array();
    for (const auto& c : t.children) kids.push_back(node(c));
    trees.push_back(Json{{"planted", t.planted()},
                         {"root", t.root_annotation ? part_json(*t.root_annotation) : Json(nullptr)},
                         {"root_index", t.planted() ? Json(nullptr) : Json(t.root_index)},
                         {"children", kids}});
  }
  return Json{{"command", "forest"},
              {"colors", nu.n},
              {"input", parts_json(nu.parts)},
              {"theta", ints(th.theta)},
              {"motzkin", w.letters},
              {"tree_count", f.trees.size()},
              {"edge_count", f.edge_count()},
              {"trees", trees}};
}

Json enumerate_json(int n, int m, Ground g, const std::vector<Partition>& parts) {
  Json a = Json::array();
  for (const auto& p : parts) a.push_back(parts_json(p.parts));
  return Json{{"command", "enumerate"}, {"colors", n}, {"size", m}, {"ground", ground_name(g)}, {"count", parts.size()},
              {"partitions", a}};
}

namespace {

Json row_json(const CountRow& r, int n, CheckKind kind) {
  Json j{{"product", format_color_product(r.c, n)}, {"m", r.m}, {"U", r.U}, {"V", r.V}};
  if (kind == CheckKind::identity) {
    j["W"] = r.W;
    j["coefficient"] = big_json(r.coefficient);
    j["U_eq_W"] = r.u_eq_w;
    j["U_eq_coefficient"] = r.u_eq_coefficient;
  } else {
    j["U_le_V"] = r.u_le_v;
  }
  return j;
}

}  // namespace

Json report_json(const CountReport& rep) {
  Json ce = Json::array();
  for (const auto& r : rep.counterexamples) ce.push_back(row_json(r, rep.n, rep.kind));
  Json j{{"command", "verify"},
         {"colors", rep.n},
         {"max_q", rep.M},
         {"check", rep.kind == CheckKind::identity ? "identity" : "inequality"},
         {"passed", rep.passed()},
         {"strata", rep.rows.size()},
         {"partitions_O", rep.partitions_O},
         {"partitions_E", rep.partitions_E},
         {"counterexamples", ce}};
  if (rep.kind == CheckKind::inequality)
    j["strict_witness"] = rep.strict_witness ? row_json(*rep.strict_witness, rep.n, rep.kind) : Json(nullptr);
  return j;
}

Json corollary_json(const Corollary12& c) {
  bool gaps = true;
  for (const auto& v : c.from_E1) gaps = gaps && satisfies_mod12_gaps(v);
  return Json{{"command", "corollary12"},
              {"size", c.N},
              {"count_O", c.from_O.size()},
              {"count_E1", c.from_E1.size()},
              {"from_O", c.from_O},
              {"from_E1", c.from_E1},
              {"E1_images_meet_gap_conditions", gaps}};
}

Json patterns_json(int n, int max_parts, int max_size, bool no_cd_moves, const std::vector<PatternInstance>& pats) {
  Json list = Json::array();
  for (const auto& p : pats) {
    const auto sym = symbolize(p);
    const auto fam = match_family(p);
    list.push_back(Json{{"parts", parts_json(p.parts)},
                        {"symbolic", sym ? Json(symbolic_word(*sym)) : Json(nullptr)},
                        {"k", p.parts.back().size()},
                        {"family", fam ? Json(*fam) : Json(nullptr)}});
  }
  Json groups = Json::array();
  for (const auto& g : group_families(pats))
    groups.push_back(Json{{"word", g.word}, {"family", g.family ? Json(*g.family) : Json(nullptr)}, {"k", g.ks}});
  return Json{{"command", "mine"},
              {"colors", n},
              {"bounds", Json{{"max_parts", max_parts}, {"max_size", max_size}, {"no_cd_moves", no_cd_moves}}},
              {"count", pats.size()},
              {"patterns", list},
              {"families", groups}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace colorpart
