#include "colorpart/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "colorpart/error.hpp"
#include "colorpart/json_io.hpp"
#include "colorpart/parallel.hpp"

namespace colorpart {

namespace {

struct Options {
  unsigned jobs = default_jobs();
  bool pretty = false;
  std::string input;
  std::optional<int> colors;
  int size = 0;
  std::string ground = "O";
  std::string product;
  bool count_only = false;
  std::string trace_file;
  std::string dot;
  int max_parts = 5;
  int max_size = 12;
  bool no_cd_moves = false;
  std::string out_file;
  int max_q = 0;
  bool identity = false;
  bool inequality = false;
  std::string json_file;
  int n = 0;
};

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw input_error("invalid JSON in " + path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw input_error("cannot write " + path);
  f << text;
}

Json trace_only(const Json& full) {
  Json t{{"events", full["events"]}, {"triplets", full["triplets"]}};
  if (full.contains("theta")) t["theta"] = full["theta"];
  return t;
}

Partition load_partition(const Options& o) { return partition_from_json(read_json(o.input), o.colors); }

void print_triplets(std::ostream& out, const std::vector<Triplet>& ts) {
  out << std::left << std::setw(4) << "#" << std::setw(30) << "delta" << std::setw(30) << "gamma" << "mu\n";
  for (std::size_t u = 0; u < ts.size(); ++u)
    out << std::setw(4) << u + 1 << std::setw(30) << pretty_parts(ts[u].delta) << std::setw(30)
        << pretty_parts(ts[u].gamma) << pretty_parts(ts[u].mu) << "\n";
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

int run_enumerate(const Options& o, std::ostream& out) {
  if (!o.colors) throw input_error("enumerate needs --colors");
  const Ground g = parse_ground(o.ground);
  if (g == Ground::raw) throw input_error("enumerate needs a ground set O, E or E2");
  std::optional<ColorProduct> want;
  if (!o.product.empty()) want = parse_color_product(o.product, *o.colors);
  const auto keep = [&](std::span<const ColoredPart> s) { return !want || color_product(*o.colors, s) == *want; };
  if (o.count_only) {
    std::uint64_t count = 0;
    for_each_in(g, *o.colors, o.size, [&](std::span<const ColoredPart> s) { count += keep(s); });
    if (o.pretty)
      out << count << " partitions of " << o.size << " in " << ground_name(g) << "\n";
    else
      out << dump(Json{{"command", "enumerate"}, {"colors", *o.colors}, {"size", o.size}, {"ground", ground_name(g)},
                       {"count", count}});
    return exit_ok;
  }
  std::vector<Partition> ps;
  for_each_in(g, *o.colors, o.size, [&](std::span<const ColoredPart> s) {
    if (keep(s)) ps.push_back(Partition{*o.colors, std::vector<ColoredPart>(s.begin(), s.end()), g});
  });
  if (o.pretty) {
    for (const auto& p : ps) out << pretty_parts(p.parts) << "\n";
    out << ps.size() << " partitions\n";
  } else {
    out << dump(enumerate_json(*o.colors, o.size, g, ps));
  }
  return exit_ok;
}

int run_phi(const Options& o, std::ostream& out) {
  const Partition lambda = load_partition(o);
  const PhiResult r = phi(lambda);
  if (!o.trace_file.empty()) write_file(o.trace_file, dump(trace_only(phi_json(lambda, r))));
  if (o.pretty) {
    out << pretty_parts(lambda.parts) << " -> " << pretty_parts(r.output.parts) << "\n";
    print_triplets(out, phi_triplets(r.trace));
  } else {
    out << dump(phi_json(lambda, r));
  }
  return exit_ok;
}

int run_psi(const Options& o, std::ostream& out) {
  const Partition nu = load_partition(o);
  const PsiResult r = psi(nu);
  if (!o.trace_file.empty()) write_file(o.trace_file, dump(trace_only(psi_json(nu, r))));
  if (o.pretty) {
    out << pretty_parts(nu.parts) << " -> " << pretty_parts(r.output) << (in_O(r.output) ? "" : "  (not in O)") << "\n";
    print_triplets(out, psi_triplets(r.trace));
    out << "theta: " << join(r.trace.theta) << "\n";
  } else {
    out << dump(psi_json(nu, r));
  }
  return exit_ok;
}

int run_bridge(const Options& o, std::ostream& out) {
  const Partition nu = load_partition(o);
  const Json j = bridge_json(nu);
  if (!o.pretty) {
    out << dump(j);
    return exit_ok;
  }
  out << "I:  " << join(j["I"].get<std::vector<int>>()) << "\n";
  out << "J:  " << join(j["J"].get<std::vector<int>>()) << "\n";
  out << "TS: " << join(j["TS"].get<std::vector<int>>()) << "\n";
  out << "i   Br(i)\n";
  for (const auto& row : j["Br"]) out << std::left << std::setw(4) << row["i"].get<int>() << row["bridge"].get<int>() << "\n";
  const auto& v = j["in_E1"];
  out << "in E1: cond2=" << v["cond2"].get<bool>() << " cond3=" << v["cond3"].get<bool>()
      << " roundtrip=" << v["roundtrip"].get<bool>() << "\n";
  return exit_ok;
}

int run_forest(const Options& o, std::ostream& out) {
  const Partition nu = load_partition(o);
  const WeightedForest f = forest(nu);
  const std::string dot = dot_export(f);
  if (o.dot == "-") {
    out << dot;
    return exit_ok;
  }
  if (!o.dot.empty()) write_file(o.dot, dot);
  const Json j = forest_json(nu);
  if (!o.json_file.empty()) write_file(o.json_file, dump(j));
  if (o.pretty) {
    out << "theta:   " << join(j["theta"].get<std::vector<int>>()) << "\n";
    out << "Motzkin: " << j["motzkin"].get<std::string>() << "\n";
    out << f.trees.size() << " trees, " << f.edge_count() << " edges\n";
    std::function<void(const ForestNode&, int)> walk = [&](const ForestNode& x, int depth) {
      out << std::string(std::size_t(2 * depth), ' ') << x.index << " " << pretty_part(x.weight) << "\n";
      for (const auto& c : x.children) walk(c, depth + 1);
    };
    for (const auto& t : f.trees) {
      out << (t.planted() ? std::string("planted") : "root " + pretty_part(*t.root_annotation)) << "\n";
      for (const auto& c : t.children) walk(c, 1);
    }
  } else {
    out << dump(j);
  }
  return exit_ok;
}

int run_mine(const Options& o, std::ostream& out) {
  if (!o.colors) throw input_error("mine needs --colors");
  MineOptions mo;
  mo.no_double_arrow = o.no_cd_moves;
  mo.jobs = o.jobs;
  const auto pats = mine_optimal(*o.colors, o.max_parts, o.max_size, mo);
  const Json j = patterns_json(*o.colors, o.max_parts, o.max_size, o.no_cd_moves, pats);
  if (!o.out_file.empty()) write_file(o.out_file, dump(j));
  if (o.pretty) {
    out << pats.size() << " optimal forbidden patterns with at most " << o.max_parts << " parts of size at most "
        << o.max_size << "\n";
    for (const auto& g : group_families(pats))
      out << g.word << "  k = " << join(g.ks) << "  [" << g.family.value_or("no known family") << "]\n";
  } else if (o.out_file.empty()) {
    out << dump(j);
  }
  return exit_ok;
}

int run_verify(const Options& o, std::ostream& out) {
  if (!o.colors) throw input_error("verify needs --colors");
  const CountReport rep =
      o.inequality ? verify_inequality(*o.colors, o.max_q, o.jobs) : verify_identity(*o.colors, o.max_q, o.jobs);
  const Json j = report_json(rep);
  if (!o.json_file.empty()) write_file(o.json_file, dump(j));
  if (o.pretty) {
    out << j["check"].get<std::string>() << " n=" << rep.n << " M=" << rep.M << ": "
        << (rep.passed() ? "pass" : "FAIL") << " over " << rep.rows.size() << " strata (" << rep.partitions_O
        << " in O, " << rep.partitions_E << " in E)\n";
    for (const auto& r : rep.counterexamples)
      out << "  counterexample " << format_color_product(r.c, rep.n) << " m=" << r.m << " U=" << r.U << " V=" << r.V
          << " W=" << r.W << "\n";
    if (rep.strict_witness)
      out << "  strict: " << format_color_product(rep.strict_witness->c, rep.n) << " m=" << rep.strict_witness->m
          << " U=" << rep.strict_witness->U << " V=" << rep.strict_witness->V << "\n";
  } else {
    out << dump(j);
  }
  return rep.passed() ? exit_ok : exit_failed;
}

int run_corollary(const Options& o, std::ostream& out) {
  const Corollary12 c = corollary12(o.n);
  if (!o.pretty) {
    out << dump(corollary_json(c));
    return exit_ok;
  }
  const auto show = [&](const char* name, const std::vector<std::vector<int>>& v) {
    out << name << " (" << v.size() << "):\n";
    for (const auto& p : v) out << "  (" << join(p) << ")\n";
  };
  show("from O", c.from_O);
  show("from E1", c.from_E1);
  return exit_ok;
}

std::string diagnostic(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}}.dump() + "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Colored partitions: bijections, bridges, forbidden patterns and identity checks", "colorpart"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--pretty", o.pretty, "human-readable tables instead of JSON");

  const auto input_opts = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "partition JSON file, - for stdin")->required();
    sub->add_option("--colors", o.colors, "number of primary colors when the input is a bare array");
  };

  auto* en = app.add_subcommand("enumerate", "list partitions of a ground set");
  en->add_option("--colors", o.colors, "number of primary colors")->required();
  en->add_option("--size", o.size, "total size")->required()->check(CLI::NonNegativeNumber);
  en->add_option("--set", o.ground, "O, E or E2")->capture_default_str();
  en->add_option("--color-product", o.product, "keep only this color product, e.g. a^2bc or 2,1,1,0");
  en->add_flag("--count-only", o.count_only, "only count");

  auto* ph = app.add_subcommand("phi", "run Phi on a partition in O");
  input_opts(ph);
  ph->add_option("--trace", o.trace_file, "also write events, snapshots and theta here");
  auto* ps = app.add_subcommand("psi", "run Psi on a partition in E");
  input_opts(ps);
  ps->add_option("--trace", o.trace_file, "also write events, snapshots and theta here");
  auto* br = app.add_subcommand("bridge", "bridge table and E1 membership");
  input_opts(br);
  auto* fo = app.add_subcommand("forest", "final positions, Motzkin word and weighted forest");
  input_opts(fo);
  fo->add_option("--dot", o.dot, "write Graphviz DOT to this file, - for stdout instead of JSON");
  fo->add_option("--json", o.json_file, "also write the JSON here");

  auto* mi = app.add_subcommand("mine", "bounded search for optimal forbidden patterns");
  mi->add_option("--colors", o.colors, "number of primary colors")->required();
  mi->add_option("--max-parts", o.max_parts, "most parts in a pattern")->capture_default_str();
  mi->add_option("--max-size", o.max_size, "largest part size")->capture_default_str();
  mi->add_flag("--no-cd-moves", o.no_cd_moves, "skip patterns with a part entered and left by special steps");
  mi->add_option("--out", o.out_file, "write the JSON here instead of stdout");

  auto* ve = app.add_subcommand("verify", "count check of the identity or the inequality");
  ve->add_option("--colors", o.colors, "number of primary colors")->required();
  ve->add_option("--max-q", o.max_q, "largest total size")->required()->check(CLI::NonNegativeNumber);
  auto* id_flag = ve->add_flag("--identity", o.identity, "U = W = coefficient (default)");
  auto* in_flag = ve->add_flag("--inequality", o.inequality, "U <= V with a strict witness");
  id_flag->excludes(in_flag);
  ve->add_option("--json", o.json_file, "also write the report here");

  auto* co = app.add_subcommand("corollary12", "mod-12 specialization lists");
  o.n = 49;
  co->add_option("--size", o.n, "size to specialize at")->capture_default_str()->check(CLI::NonNegativeNumber);

  if (args.empty()) {
    err << app.help();
    err << diagnostic("usage_error", "a subcommand is required");
    return exit_input;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << diagnostic("usage_error", e.what());
    return exit_input;
  }

  try {
    if (*en) return run_enumerate(o, out);
    if (*ph) return run_phi(o, out);
    if (*ps) return run_psi(o, out);
    if (*br) return run_bridge(o, out);
    if (*fo) return run_forest(o, out);
    if (*mi) return run_mine(o, out);
    if (*ve) return run_verify(o, out);
    if (*co) return run_corollary(o, out);
  } catch (const input_error& e) {
    err << diagnostic("input_error", e.what());
    return exit_input;
  } catch (const internal_error& e) {
    err << diagnostic("internal_error", e.what());
    return exit_internal;
  } catch (const std::exception& e) {
    err << diagnostic("internal_error", e.what());
    return exit_internal;
  }
  err << diagnostic("usage_error", "no subcommand selected");
  return exit_input;
}

}  // namespace colorpart
