#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "colorpart/cli.hpp"

namespace testing {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

inline Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = colorpart::dispatch(args, out, err);
  return Run{code, out.str(), err.str()};
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(FIXTURE_DIR) / name; }

struct GoldenCase {
  std::string golden;
  std::vector<std::string> args;
};

// cases.txt with file arguments resolved against the fixture directory.
inline std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;
  std::istringstream in(slurp(fixture("cases.txt")));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    GoldenCase c;
    words >> c.golden;
    for (std::string w; words >> w;) c.args.push_back(std::filesystem::exists(fixture(w)) ? fixture(w).string() : w);
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace testing
