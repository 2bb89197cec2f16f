#include "colorpart/forest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "colorpart/error.hpp"
#include "colorpart/machines.hpp"

namespace colorpart {

int ThetaMap::at(int x) const {
  const int N = int(theta.size());
  if (x == 0) return 0;
  if (x == N + 1) return N + 1;
  if (x < 0 || x > N + 1) throw input_error("theta index out of range");
  return theta[std::size_t(x - 1)];
}

std::vector<int> ThetaMap::inverse() const {
  std::vector<int> inv(theta.size(), 0);
  for (std::size_t x = 0; x < theta.size(); ++x) {
    const int y = theta[x];
    if (y < 1 || y > int(theta.size()) || inv[std::size_t(y - 1)] != 0) throw internal_error("theta is not a permutation");
    inv[std::size_t(y - 1)] = int(x + 1);
  }
  return inv;
}

ThetaMap theta(const Partition& nu) {
  ThetaMap th{psi(nu, true).trace.theta};
  (void)th.inverse();
  return th;
}

void check_position_relations(const IndexedPartition& ip, const ThetaMap& th) {
  const auto fail = [](const std::string& what) { throw internal_error("position relation violated: " + what); };
  const auto t = [&](int x) { return th.at(x); };
  for (std::size_t a = 0; a < ip.I.size(); ++a) {
    const int i = ip.I[a];
    if (t(i + 1) < i + 1) fail("theta_{i+1} < i+1 at i=" + std::to_string(i));
    for (std::size_t b = a + 1; b < ip.I.size(); ++b) {
      const int k = ip.I[b];
      const bool nested_after = t(i) < t(i + 1) && t(i + 1) < t(k) && t(k) < t(k + 1);
      const bool nested_inside = t(k) < t(i) && t(i) < t(i + 1) && t(i + 1) < t(k + 1);
      if (!nested_after && !nested_inside)
        fail("halves of " + std::to_string(i) + " and " + std::to_string(k) + " interleave");
    }
    for (int j : ip.J)
      if (!(t(j) < t(i) || t(i + 1) < t(j)))
        fail("primary piece " + std::to_string(j) + " lands between the halves of " + std::to_string(i));
  }
  for (std::size_t a = 0; a < ip.J.size(); ++a) {
    const int j = ip.J[a];
    if (t(j) > j) fail("theta_j > j at j=" + std::to_string(j));
    if (a + 1 < ip.J.size() && t(j) >= t(ip.J[a + 1])) fail("primary pieces change order");
  }
}

MotzkinWord motzkin_word(const IndexedPartition& ip, const ThetaMap& th) {
  const std::vector<int> inv = th.inverse();
  MotzkinWord w;
  w.letters.reserve(inv.size());
  for (int x : inv) {
    if (ip.is_upper(x))
      w.letters += 'U';
    else if (ip.is_primary_piece(x))
      w.letters += 'H';
    else
      w.letters += 'D';
  }
  return w;
}

MotzkinWord motzkin_word(const Partition& nu) {
  const IndexedPartition ip = index_split(nu);
  const ThetaMap th = theta(nu);
  check_position_relations(ip, th);
  MotzkinWord w = motzkin_word(ip, th);
  if (!is_motzkin(w.letters)) throw internal_error("final positions do not trace a Motzkin path");
  return w;
}

bool is_motzkin(const std::string& letters) {
  int height = 0;
  for (char c : letters) {
    if (c == 'U')
      ++height;
    else if (c == 'D')
      --height;
    else if (c != 'H')
      return false;
    if (height < 0) return false;
  }
  return height == 0;
}

BridgeTable bridge_from_theta(const IndexedPartition& ip, const ThetaMap& th) {
  BridgeTable br;
  for (int i : ip.I) {
    int best = 0;
    for (int j : ip.J)
      if (j > i && th.at(j) < th.at(i)) {
        best = j;
        break;
      }
    if (best == 0)
      for (int k : ip.I)
        if (k >= i && th.at(k) <= th.at(i)) best = std::max(best, k);
    br[i] = best;
  }
  return br;
}

BridgeTable bridge_from_theta(const Partition& nu) {
  const IndexedPartition ip = index_split(nu);
  BridgeTable br = bridge_from_theta(ip, theta(nu));
  if (br != bridge_direct(ip)) throw internal_error("bridge from final positions disagrees with the direct definition");
  return br;
}

int WeightedForest::edge_count() const {
  std::function<int(const std::vector<ForestNode>&)> count = [&](const std::vector<ForestNode>& v) {
    int c = 0;
    for (const auto& node : v) c += 1 + count(node.children);
    return c;
  };
  int total = 0;
  for (const auto& t : trees) total += count(t.children);
  return total;
}

WeightedForest forest(const IndexedPartition& ip, const ThetaMap& th) {
  const std::vector<int> inv = th.inverse();
  WeightedForest f;
  f.n = ip.n;
  f.trees.emplace_back();
  std::vector<std::vector<ForestNode>*> stack{&f.trees.back().children};
  for (int x : inv) {
    if (ip.is_upper(x)) {
      stack.back()->push_back(ForestNode{x, ip.secondary_at(x), {}});
      stack.push_back(&stack.back()->back().children);
    } else if (ip.is_primary_piece(x)) {
      if (stack.size() != 1) throw internal_error("primary piece inside a Dyck segment");
      f.trees.back().root_annotation = ip.halves[std::size_t(x - 1)];
      f.trees.back().root_index = x;
      f.trees.emplace_back();
      stack.assign(1, &f.trees.back().children);
    } else {
      if (stack.size() < 2) throw internal_error("lower half closes an edge that was never opened");
      stack.pop_back();
    }
  }
  if (stack.size() != 1) throw internal_error("unbalanced Dyck segment");
  return f;
}

WeightedForest forest(const Partition& nu) { return forest(index_split(nu), theta(nu)); }

std::string forest_word(const WeightedForest& f) {
  std::string out;
  std::function<void(const std::vector<ForestNode>&)> walk = [&](const std::vector<ForestNode>& v) {
    for (const auto& node : v) {
      out += 'U';
      walk(node.children);
      out += 'D';
    }
  };
  for (std::size_t y = 0; y < f.trees.size(); ++y) {
    walk(f.trees[y].children);
    if (y + 1 < f.trees.size()) out += 'H';
  }
  return out;
}

std::vector<int> root_edges(const WeightedForest& f) {
  std::vector<int> out;
  for (const auto& t : f.trees)
    for (const auto& node : t.children) out.push_back(node.index);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
std::string quoted(const std::string& s) { return "\"" + s + "\""; }
}  // namespace

std::string dot_export(const WeightedForest& f) {
  std::ostringstream os;
  os << "digraph forest {\n";
  if (!f.trees.empty()) os << "  node [shape=circle];\n";
  std::function<void(const std::string&, const std::vector<ForestNode>&)> walk =
      [&](const std::string& parent, const std::vector<ForestNode>& v) {
        for (const auto& node : v) {
          const std::string id = "v" + std::to_string(node.index);
          os << "  " << id << " [label=" << quoted(std::to_string(node.index)) << "];\n";
          os << "  " << parent << " -> " << id << " [label=" << quoted(pretty_part(node.weight)) << "];\n";
          walk(id, node.children);
        }
      };
  for (std::size_t y = 0; y < f.trees.size(); ++y) {
    const ForestTree& t = f.trees[y];
    const std::string root = "r" + std::to_string(y);
    const std::string label = t.root_annotation ? pretty_part(*t.root_annotation) : "";
    os << "  " << root << " [shape=box, label=" << quoted(label) << "];\n";
    if (t.planted()) {
      os << "  p" << y << " [shape=point];\n";
      os << "  p" << y << " -> " << root << " [style=dashed];\n";
    }
    walk(root, t.children);
  }
  os << "}\n";
  return os.str();
}

}  // namespace colorpart
