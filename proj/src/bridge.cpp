#include "colorpart/bridge.hpp"

#include <algorithm>

#include "colorpart/error.hpp"
#include "colorpart/machines.hpp"

namespace colorpart {

ShiftedPart IndexedPartition::at(int x) const {
  if (x >= 1 && x <= count()) return ShiftedPart{halves[std::size_t(x - 1)], 0};
  if (x == count() + 1) return ShiftedPart{ColoredPart::unchecked(1, Color{n, n, 0}), -1};
  throw input_error("piece index " + std::to_string(x) + " out of range");
}

bool IndexedPartition::is_upper(int x) const { return std::binary_search(I.begin(), I.end(), x); }
bool IndexedPartition::is_primary_piece(int x) const { return std::binary_search(J.begin(), J.end(), x); }

const ColoredPart& IndexedPartition::secondary_at(int i) const {
  if (!is_upper(i)) throw input_error(std::to_string(i) + " is not an upper-half index");
  return parts[std::size_t(owner[std::size_t(i - 1)])];
}

const ColoredPart* IndexedPartition::left_of(int i) const {
  (void)secondary_at(i);
  const int pos = owner[std::size_t(i - 1)];
  return pos == 0 ? nullptr : &parts[std::size_t(pos - 1)];
}

const ColoredPart* IndexedPartition::right_of(int i) const {
  (void)secondary_at(i);
  const std::size_t pos = std::size_t(owner[std::size_t(i - 1)]);
  return pos + 1 < parts.size() ? &parts[pos + 1] : nullptr;
}

IndexedPartition index_split(const Partition& nu) {
  if (!in_E(nu.parts)) throw input_error("index_split needs a partition in E");
  IndexedPartition ip;
  ip.n = nu.n;
  ip.parts = nu.parts;
  for (std::size_t pos = 0; pos < nu.parts.size(); ++pos) {
    const ColoredPart& p = nu.parts[pos];
    const int x = int(ip.halves.size()) + 1;
    if (p.secondary()) {
      ip.halves.push_back(alpha(p));
      ip.halves.push_back(beta(p));
      ip.owner.push_back(int(pos));
      ip.owner.push_back(int(pos));
      ip.I.push_back(x);
    } else {
      ip.halves.push_back(p);
      ip.owner.push_back(int(pos));
      ip.J.push_back(x);
    }
  }
  return ip;
}

std::vector<int> troublesome_secondary(const IndexedPartition& ip) {
  std::vector<int> ts;
  for (int i : ip.I) {
    const ColoredPart& sec = ip.secondary_at(i);
    const ColoredPart* left = ip.left_of(i);
    const ColoredPart* right = ip.right_of(i);
    if ((left == nullptr || ord_tri(*left, sec)) && right != nullptr && !ord_tri(sec, *right)) ts.push_back(i);
  }
  return ts;
}

namespace {

int half_gap(int to, int from) {
  if ((to - from) % 2 != 0) throw internal_error("odd gap between bridge indices");
  return (to - from) / 2;
}

// The secondary part at i' passes piece `target` under Psi when its lower
// half is not >-above the target raised by the parts between them.
bool passes(const IndexedPartition& ip, int target, int ip_) {
  return !succ(ip.at(ip_ + 1), ip.at(target) + (half_gap(target, ip_) - 1));
}

// First index above i that is a primary piece, or N+1.
int run_end(const IndexedPartition& ip, int i) {
  const auto it = std::upper_bound(ip.J.begin(), ip.J.end(), i);
  return it == ip.J.end() ? ip.count() + 1 : *it;
}

}  // namespace

BridgeTable bridge_direct(const IndexedPartition& ip) {
  BridgeTable br;
  for (int i : ip.I) {
    const int j = run_end(ip, i);
    bool all = true;
    for (int x = i; x < j; x += 2) {
      if (!ip.is_upper(x)) throw internal_error("run of secondary parts is not contiguous");
      if (!passes(ip, j, x)) {
        all = false;
        break;
      }
    }
    if (all) {
      br[i] = j;
      continue;
    }
    int best = i;
    for (int u = i + 2; u < j; u += 2) {
      bool ok = true;
      for (int x = i; x < u && ok; x += 2) ok = passes(ip, u, x);
      if (ok) best = std::max(best, u);
    }
    br[i] = best;
  }
  return br;
}

BridgeTable bridge_scan(const IndexedPartition& ip) {
  BridgeTable br;
  std::size_t r = 0;
  while (r < ip.I.size()) {
    std::vector<int> run{ip.I[r]};
    while (r + 1 < ip.I.size() && ip.I[r + 1] == run.back() + 2) run.push_back(ip.I[++r]);
    ++r;
    const int len = int(run.size());
    const int j = run.back() + 2;
    int anchor_idx = 0;
    int anchor_pos = 0;
    if (j <= ip.count()) {
      anchor_idx = j;
      anchor_pos = len;
    } else {
      // A run closing the partition: its last secondary part splits at once.
      br[run.back()] = run.back();
      anchor_idx = run.back();
      anchor_pos = len - 1;
    }
    for (;;) {
      int found = -1;
      for (int u = anchor_pos - 1; u >= 0; --u)
        if (succ(ip.at(run[std::size_t(u)] + 1), ip.at(anchor_idx) + (anchor_pos - 1 - u))) {
          found = u;
          break;
        }
      for (int u = found + 1; u < anchor_pos; ++u) br[run[std::size_t(u)]] = anchor_idx;
      if (found < 0) break;
      br[run[std::size_t(found)]] = run[std::size_t(found)];
      anchor_idx = run[std::size_t(found)];
      anchor_pos = found;
    }
  }
  return br;
}

BridgeTable bridge_recursive(const IndexedPartition& ip) {
  BridgeTable scan = bridge_scan(ip);
  if (scan != bridge_direct(ip)) throw internal_error("recursive bridge disagrees with the direct definition");
  return scan;
}

std::vector<int> fixed_points(const BridgeTable& br) {
  std::vector<int> out;
  for (const auto& [i, b] : br)
    if (b == i) out.push_back(i);
  return out;
}

bool in_E1(const IndexedPartition& ip, const BridgeTable& br, E1Route route) {
  switch (route) {
    case E1Route::cond2:
      for (const auto& [i, b] : br) {
        if (b <= i) continue;
        const ShiftedPart target = ip.at(b) + half_gap(b, i);
        const ColoredPart* left = ip.left_of(i);
        if (left != nullptr && !ord_gg(*left, target)) return false;
        if (succ(target, ip.secondary_at(i))) return false;
      }
      return true;
    case E1Route::cond3:
      for (int i : troublesome_secondary(ip)) {
        const int b = br.at(i);
        if (b <= i) continue;
        if (!succ(ip.secondary_at(i), ip.at(b) + half_gap(b, i))) return false;
      }
      return true;
    case E1Route::roundtrip: {
      const Partition nu{ip.n, ip.parts, Ground::E};
      const PsiResult back = psi(nu, false);
      if (!in_O(back.output)) return false;
      return phi(Partition{ip.n, back.output, Ground::O}, false).output.parts == ip.parts;
    }
  }
  return false;
}

bool in_E1(const Partition& nu, E1Route route) {
  const IndexedPartition ip = index_split(nu);
  if (route == E1Route::roundtrip) return in_E1(ip, {}, route);
  return in_E1(ip, bridge_direct(ip), route);
}

E1Verdicts e1_verdicts(const Partition& nu) {
  const IndexedPartition ip = index_split(nu);
  const BridgeTable br = bridge_direct(ip);
  return E1Verdicts{in_E1(ip, br, E1Route::cond2), in_E1(ip, br, E1Route::cond3), in_E1(ip, br, E1Route::roundtrip)};
}

bool in_E1(const Partition& nu) {
  const E1Verdicts v = e1_verdicts(nu);
  if (v.cond2 != v.cond3 || v.cond3 != v.roundtrip)
    throw internal_error("membership routes disagree on " + pretty_parts(nu.parts) + ": cond2=" +
                         std::to_string(v.cond2) + " cond3=" + std::to_string(v.cond3) +
                         " roundtrip=" + std::to_string(v.roundtrip));
  return v.roundtrip;
}

std::string route_name(E1Route r) {
  switch (r) {
    case E1Route::cond2: return "cond2";
    case E1Route::cond3: return "cond3";
    case E1Route::roundtrip: return "roundtrip";
  }
  return "?";
}

}  // namespace colorpart
