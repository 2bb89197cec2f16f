#include "colorpart/machines.hpp"

#include <algorithm>

#include "colorpart/error.hpp"

namespace colorpart {

namespace {

using Parts = std::vector<ColoredPart>;

std::size_t guard_for(std::size_t t) { return t * t + t; }

// Index one past the last secondary part, 0 when there is none.
std::size_t end_of_secondaries(const Parts& w) {
  for (std::size_t x = w.size(); x-- > 0;)
    if (w[x].secondary()) return x + 1;
  return 0;
}

Parts slice(const Parts& w, std::size_t from, std::size_t to) {
  return Parts(w.begin() + std::ptrdiff_t(from), w.begin() + std::ptrdiff_t(to));
}

bool all_primary(const Parts& w) {
  return std::all_of(w.begin(), w.end(), [](const ColoredPart& p) { return p.primary(); });
}

bool is_suffix(const Parts& tail, const Parts& whole) {
  return tail.size() <= whole.size() && std::equal(tail.begin(), tail.end(), whole.end() - std::ptrdiff_t(tail.size()));
}

bool is_prefix(const Parts& head, const Parts& whole) {
  return head.size() <= whole.size() && std::equal(head.begin(), head.end(), whole.begin());
}

std::size_t count_secondary(const Parts& w) {
  return std::size_t(std::count_if(w.begin(), w.end(), [](const ColoredPart& p) { return p.secondary(); }));
}

}  // namespace

std::string event_name(EventKind k) {
  switch (k) {
    case EventKind::merge: return "merge";
    case EventKind::cross: return "cross";
    case EventKind::split: return "split";
  }
  return "?";
}

PhiResult phi(const Partition& lambda, bool record) {
  if (!in_O(lambda.parts)) throw input_error("phi needs a partition in O, got " + pretty_parts(lambda.parts));
  PhiResult res;
  MachineTrace& tr = res.trace;
  tr.kind = MachineKind::phi;
  tr.n = lambda.n;
  if (record) tr.input = lambda.parts;
  Parts w = lambda.parts;
  const std::size_t guard = guard_for(w.size());
  std::size_t events = 0;
  const auto tick = [&] {
    if (++events > guard) throw internal_error("phi exceeded its event budget on " + pretty_parts(lambda.parts));
  };

  for (;;) {
    // Step 1: the leftmost troublesome pair.
    std::size_t t = w.size();
    for (std::size_t x = 0; x + 1 < w.size(); ++x)
      if (w[x].primary() && w[x + 1].primary() && is_troublesome(w[x], w[x + 1])) {
        t = x;
        break;
      }
    if (record) {
      const std::size_t d = end_of_secondaries(w);
      const std::size_t g = t == w.size() ? w.size() : t + 1;
      if (g < d) throw internal_error("troublesome pair sits left of a secondary part");
      tr.snapshots.push_back(Triplet{slice(w, 0, d), slice(w, d, g), slice(w, g, w.size())});
    }
    if (t == w.size()) break;
    w[t] = merge(w[t], w[t + 1]);
    w.erase(w.begin() + std::ptrdiff_t(t + 1));
    tick();
    if (record) tr.events.push_back(MachineEvent{EventKind::merge, int(t + 1), 0, std::nullopt});

    // Step 2: push secondary parts left while the primary part before them is not >>-above.
    for (;;) {
      std::size_t c = w.size();
      for (std::size_t x = 0; x + 1 < w.size(); ++x)
        if (w[x].primary() && w[x + 1].secondary() && !ord_gg(w[x], w[x + 1])) {
          c = x;
          break;
        }
      if (c == w.size()) break;
      const ColoredPart a = w[c];
      const ColoredPart b = w[c + 1];
      w[c] = materialize(b + 1);
      w[c + 1] = materialize(a - 1);
      tick();
      if (record) tr.events.push_back(MachineEvent{EventKind::cross, int(c + 1), 0, a});
    }
  }
  if (!in_E(w)) throw internal_error("phi produced a sequence outside E: " + pretty_parts(w));
  res.output = Partition{lambda.n, std::move(w), Ground::E};
  return res;
}

PsiResult psi(const Partition& nu, bool record) {
  if (!in_E(nu.parts)) throw input_error("psi needs a partition in E, got " + pretty_parts(nu.parts));
  struct Slot {
    ColoredPart part;
    int tag;
  };
  std::vector<Slot> w;
  w.reserve(nu.parts.size() * 2);
  int next_tag = 1;
  for (const auto& p : nu.parts) {
    w.push_back(Slot{p, next_tag});
    next_tag += p.secondary() ? 2 : 1;
  }
  const int pieces = next_tag - 1;

  PsiResult res;
  MachineTrace& tr = res.trace;
  tr.kind = MachineKind::psi;
  tr.n = nu.n;
  if (record) tr.input = nu.parts;
  const std::size_t guard = guard_for(nu.parts.size());
  std::size_t events = 0;
  const auto tick = [&] {
    if (++events > guard) throw internal_error("psi exceeded its event budget on " + pretty_parts(nu.parts));
  };
  const auto parts_of = [&] {
    Parts out;
    out.reserve(w.size());
    for (const auto& s : w) out.push_back(s.part);
    return out;
  };
  if (record) {
    const Parts cur = parts_of();
    const std::size_t d = end_of_secondaries(cur);
    tr.snapshots.push_back(Triplet{slice(cur, 0, d), slice(cur, d, cur.size()), {}});
  }

  for (;;) {
    std::size_t i = w.size();
    for (std::size_t x = w.size(); x-- > 0;)
      if (w[x].part.secondary()) {
        i = x;
        break;
      }
    if (i == w.size()) break;
    const ColoredPart sec = w[i].part;
    if (i + 1 < w.size() && w[i + 1].part.primary() && !succ(beta(sec), w[i + 1].part)) {
      const Slot prim = w[i + 1];
      w[i + 1] = Slot{materialize(sec - 1), w[i].tag};
      w[i] = Slot{materialize(prim.part + 1), prim.tag};
      tick();
      if (record) tr.events.push_back(MachineEvent{EventKind::cross, int(i + 1), w[i + 1].tag, prim.part});
      continue;
    }
    const ColoredPart a = alpha(sec);
    const ColoredPart b = beta(sec);
    if (!succ(a, b) || a.size() < 1 || b.size() < 1) throw internal_error("split produced invalid halves");
    const int tag = w[i].tag;
    w[i] = Slot{a, tag};
    w.insert(w.begin() + std::ptrdiff_t(i + 1), Slot{b, tag + 1});
    tick();
    if (record) {
      tr.events.push_back(MachineEvent{EventKind::split, int(i + 1), tag, std::nullopt});
      const Parts cur = parts_of();
      const std::size_t d = end_of_secondaries(cur);
      tr.snapshots.push_back(Triplet{slice(cur, 0, d), slice(cur, d, i + 1), slice(cur, i + 1, cur.size())});
    }
  }

  tr.theta.assign(std::size_t(pieces), 0);
  for (std::size_t x = 0; x < w.size(); ++x) tr.theta[std::size_t(w[x].tag - 1)] = int(x + 1);
  res.output = parts_of();
  return res;
}

std::vector<Triplet> phi_triplets(const MachineTrace& trace) {
  if (trace.kind != MachineKind::phi) throw input_error("phi_triplets needs a phi trace");
  const auto& snaps = trace.snapshots;
  const auto fail = [](std::size_t u, const std::string& what) {
    throw internal_error("phi snapshot " + std::to_string(u + 1) + ": " + what);
  };
  if (snaps.empty()) throw internal_error("phi trace has no snapshots");
  for (std::size_t u = 0; u < snaps.size(); ++u) {
    const Triplet& t = snaps[u];
    if (!in_E(t.delta)) fail(u, "delta not in E");
    if (!in_O(t.gamma) || !in_E(t.gamma)) fail(u, "gamma not in E and O");
    if (!in_O(t.mu)) fail(u, "mu not in O");
    if (!t.delta.empty() && !t.gamma.empty() && !ord_gg(t.delta.back(), t.gamma.front()))
      fail(u, "last part of delta not >> first part of gamma");
    if (count_secondary(t.delta) != u) fail(u, "delta does not hold the secondary parts made so far");
    if (!t.delta.empty() && !t.delta.back().secondary()) fail(u, "delta does not end with a secondary part");
    if (u + 1 < snaps.size()) {
      const Triplet& next = snaps[u + 1];
      if (!(next.mu.size() < t.mu.size() && is_suffix(next.mu, t.mu))) fail(u, "next mu is not a strict tail");
      if (!is_prefix(t.delta, next.delta)) fail(u, "delta is not a head of the next delta");
    } else if (!t.mu.empty()) {
      fail(u, "last snapshot has a nonempty mu");
    }
  }
  return snaps;
}

std::vector<Triplet> psi_triplets(const MachineTrace& trace) {
  if (trace.kind != MachineKind::psi) throw input_error("psi_triplets needs a psi trace");
  const auto& snaps = trace.snapshots;
  const auto fail = [](std::size_t v, const std::string& what) {
    throw internal_error("psi snapshot " + std::to_string(v + 1) + ": " + what);
  };
  if (snaps.empty()) throw internal_error("psi trace has no snapshots");
  for (std::size_t v = 0; v < snaps.size(); ++v) {
    const Triplet& t = snaps[v];
    if (!in_E(t.delta)) fail(v, "delta not in E");
    if (!t.delta.empty() && !t.delta.back().secondary()) fail(v, "delta does not end with a secondary part");
    if (!all_primary(t.gamma) || !all_primary(t.mu)) fail(v, "gamma or mu holds a secondary part");
    if (v > 0) {
      if (t.gamma.empty() || t.mu.empty()) fail(v, "split halves missing");
      if (!is_troublesome(t.gamma.back(), t.mu.front())) fail(v, "split halves are not a troublesome pair");
    }
    if (v + 1 < snaps.size()) {
      const Triplet& next = snaps[v + 1];
      if (!(t.mu.size() < next.mu.size() && is_suffix(t.mu, next.mu))) fail(v, "mu is not a strict tail of the next mu");
      if (!is_prefix(next.delta, t.delta)) fail(v, "next delta is not a head of delta");
    } else if (!t.delta.empty()) {
      fail(v, "last snapshot still has secondary parts");
    }
  }
  return snaps;
}

void check_reversal(const MachineTrace& phi_trace, const MachineTrace& psi_trace) {
  const auto& a = phi_trace.snapshots;
  const auto& b = psi_trace.snapshots;
  if (a.size() != b.size())
    throw internal_error("snapshot counts differ: phi " + std::to_string(a.size()) + ", psi " + std::to_string(b.size()));
  for (std::size_t v = 0; v < b.size(); ++v)
    if (!(b[v] == a[a.size() - 1 - v]))
      throw internal_error("psi snapshot " + std::to_string(v + 1) + " differs from phi snapshot " +
                           std::to_string(a.size() - v));
}

}  // namespace colorpart
