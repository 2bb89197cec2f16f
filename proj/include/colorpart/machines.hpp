#pragma once

#include <optional>
#include <span>
#include <vector>

#include "colorpart/partition.hpp"

namespace colorpart {

enum class EventKind { merge, cross, split };

struct MachineEvent {
  EventKind kind = EventKind::merge;
  // 1-based index of the left part of the pair acted on.
  int index = 0;
  // Psi only: tag of the secondary part and, for a cross, the primary part
  // it passes (value before the move).
  int tag = 0;
  std::optional<ColoredPart> crossed;

  friend bool operator==(const MachineEvent&, const MachineEvent&) = default;
};

struct Triplet {
  std::vector<ColoredPart> delta;
  std::vector<ColoredPart> gamma;
  std::vector<ColoredPart> mu;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

enum class MachineKind { phi, psi };

struct MachineTrace {
  MachineKind kind = MachineKind::phi;
  int n = 0;
  std::vector<ColoredPart> input;
  std::vector<MachineEvent> events;
  // Phi: taken at every entry into Step 1, the last one when Step 1 finds
  // nothing. Psi: the initial state, then after every split.
  std::vector<Triplet> snapshots;
  // Psi only: theta[x-1] is the final position of the piece tagged x, where
  // tags number primary parts and halves of the input left to right.
  std::vector<int> theta;
};

struct PhiResult {
  Partition output;
  MachineTrace trace;
};

struct PsiResult {
  std::vector<ColoredPart> output;
  MachineTrace trace;
};

// Merge troublesome primary pairs, pushing each new secondary part left past
// primary parts it is not >>-above. Input must be in O.
PhiResult phi(const Partition& lambda, bool record = true);

// Cross the rightmost secondary part past primary parts until its lower half
// is >-above the next part, then split it. Input must be in E.
PsiResult psi(const Partition& nu, bool record = true);

// Snapshot tables with their structural checks; violations raise internal_error.
std::vector<Triplet> phi_triplets(const MachineTrace& trace);
std::vector<Triplet> psi_triplets(const MachineTrace& trace);

// For nu = Phi(lambda): Psi's snapshot v equals Phi's snapshot S+2-v.
void check_reversal(const MachineTrace& phi_trace, const MachineTrace& psi_trace);

std::string event_name(EventKind k);

}  // namespace colorpart
