#pragma once

#include "aucmpc/protocols.hpp"

namespace aucmpc {

// One scored test sample in shared form. con is a fixed-point confidence at
// scale F, label a bit, tie the change-point mark set by detect_ties
// (1 = this confidence differs from its successor; the last record is 1).
struct SecRecord {
    Sec con, label, tie;
};

// Secure tie detection over a descending-sorted confidence list. Returns one
// mark share per record.
std::vector<Sec> detect_ties(Party& p, std::span<const Sec> cons);

// Attaches marks to records in place.
void mark_ties(Party& p, std::vector<SecRecord>& recs);

// Anchor probe used by tests to check the previous-change-point registers.
struct AnchorTrace {
    std::vector<std::pair<Sec, Sec>> after_record;  // (pTP, pFP) or (pPC, pX)
};

// AUROC assuming all confidences distinct. Result share reconstructs to
// floor(N * F / D), i.e. the AUC at scale F.
Sec auroc_no_ties(Party& p, std::span<const SecRecord> recs, u64 F);

// Exact AUROC under ties (trapezoids over change points). Requires marks.
Sec auroc_with_ties(Party& p, std::span<const SecRecord> recs, u64 F,
                    AnchorTrace* trace = nullptr);

// Exact AUPR under ties. Requires marks. The x-axis delta is the true
// positive delta by default; rank_axis replays the rank-delta accumulation
// exactly as listed for fidelity experiments.
Sec aupr(Party& p, std::span<const SecRecord> recs, u64 F, bool rank_axis = false);

}  // namespace aucmpc
