#pragma once

#include <string>

#include "aucmpc/engine.hpp"

namespace aucmpc {

// Number of order-preserving interleavings of two individually sorted lists
// of sizes n1 >= n2 >= 1: sum_i C(n1+1, i+1) * C(n2-1, i). Saturates past
// 128 bits; the log10 estimate stays usable for the leakage report.
struct MergeCount {
    bool exact = true;
    u128 value = 0;
    double log10_value = 0.0;

    std::string str() const;
};
MergeCount possible_merge_count(u64 n1, u64 n2);

// What one private merge discloses: the parameterization and every selection
// bit the proxies reconstructed during the move steps.
struct MergeLeak {
    u64 n1 = 0, n2 = 0;
    u64 delta_param = 1;
    u64 shuffles = 0;
    std::vector<u8> revealed_bits;
    MergeCount candidates;
};

struct LeakageReport {
    std::vector<MergeLeak> merges;
    std::string to_json() const;
};

// One shuffling pass: for every aligned index pair the larger record (con and
// label move together) lands in list1, the smaller in list2, under fresh
// shares. Requires |list1| >= |list2| >= 1.
void shuffle_step(Party& p, std::vector<SecRecord>& list1, std::vector<SecRecord>& list2);

// Merges two individually descending-sorted share lists into one. delta must
// be odd; it is clamped to the largest odd value <= |list2| per cycle, and
// to 1 once |list2| reaches 1.
std::vector<SecRecord> merge_pair(Party& p, std::vector<SecRecord> list1,
                                  std::vector<SecRecord> list2, u64 delta,
                                  MergeLeak* leak = nullptr);

// Pairwise tree reduction of any number of sorted lists.
std::vector<SecRecord> merge_many(Party& p, std::vector<std::vector<SecRecord>> lists,
                                  u64 delta, LeakageReport* report = nullptr);

}  // namespace aucmpc
