#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cabench/bitvec.hpp"
#include "cabench/ca.hpp"

namespace cabench {

struct PeriodReport {
    long tail = 0;   // steps before the orbit enters its cycle
    long period = 0; // cycle length (>= 1)
    BitVec entry;    // first state of the cycle
};

// Cycle detection on the orbit of `seed` under cyclic stepping.
PeriodReport eventual_period(const RuleVector& rules, const BitVec& seed);

// Maximum eventual period over all 2^n seeds (n <= 16).
long max_period(const RuleVector& rules);

struct CycleSummary {
    long max_cycle_len = 0;
    bool only_zero_cycle = false; // every orbit dead-ends into the zero state
};
CycleSummary analyze_cycles(const RuleVector& rules);

// Groups every seed by the length-L center temporal sequence it produces.
// Keys and seeds are MSB-first integer encodings (cell 0 = MSB).
struct SequenceSeedMap {
    std::size_t cells = 0;
    std::size_t length = 0;
    std::map<std::uint64_t, std::vector<std::uint64_t>> groups;
};
SequenceSeedMap sequence_seed_map(const RuleVector& rules, std::size_t L);

// All seeds whose center sequence of length L matches that of `seed`
// (the given seed included).
std::vector<BitVec> matching_seeds(const RuleVector& rules, const BitVec& seed,
                                   std::size_t L);

// For each 3-bit successor value: the four 5-bit windows mapping onto it
// under the rule triple, plus their XOR against the uniform-150 windows.
struct HybridDiffRow {
    std::vector<BitVec> predecessors; // sorted ascending
    std::vector<BitVec> diffs;        // elementwise vs uniform 150
};
std::vector<HybridDiffRow> hybrid_pred_diffs(Rule r1, Rule r2, Rule r3);

// Census over rule vectors with two leading 150 cells and {90,150} elsewhere.
// `period` uses the dead-end reporting convention: 0 when every orbit falls
// into the zero fixed point; `sequences` counts distinct center sequences of
// length n over the nonzero seeds.
struct CensusRow {
    std::string ruleset; // '1' = rule 150, '0' = rule 90, cell 0 first
    long period = 0;
    long sequences = 0;
};
std::vector<CensusRow> ruleset_census(int n);

} // namespace cabench
