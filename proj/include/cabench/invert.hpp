#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cabench/bitvec.hpp"
#include "cabench/ca.hpp"

namespace cabench {

// All predecessors of `state` under a uniform toggle rule with cyclic
// boundaries, in linear time (four boundary guesses, one sweep each).
// Empty result means a garden-of-Eden state. Rejects non-toggle rules and
// rule 101.
std::vector<BitVec> invert_toggle_rule(const RuleVector& rules, const BitVec& state);

// Exhaustive preimage search over all 2^n states (test oracle, n <= 24).
std::vector<BitVec> brute_force_predecessors(const RuleVector& rules, const BitVec& state);

// predecessor count -> number of states with that count, over all 2^n states.
std::map<int, long long> predecessor_histogram(Rule rule, int n);

struct PriorRow {
    std::vector<BitVec> predecessors; // sorted, width w+2
    std::vector<int> one_counts;      // per position, length w+2
    std::vector<int> fixed;           // -1 if varies, else the fixed bit
};

// For every w-bit pattern, the (w+2)-bit windows mapping onto it under
// sliding application of the rule. rows[p] for pattern p read MSB-first.
struct PriorTable {
    Rule rule;
    int width = 0;
    std::vector<PriorRow> rows;
};

PriorTable prior_table(Rule rule, int width);

// Rule 30: a cyclic 010 window pins the predecessor uniquely.
BitVec unique_predecessor_from_010(const BitVec& state);

// Rule 30: every 1 at sigma[t] (with sigma[t+1] known) reveals the
// left-adjacent cell at t. Returns (t, bit) pairs.
std::vector<std::pair<int, int>> left_adjacent_constraints(const BitVec& sigma);

} // namespace cabench
