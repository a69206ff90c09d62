#pragma once

#include <cstdint>
#include <vector>

#include "cabench/bitvec.hpp"
#include "cabench/ca.hpp"

namespace cabench {

// Classic Meier-Staffelbach recovery for a uniform toggle rule: guess the
// half-seed on the open side of the toggle, run the triangle forward, solve
// the other triangle with the substitution identity, keep seeds whose
// forward run reproduces sigma (attributed to the center cell).
std::vector<BitVec> ms_recover(Rule rule, const BitVec& sigma, std::size_t n);

struct CoinRecord {
    int t = 0;
    int cell = 0; // original frame (sigma observed at the center cell)
    int value = 0;
};

struct ImprovedRecovery {
    BitVec seed;
    std::vector<CoinRecord> coins;
};

// Backtracking recovery for rule 30 from a temporal sequence of length >= n:
// deterministic fills (left-adjacent values, fixed predecessor patterns,
// forward runs, the 1-over-1 zero forcing), coins on the bottom-most open
// left-adjacent cell when stuck, depth-first backtracking on contradiction.
// The returned seed's forward run always reproduces sigma. Throws
// std::domain_error when sigma is not producible.
ImprovedRecovery ms_recover_improved(Rule rule, const BitVec& sigma, std::size_t n);

} // namespace cabench
