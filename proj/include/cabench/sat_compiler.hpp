#pragma once

#include <vector>

#include "cabench/bitvec.hpp"
#include "cabench/cnf.hpp"
#include "cabench/fsca.hpp"

namespace cabench {

// Output of the 3-CNF to simple-FSCA construction. The automaton evaluates
// the clauses of the formula in `steps` synchronous steps: value (010)^c at
// that point iff the encoded assignment satisfies the formula.
struct Compilation {
    Fsca automaton;
    long steps = 0; // k
    int clause_count = 0;
    int variable_count = 0;
    std::vector<int> slot_positions;        // cell holding alpha_j at t=0 (0-based)
    BitVec target;                          // (010)^c
    std::vector<std::vector<int>> v_trace;  // cell -> variable index (0 = filler), per pass
    std::vector<int> destinations;          // literal index per cell before sorting
};

Compilation compile(const Cnf3& cnf);

// Assignment values centered in their spans, fillers 0.
BitVec initial_value(const Cnf3& cnf, const std::vector<int>& assignment);

struct EvalResult {
    bool satisfied = false;
    BitVec final_value;
};

// Runs the automaton for k steps from the encoded assignment; satisfied iff
// the final value is the target pattern.
EvalResult evaluate(const Compilation& comp, const std::vector<int>& assignment);

// Padding with constant-0 dummy cells: n = 9*c*sigma/2 + 2*sigma total cells,
// target (010)^c 0^(n-3c), step count unchanged. Requires 9*c*sigma even.
struct PaddedCompilation {
    Fsca automaton;
    long steps = 0;
    BitVec target;
    int original_cells = 0;
};

PaddedCompilation pad(const Cnf3& cnf, int sigma);

// Desk-scale search over all 2^v encoded assignments; returns the initial
// values accepted by the certificate check (v <= 20).
std::vector<BitVec> invert_small(const Compilation& comp, const Cnf3& cnf);

} // namespace cabench
