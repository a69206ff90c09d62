#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cabench/bitvec.hpp"
#include "cabench/rule.hpp"

namespace cabench {

// Named time-step functions for transition sets. Each expands to an 8-bit
// truth table indexed by 4l+2w+r.
enum class TransitionKind : std::uint8_t {
    Lambda,    // copy left neighbor
    Rho,       // copy right neighbor
    Omega,     // keep own value
    NotOmega,  // complement own value
    Or,        // l | w | r
    Const0,
    Const1,
};

std::uint8_t transition_table(TransitionKind kind);

struct CellTransition {
    std::uint32_t next = 0;
    std::uint8_t out = 0;
};

// One finite state cell: a total transition map over (state, 3-bit input).
struct FiniteStateCell {
    std::vector<std::array<CellTransition, 8>> delta;
    std::uint32_t start = 0;
    int initial_output = 0;

    std::size_t state_count() const { return delta.size(); }
};

// Writes the 8 entries of T_f(from, to) given an 8-bit truth table.
void expand_transition_set(FiniteStateCell& cell, std::uint32_t from,
                           std::uint32_t to, std::uint8_t table);
void expand_transition_set(FiniteStateCell& cell, std::uint32_t from,
                           std::uint32_t to, TransitionKind kind);

bool is_simple(const FiniteStateCell& cell);

// Cyclic array of finite state cells.
struct Fsca {
    std::vector<FiniteStateCell> cells;
    std::size_t size() const { return cells.size(); }
};

bool is_simple(const Fsca& a);

struct Configuration {
    std::vector<std::uint32_t> q;
    BitVec s;

    bool operator==(const Configuration&) const = default;
};

// Start states with the supplied initial value.
Configuration initial_configuration(const Fsca& a, const BitVec& value);

Configuration step_fsca(const Fsca& a, const Configuration& c);
Configuration run_fsca(const Fsca& a, Configuration c, long k);

// Single-state cell whose self-transitions realize the elementary rule.
FiniteStateCell elementary_cell(Rule rule);
Fsca elementary_fsca(Rule rule, std::size_t n);
Fsca elementary_fsca(const RuleVector& rules);

// True iff running `a` from its start states with the candidate initial
// value reaches `target` after exactly k steps. The overload with explicit
// start states covers non-simple automata whose history is not deducible.
bool verify_certificate(const Fsca& a, const Configuration& target, long k,
                        const BitVec& initial_value);
bool verify_certificate(const Fsca& a, const Configuration& target, long k,
                        const BitVec& initial_value,
                        const std::vector<std::uint32_t>& start_states);

// Line-oriented text format, bit-exact round trip:
//   fsca <n>
//   cell <state count> <start> <initial output>
//   <state> <input> <next> <out>      (8 lines per state)
std::string serialize_fsca(const Fsca& a);
Fsca parse_fsca(const std::string& text);

} // namespace cabench
