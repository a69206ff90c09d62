#pragma once

#include <cstdint>
#include <vector>

#include "cabench/bitvec.hpp"
#include "cabench/rule.hpp"

namespace cabench {

enum class Boundary { Cyclic, Null };

BitVec step(const RuleVector& rules, const BitVec& state,
            Boundary boundary = Boundary::Cyclic);

// History of t+1 states, the given state first.
std::vector<BitVec> evolve(const RuleVector& rules, const BitVec& state,
                           Boundary boundary, int steps);

// Output of one cell over `len` consecutive time steps, starting at t=0.
BitVec temporal_sequence(const RuleVector& rules, const BitVec& seed,
                         std::size_t cell, std::size_t len,
                         Boundary boundary = Boundary::Cyclic);

// Bit-sliced cyclic step over word-packed states (cell i at bit i), n <= 64.
// One step is eight AND/OR word operations regardless of the rule mix.
class StepKernel {
public:
    StepKernel(const RuleVector& rules);

    std::size_t cells() const { return n_; }
    std::uint64_t step(std::uint64_t s) const {
        const std::uint64_t l = ((s << 1) | (s >> (n_ - 1))) & mask_;
        const std::uint64_t r = ((s >> 1) | ((s & 1) << (n_ - 1))) & mask_;
        std::uint64_t out = 0;
        for (int v = 0; v < 8; ++v) {
            const std::uint64_t sel = ((v & 4) ? l : ~l) & ((v & 2) ? s : ~s) &
                                      ((v & 1) ? r : ~r);
            out |= sel & rule_masks_[v];
        }
        return out & mask_;
    }

    // Packs BitVec cells into kernel layout (cell i at bit i) and back.
    std::uint64_t pack(const BitVec& state) const;
    BitVec unpack(std::uint64_t s) const;

private:
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t rule_masks_[8] = {};
};

} // namespace cabench
