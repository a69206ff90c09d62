#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cabench/bitvec.hpp"

namespace cabench {

// AES S-Box lookup table (the permutation only; no other AES machinery).
const std::array<std::uint8_t, 256>& aes_sbox();

// Fractional binary digits of the golden ratio (1+sqrt(5))/2, most
// significant fractional bit first. phi_bits(8) packs to 0x9e.
std::vector<int> phi_bits(std::size_t count);

// Cell-function PRG: every cell applies an 8-bit time-step function drawn
// from the S-Box at a per-cell rotating index, XORed with a per-cell offset.
// Output is the XOR of four automaton values n/4 steps apart; offsets are
// remixed every 256-step cycle.
class Chasm {
public:
    // seed must be exactly 9n bits for the n implied by its length;
    // n must be a multiple of 4, n >= 4.
    static Chasm initialize(const BitVec& seed);

    void time_step();
    BitVec next();
    std::vector<std::uint8_t> generate(std::size_t nbytes);

    std::size_t cells() const { return n_; }
    BitVec value() const;
    const std::vector<std::uint8_t>& offsets() const { return o_; }
    const std::vector<std::uint8_t>& indices() const { return i_; }
    std::uint32_t cycle_counter() const { return c_; }

    std::string dump() const;
    static Chasm restore(const std::string& text);

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> s_; // one byte per cell, value 0/1
    std::vector<std::uint8_t> o_;
    std::vector<std::uint8_t> i_;
    std::uint32_t c_ = 0;

    void next_into(std::vector<std::uint8_t>& v);
    std::vector<std::uint8_t> scratch_;
};

} // namespace cabench
