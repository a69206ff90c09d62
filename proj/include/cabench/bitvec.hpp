#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cabench {

// Dynamic bit vector. Index 0 is the leftmost cell in string form and the
// most significant bit in integer form, matching the ASCII conventions used
// throughout the tool ("0"/"1" strings, MSB-first hex).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVec from_bits(const std::string& s);
    static BitVec from_hex(const std::string& hex, std::size_t n);
    // Interprets the low n bits of v as cells, cell 0 = most significant.
    static BitVec from_msb_word(std::uint64_t v, std::size_t n);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    int get(std::size_t i) const {
        return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1u);
    }
    void set(std::size_t i, int v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    std::string to_bits() const;
    std::string to_hex() const;
    // Cells packed into an integer, cell 0 = most significant of the n bits.
    std::uint64_t to_msb_word() const;

    std::size_t count_ones() const;
    void append(int bit);

    BitVec operator^(const BitVec& o) const;
    bool operator==(const BitVec&) const = default;
    bool operator<(const BitVec& o) const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Packs bits into bytes, bit 0 of the vector = MSB of byte 0. The final
// partial byte, if any, is zero-padded in its low bits.
std::vector<std::uint8_t> pack_bits(const BitVec& bits);
BitVec unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t nbits);

} // namespace cabench
