#include "cabench/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace cabench {

BitVec BitVec::from_bits(const std::string& s) {
    BitVec out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            out.set(i, 1);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string must contain only '0'/'1'");
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit");
}

BitVec BitVec::from_hex(const std::string& hex, std::size_t n) {
    if (hex.size() * 4 < n)
        throw std::invalid_argument("hex string too short for requested bit count");
    BitVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int nib = hex_nibble(hex[i / 4]);
        out.set(i, (nib >> (3 - (i % 4))) & 1);
    }
    return out;
}

BitVec BitVec::from_msb_word(std::uint64_t v, std::size_t n) {
    BitVec out(n);
    for (std::size_t i = 0; i < n; ++i)
        out.set(i, static_cast<int>((v >> (n - 1 - i)) & 1u));
    return out;
}

std::string BitVec::to_bits() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitVec::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s((n_ + 3) / 4, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i)) {
            const std::size_t d = i / 4;
            int nib = hex_nibble(s[d]);
            nib |= 1 << (3 - (i % 4));
            s[d] = digits[nib];
        }
    }
    return s;
}

std::uint64_t BitVec::to_msb_word() const {
    if (n_ > 64)
        throw std::invalid_argument("to_msb_word requires size <= 64");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n_; ++i)
        v = (v << 1) | static_cast<std::uint64_t>(get(i));
    return v;
}

std::size_t BitVec::count_ones() const {
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void BitVec::append(int bit) {
    if ((n_ & 63) == 0)
        words_.push_back(0);
    ++n_;
    set(n_ - 1, bit);
}

BitVec BitVec::operator^(const BitVec& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("xor of bit vectors with different sizes");
    BitVec out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] ^ o.words_[i];
    return out;
}

bool BitVec::operator<(const BitVec& o) const {
    if (n_ != o.n_)
        return n_ < o.n_;
    for (std::size_t i = 0; i < n_; ++i) {
        const int a = get(i), b = o.get(i);
        if (a != b) return a < b;
    }
    return false;
}

std::vector<std::uint8_t> pack_bits(const BitVec& bits) {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.get(i))
            out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return out;
}

BitVec unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t nbits) {
    if (bytes.size() * 8 < nbits)
        throw std::invalid_argument("byte buffer too short");
    BitVec out(nbits);
    for (std::size_t i = 0; i < nbits; ++i)
        out.set(i, (bytes[i / 8] >> (7 - (i % 8))) & 1);
    return out;
}

} // namespace cabench
