#include "cabench/chasm.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>

namespace cabench {

const std::array<std::uint8_t, 256>& aes_sbox() {
    static const std::array<std::uint8_t, 256> box = {
        0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b,
        0xfe, 0xd7, 0xab, 0x76, 0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0,
        0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0, 0xb7, 0xfd, 0x93, 0x26,
        0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
        0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2,
        0xeb, 0x27, 0xb2, 0x75, 0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0,
        0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84, 0x53, 0xd1, 0x00, 0xed,
        0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
        0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f,
        0x50, 0x3c, 0x9f, 0xa8, 0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5,
        0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2, 0xcd, 0x0c, 0x13, 0xec,
        0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
        0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14,
        0xde, 0x5e, 0x0b, 0xdb, 0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c,
        0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79, 0xe7, 0xc8, 0x37, 0x6d,
        0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
        0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f,
        0x4b, 0xbd, 0x8b, 0x8a, 0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e,
        0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e, 0xe1, 0xf8, 0x98, 0x11,
        0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
        0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f,
        0xb0, 0x54, 0xbb, 0x16};
    return box;
}

std::vector<int> phi_bits(std::size_t count) {
    // fractional part of (1+sqrt(5))/2 is (sqrt(5)-1)/2; expand with integer
    // square root at `count` bits plus guard bits
    const std::size_t prec = count + 64;
    mpz_class five(5);
    mpz_class scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), five.get_mpz_t(), 2 * prec);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class one(1);
    mpz_class unit;
    mpz_mul_2exp(unit.get_mpz_t(), one.get_mpz_t(), prec);
    mpz_class frac = (root - unit) / 2;
    std::vector<int> bits(count);
    for (std::size_t i = 1; i <= count; ++i)
        bits[i - 1] = mpz_tstbit(frac.get_mpz_t(), static_cast<mp_bitcnt_t>(prec - i));
    return bits;
}

Chasm Chasm::initialize(const BitVec& seed) {
    if (seed.size() % 9 != 0)
        throw std::invalid_argument("seed must be 9n bits");
    const std::size_t n = seed.size() / 9;
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("cell count must be a multiple of 4, at least 4");
    const std::vector<int> phi = phi_bits(9 * n);
    Chasm g;
    g.n_ = n;
    g.s_.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        g.s_[j] = static_cast<std::uint8_t>(seed.get(j) ^ phi[j]);
    g.o_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint8_t byte = 0;
        for (std::size_t b = 0; b < 8; ++b)
            byte = static_cast<std::uint8_t>(
                (byte << 1) | (seed.get(n + 8 * j + b) ^ phi[n + 8 * j + b]));
        g.o_[j] = byte;
    }
    g.i_ = g.o_;
    g.c_ = 0;
    g.scratch_.resize(n);
    return g;
}

void Chasm::time_step() {
    const std::size_t n = n_;
    const auto& box = aes_sbox();
    auto& nxt = scratch_;
    const std::uint8_t first = s_[0], last = s_[n - 1];
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint8_t left = j == 0 ? last : s_[j - 1];
        const std::uint8_t right = j + 1 == n ? first : s_[j + 1];
        const unsigned x = (static_cast<unsigned>(left) << 2) |
                           (static_cast<unsigned>(s_[j]) << 1) | right;
        const std::uint8_t f = static_cast<std::uint8_t>(box[i_[j]] ^ o_[j]);
        nxt[j] = static_cast<std::uint8_t>((f >> x) & 1u);
        ++i_[j]; // wraps mod 256 in the byte
    }
    s_.swap(nxt);
    ++c_;
}

void Chasm::next_into(std::vector<std::uint8_t>& v) {
    const std::size_t n = n_;
    v.assign(n, 0);
    for (int block = 0; block < 4; ++block) {
        for (std::size_t k = 0; k < n / 4; ++k)
            time_step();
        for (std::size_t j = 0; j < n; ++j)
            v[j] ^= s_[j];
    }
    if (c_ >= 256) {
        const std::vector<std::uint8_t> saved = s_;
        // eight more steps feed 8n bits into the offsets, then the value is
        // restored and the cycle restarts
        std::vector<std::uint8_t> u;
        u.reserve(8 * n);
        for (int t = 0; t < 8; ++t) {
            time_step();
            u.insert(u.end(), s_.begin(), s_.end());
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::uint8_t byte = 0;
            for (std::size_t b = 0; b < 8; ++b)
                byte = static_cast<std::uint8_t>((byte << 1) | u[8 * j + b]);
            o_[j] ^= byte;
        }
        s_ = saved;
        c_ = 0;
    }
}

BitVec Chasm::next() {
    std::vector<std::uint8_t> v;
    next_into(v);
    BitVec out(n_);
    for (std::size_t j = 0; j < n_; ++j)
        out.set(j, v[j]);
    return out;
}

std::vector<std::uint8_t> Chasm::generate(std::size_t nbytes) {
    if (nbytes < 1)
        throw std::invalid_argument("byte count must be >= 1");
    std::vector<std::uint8_t> out;
    out.reserve(nbytes);
    std::vector<std::uint8_t> v;
    std::uint8_t acc = 0;
    int fill = 0;
    while (out.size() < nbytes) {
        next_into(v);
        for (std::size_t j = 0; j < n_ && out.size() < nbytes; ++j) {
            acc = static_cast<std::uint8_t>((acc << 1) | v[j]);
            if (++fill == 8) {
                out.push_back(acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    return out;
}

BitVec Chasm::value() const {
    BitVec out(n_);
    for (std::size_t j = 0; j < n_; ++j)
        out.set(j, s_[j]);
    return out;
}

namespace {

std::string bytes_to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s += digits[b >> 4];
        s += digits[b & 0xf];
    }
    return s;
}

std::vector<std::uint8_t> hex_to_bytes(const std::string& hex) {
    if (hex.size() % 2 != 0)
        throw std::invalid_argument("hex byte string must have even length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("invalid hex digit");
    };
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>((nib(hex[2 * i]) << 4) | nib(hex[2 * i + 1]));
    return out;
}

} // namespace

std::string Chasm::dump() const {
    std::ostringstream os;
    os << "chasm " << n_ << "\n";
    os << "s " << value().to_hex() << "\n";
    os << "o " << bytes_to_hex(o_) << "\n";
    os << "i " << bytes_to_hex(i_) << "\n";
    os << "c " << std::hex << c_ << "\n";
    return os.str();
}

Chasm Chasm::restore(const std::string& text) {
    std::istringstream is(text);
    std::string tag, sval, oval, ival, cval;
    std::size_t n = 0;
    if (!(is >> tag >> n) || tag != "chasm")
        throw std::invalid_argument("missing chasm header");
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("bad cell count");
    auto expect = [&is](const char* want) {
        std::string t, v;
        if (!(is >> t >> v) || t != want)
            throw std::invalid_argument("malformed chasm dump");
        return v;
    };
    sval = expect("s");
    oval = expect("o");
    ival = expect("i");
    cval = expect("c");
    Chasm g;
    g.n_ = n;
    const BitVec s = BitVec::from_hex(sval, n);
    g.s_.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        g.s_[j] = static_cast<std::uint8_t>(s.get(j));
    g.o_ = hex_to_bytes(oval);
    g.i_ = hex_to_bytes(ival);
    if (g.o_.size() != n || g.i_.size() != n)
        throw std::invalid_argument("offset/index length mismatch");
    g.c_ = static_cast<std::uint32_t>(std::stoul(cval, nullptr, 16));
    g.scratch_.resize(n);
    return g;
}

} // namespace cabench
