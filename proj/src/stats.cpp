#include "cabench/stats.hpp"

#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace cabench {

double monobit(const BitVec& bits) {
    const std::size_t n = bits.size();
    if (n < 100)
        throw std::invalid_argument("monobit requires at least 100 bits");
    const double ones = static_cast<double>(bits.count_ones());
    const double s = std::fabs(2.0 * ones - static_cast<double>(n));
    return std::erfc(s / std::sqrt(2.0 * static_cast<double>(n)));
}

double block_frequency(const BitVec& bits, int block_size) {
    const std::size_t n = bits.size();
    if (block_size < 1)
        throw std::invalid_argument("block size must be >= 1");
    const std::size_t blocks = n / static_cast<std::size_t>(block_size);
    if (blocks < 1)
        throw std::invalid_argument("sequence shorter than one block");
    double chi2 = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
        long ones = 0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(block_size); ++i)
            ones += bits.get(b * static_cast<std::size_t>(block_size) + i);
        const double pi = static_cast<double>(ones) / block_size;
        chi2 += (pi - 0.5) * (pi - 0.5);
    }
    chi2 *= 4.0 * block_size;
    return gsl_sf_gamma_inc_Q(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
}

RunsResult runs(const BitVec& bits) {
    const std::size_t n = bits.size();
    if (n < 100)
        throw std::invalid_argument("runs requires at least 100 bits");
    const double pi = static_cast<double>(bits.count_ones()) / static_cast<double>(n);
    RunsResult out;
    if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(static_cast<double>(n))) {
        out.applicable = false;
        return out;
    }
    long v = 1;
    for (std::size_t i = 0; i + 1 < n; ++i)
        v += bits.get(i) != bits.get(i + 1);
    const double num = std::fabs(static_cast<double>(v) -
                                 2.0 * static_cast<double>(n) * pi * (1.0 - pi));
    const double den = 2.0 * std::sqrt(2.0 * static_cast<double>(n)) * pi * (1.0 - pi);
    out.applicable = true;
    out.p = std::erfc(num / den);
    return out;
}

long linear_complexity_bm(const BitVec& bits) {
    const std::size_t n = bits.size();
    if (n == 0)
        throw std::invalid_argument("empty sequence");
    // connection polynomials packed into words
    const std::size_t words = n / 64 + 1;
    std::vector<std::uint64_t> c(words, 0), b(words, 0), t;
    c[0] = 1;
    b[0] = 1;
    long L = 0;
    long m = -1;
    for (std::size_t i = 0; i < n; ++i) {
        // discrepancy d = s_i ^ sum_{j=1..L} c_j s_{i-j}
        int d = bits.get(i);
        for (long j = 1; j <= L; ++j)
            d ^= ((c[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u) &
                 bits.get(i - static_cast<std::size_t>(j));
        if (d == 0)
            continue;
        t = c;
        const std::size_t shift = i - static_cast<std::size_t>(m);
        // c ^= b << shift
        const std::size_t ws = shift >> 6, bs = shift & 63;
        for (std::size_t w = words; w-- > 0;) {
            std::uint64_t add = 0;
            if (w >= ws) {
                add = b[w - ws] << bs;
                if (bs && w > ws)
                    add |= b[w - ws - 1] >> (64 - bs);
            }
            c[w] ^= add;
        }
        if (2 * L <= static_cast<long>(i)) {
            L = static_cast<long>(i) + 1 - L;
            m = static_cast<long>(i);
            b = t;
        }
    }
    return L;
}

GroupVerdict group_analysis(const std::vector<double>& pvalues, double alpha) {
    if (pvalues.size() < 20)
        throw std::invalid_argument("group analysis requires at least 20 p-values");
    GroupVerdict out;
    out.sample_count = static_cast<int>(pvalues.size());
    const double m = static_cast<double>(pvalues.size());
    long passed = 0;
    std::vector<long> bins(10, 0);
    for (double p : pvalues) {
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("p-value out of [0,1]");
        if (p >= alpha)
            ++passed;
        int bin = static_cast<int>(p * 10.0);
        if (bin == 10) bin = 9;
        ++bins[static_cast<std::size_t>(bin)];
    }
    const double phat = 1.0 - alpha;
    out.pass_fraction = static_cast<double>(passed) / m;
    out.proportion_threshold = phat - 3.0 * std::sqrt(phat * (1.0 - phat) / m);
    out.proportion_failure = out.pass_fraction < out.proportion_threshold;
    double chi2 = 0.0;
    const double expected = m / 10.0;
    for (long b : bins)
        chi2 += (static_cast<double>(b) - expected) * (static_cast<double>(b) - expected) / expected;
    out.uniformity_p = gsl_sf_gamma_inc_Q(4.5, chi2 / 2.0);
    out.uniformity_failure = out.uniformity_p < 0.0001;
    return out;
}

std::vector<BitVec> structured_seeds(int n) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("cell count must be a multiple of 4, at least 4");
    auto tile = [n](const std::string& pattern) {
        BitVec out(static_cast<std::size_t>(9 * n));
        for (std::size_t i = 0; i < out.size(); ++i)
            out.set(i, pattern[i % pattern.size()] == '1');
        return out;
    };
    const std::string half0(static_cast<std::size_t>(n / 2), '0');
    const std::string half1(static_cast<std::size_t>(n / 2), '1');
    return {
        tile("0"),
        tile("01"),
        tile("010"),
        tile("101"),
        tile("1"),
        tile("111000"),
        tile("1100"),
        tile(half0 + half1),
        tile("1110"),
        tile("0001"),
        tile("1011"),
        tile("0100"),
        tile("00000001"),
        tile("11111110"),
        tile("10000000"),
        tile("01111111"),
        tile("11110000"),
        tile("00111100"),
    };
}

void export_bits(const std::vector<std::uint8_t>& bytes, std::size_t nbits,
                 const std::string& path, BitFormat format) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file: " + path);
    if (format == BitFormat::Raw) {
        os.write(reinterpret_cast<const char*>(bytes.data()),
                 static_cast<std::streamsize>((nbits + 7) / 8));
    } else {
        std::string line;
        line.reserve(nbits);
        for (std::size_t i = 0; i < nbits; ++i)
            line += ((bytes[i / 8] >> (7 - (i % 8))) & 1) ? '1' : '0';
        os << line << "\n";
    }
    if (!os)
        throw std::runtime_error("write failed: " + path);
}

BitVec import_bits(const std::string& path, BitFormat format) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open input file: " + path);
    if (format == BitFormat::Raw) {
        std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)),
                                        std::istreambuf_iterator<char>());
        return unpack_bits(bytes, bytes.size() * 8);
    }
    BitVec out;
    char ch;
    while (is.get(ch)) {
        if (ch == '0')
            out.append(0);
        else if (ch == '1')
            out.append(1);
        else if (ch != '\n' && ch != '\r' && ch != ' ' && ch != '\t')
            throw std::runtime_error("unexpected character in ascii bit file");
    }
    return out;
}

} // namespace cabench
