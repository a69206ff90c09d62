#pragma once

#include <string>
#include <vector>

#include "cabench/bitvec.hpp"

namespace cabench {

// Frequency (monobit) test, |bits| >= 100.
double monobit(const BitVec& bits);

// Frequency within a block, default block size per the reference parameters.
double block_frequency(const BitVec& bits, int block_size = 128);

struct RunsResult {
    bool applicable = false; // pre-test proportion condition
    double p = 0.0;
};
RunsResult runs(const BitVec& bits);

// Berlekamp-Massey linear complexity over GF(2).
long linear_complexity_bm(const BitVec& bits);

struct GroupVerdict {
    int sample_count = 0;
    double pass_fraction = 0.0;
    double proportion_threshold = 0.0;
    bool proportion_failure = false;
    double uniformity_p = 0.0; // 10-bin chi-square on the p-values
    bool uniformity_failure = false;
};

// Group-level analysis of per-sequence p-values at significance alpha.
GroupVerdict group_analysis(const std::vector<double>& pvalues, double alpha = 0.01);

// The 18 structured seed patterns tiled to 9n bits.
std::vector<BitVec> structured_seeds(int n);

enum class BitFormat { Raw, Ascii };

void export_bits(const std::vector<std::uint8_t>& bytes, std::size_t nbits,
                 const std::string& path, BitFormat format);
BitVec import_bits(const std::string& path, BitFormat format);

} // namespace cabench
