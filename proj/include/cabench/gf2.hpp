#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cabench/bitvec.hpp"
#include "cabench/rule.hpp"

namespace cabench {

// Square bit matrix over GF(2), rows packed into words (column j at bit j).
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(std::size_t n) : n_(n), rows_(n, 0) {}
    static Gf2Matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    int get(std::size_t i, std::size_t j) const {
        return static_cast<int>((rows_[i] >> j) & 1u);
    }
    void set(std::size_t i, std::size_t j, int v) {
        const std::uint64_t m = std::uint64_t{1} << j;
        if (v)
            rows_[i] |= m;
        else
            rows_[i] &= ~m;
    }
    std::uint64_t row(std::size_t i) const { return rows_[i]; }

    bool is_zero() const;
    Gf2Matrix operator+(const Gf2Matrix& o) const; // XOR
    Gf2Matrix operator*(const Gf2Matrix& o) const;
    std::uint64_t apply(std::uint64_t v) const; // M * v, cell i at bit i
    bool operator==(const Gf2Matrix&) const = default;

    std::string to_grid() const; // rows of '0'/'1'

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct Gf2AffineMap {
    Gf2Matrix m;
    BitVec b;
};

// Transition map of an affine rule vector: step(F,S) = M*S xor b (cyclic).
Gf2AffineMap affine_map_of(const RuleVector& rules);

// (M^p, sum_{i=1..p} M^i)
std::pair<Gf2Matrix, Gf2Matrix> gf2_power_sum(const Gf2Matrix& m, long p);

// Exploratory: starting from the coefficient vector of c (bit i = x^i term),
// repeatedly shift the lowest-order 1 up to the lowest-order 0, looking for a
// run 1^p starting at x^1. Returns p, or 0 if the step limit is hit.
long ones_run_shift_search(std::uint64_t coeffs, int degree_bound, long step_limit);

} // namespace cabench
