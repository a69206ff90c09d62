#include "cabench/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace cabench {

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

bool Gf2Matrix::is_zero() const {
    for (auto r : rows_)
        if (r) return false;
    return true;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("matrix size mismatch");
    Gf2Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out.rows_[i] = rows_[i] ^ o.rows_[i];
    return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("matrix size mismatch");
    Gf2Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        std::uint64_t acc = 0;
        std::uint64_t row = rows_[i];
        while (row) {
            const int j = std::countr_zero(row);
            acc ^= o.rows_[static_cast<std::size_t>(j)];
            row &= row - 1;
        }
        out.rows_[i] = acc;
    }
    return out;
}

std::uint64_t Gf2Matrix::apply(std::uint64_t v) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n_; ++i)
        out |= static_cast<std::uint64_t>(std::popcount(rows_[i] & v) & 1) << i;
    return out;
}

std::string Gf2Matrix::to_grid() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j)
            s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

Gf2AffineMap affine_map_of(const RuleVector& rules) {
    const std::size_t n = rules.size();
    if (n > 64)
        throw std::invalid_argument("affine map limited to n <= 64");
    Gf2AffineMap map;
    map.m = Gf2Matrix(n);
    map.b = BitVec(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rule r = rules[i];
        if (!r.classify().affine)
            throw std::invalid_argument("rule vector contains a non-affine rule");
        const int a0 = r.apply(0, 0, 0);
        const int cl = r.apply(1, 0, 0) ^ a0;
        const int cw = r.apply(0, 1, 0) ^ a0;
        const int cr = r.apply(0, 0, 1) ^ a0;
        if (cl)
            map.m.set(i, (i + n - 1) % n, map.m.get(i, (i + n - 1) % n) ^ 1);
        if (cw)
            map.m.set(i, i, map.m.get(i, i) ^ 1);
        if (cr)
            map.m.set(i, (i + 1) % n, map.m.get(i, (i + 1) % n) ^ 1);
        map.b.set(i, a0);
    }
    return map;
}

std::pair<Gf2Matrix, Gf2Matrix> gf2_power_sum(const Gf2Matrix& m, long p) {
    if (p < 1)
        throw std::invalid_argument("power must be >= 1");
    Gf2Matrix power = m;
    Gf2Matrix sum = m;
    for (long i = 2; i <= p; ++i) {
        power = power * m;
        sum = sum + power;
    }
    return {power, sum};
}

long ones_run_shift_search(std::uint64_t coeffs, int degree_bound, long step_limit) {
    if (coeffs == 0 || degree_bound <= 1 || degree_bound > 63)
        return 0;
    std::uint64_t c = coeffs;
    if (c & 1)
        c <<= 1; // drop the x^0 term by starting from c << 1
    const std::uint64_t bound_mask = (std::uint64_t{1} << degree_bound) - 1;
    std::uint64_t running = c;
    for (long s = 0; s < step_limit; ++s) {
        if (running == 0 || (running & ~bound_mask) != 0)
            return 0;
        if ((running & 1) == 0) {
            const std::uint64_t r = running >> 1;
            if (r != 0 && (r & (r + 1)) == 0)
                return std::popcount(r);
        }
        const int low1 = std::countr_zero(running);
        if (low1 > 1)
            return 0; // a gap below x^1 can never be filled by up-shifts
        int z = low1;
        while (z < degree_bound && ((running >> z) & 1))
            ++z;
        if (z >= degree_bound)
            return 0;
        const int j = z - std::countr_zero(c);
        if (j < 0)
            return 0;
        running ^= c << j;
    }
    return 0;
}

} // namespace cabench
