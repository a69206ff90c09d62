#include "cabench/ca.hpp"

#include <stdexcept>

namespace cabench {

BitVec step(const RuleVector& rules, const BitVec& state, Boundary boundary) {
    const std::size_t n = state.size();
    if (rules.size() != n)
        throw std::invalid_argument("rule vector and state length differ");
    BitVec next(n);
    for (std::size_t i = 0; i < n; ++i) {
        int l, r;
        if (boundary == Boundary::Cyclic) {
            l = state.get((i + n - 1) % n);
            r = state.get((i + 1) % n);
        } else {
            l = i == 0 ? 0 : state.get(i - 1);
            r = i + 1 == n ? 0 : state.get(i + 1);
        }
        next.set(i, rules[i].apply(l, state.get(i), r));
    }
    return next;
}

std::vector<BitVec> evolve(const RuleVector& rules, const BitVec& state,
                           Boundary boundary, int steps) {
    if (steps < 0)
        throw std::invalid_argument("step count must be >= 0");
    std::vector<BitVec> history;
    history.reserve(static_cast<std::size_t>(steps) + 1);
    history.push_back(state);
    for (int t = 0; t < steps; ++t)
        history.push_back(step(rules, history.back(), boundary));
    return history;
}

BitVec temporal_sequence(const RuleVector& rules, const BitVec& seed,
                         std::size_t cell, std::size_t len, Boundary boundary) {
    if (cell >= seed.size())
        throw std::invalid_argument("cell index out of range");
    if (len < 1)
        throw std::invalid_argument("sequence length must be >= 1");
    BitVec out(len);
    if (boundary == Boundary::Cyclic && seed.size() <= 64) {
        StepKernel kernel(rules);
        std::uint64_t s = kernel.pack(seed);
        for (std::size_t t = 0; t < len; ++t) {
            out.set(t, static_cast<int>((s >> cell) & 1u));
            s = kernel.step(s);
        }
        return out;
    }
    BitVec s = seed;
    for (std::size_t t = 0; t < len; ++t) {
        out.set(t, s.get(cell));
        s = step(rules, s, boundary);
    }
    return out;
}

StepKernel::StepKernel(const RuleVector& rules) {
    n_ = rules.size();
    if (n_ < 3 || n_ > 64)
        throw std::invalid_argument("step kernel supports 3..64 cells");
    mask_ = n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    for (std::size_t i = 0; i < n_; ++i)
        for (int v = 0; v < 8; ++v)
            if ((rules[i].number() >> v) & 1)
                rule_masks_[v] |= std::uint64_t{1} << i;
}

std::uint64_t StepKernel::pack(const BitVec& state) const {
    if (state.size() != n_)
        throw std::invalid_argument("state length does not match kernel");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (state.get(i)) s |= std::uint64_t{1} << i;
    return s;
}

BitVec StepKernel::unpack(std::uint64_t s) const {
    BitVec out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out.set(i, static_cast<int>((s >> i) & 1u));
    return out;
}

} // namespace cabench
