#include "cabench/invert.hpp"

#include <algorithm>
#include <stdexcept>

namespace cabench {

std::vector<BitVec> invert_toggle_rule(const RuleVector& rules, const BitVec& state) {
    const std::size_t n = state.size();
    if (rules.size() != n)
        throw std::invalid_argument("rule vector and state length differ");
    if (!rules.is_uniform())
        throw std::invalid_argument("toggle inversion requires a uniform rule vector");
    const Rule rule = rules[0];
    if (rule.number() == 101)
        throw std::invalid_argument("rule 101 is not invertible by the toggle sweep");
    const RuleProperties props = rule.classify();
    if (!props.left_toggle && !props.right_toggle)
        throw std::invalid_argument("rule is not a toggle rule");

    // R is 1-based with two extra cells; R[i] corresponds to predecessor
    // cell i-1 (0-based), wrapped at both ends.
    std::vector<int> R(n + 3, 0);
    std::vector<BitVec> out;
    for (int eta = 0; eta < 4; ++eta) {
        if (props.left_toggle) {
            // f(l,w,r) = l ^ g(w,r) with g(w,r) = f(0,w,r)
            R[n + 1] = (eta >> 1) & 1;
            R[n + 2] = eta & 1;
            for (std::size_t i = n; i >= 1; --i)
                R[i] = state.get(i - 1) ^ rule.apply(0, R[i + 1], R[i + 2]);
            if (R[1] == R[n + 1] &&
                rule.apply(0, R[1], R[2]) == rule.apply(0, R[n + 1], R[n + 2])) {
                BitVec p(n);
                for (std::size_t i = 0; i < n; ++i)
                    p.set(i, R[i + 2]);
                out.push_back(std::move(p));
            }
        } else {
            // f(l,w,r) = g(l,w) ^ r with g(l,w) = f(l,w,0); mirrored sweep
            R[1] = (eta >> 1) & 1;
            R[2] = eta & 1;
            for (std::size_t i = 1; i <= n; ++i)
                R[i + 2] = state.get(i - 1) ^ rule.apply(R[i], R[i + 1], 0);
            if (R[n + 2] == R[2] &&
                rule.apply(R[n + 1], R[n + 2], 0) == rule.apply(R[1], R[2], 0)) {
                BitVec p(n);
                for (std::size_t i = 0; i < n; ++i)
                    p.set(i, R[i + 2]);
                out.push_back(std::move(p));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BitVec> brute_force_predecessors(const RuleVector& rules, const BitVec& state) {
    const std::size_t n = state.size();
    if (rules.size() != n)
        throw std::invalid_argument("rule vector and state length differ");
    if (n > 24)
        throw std::invalid_argument("exhaustive preimage search limited to n <= 24");
    StepKernel kernel(rules);
    const std::uint64_t target = kernel.pack(state);
    std::vector<BitVec> out;
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p)
        if (kernel.step(p) == target)
            out.push_back(kernel.unpack(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, long long> predecessor_histogram(Rule rule, int n) {
    if (n < 3 || n > 20)
        throw std::invalid_argument("predecessor histogram limited to 3 <= n <= 20");
    StepKernel kernel(RuleVector::uniform(rule, static_cast<std::size_t>(n)));
    std::vector<std::uint32_t> pred_count(std::size_t{1} << n, 0);
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p)
        ++pred_count[kernel.step(p)];
    std::map<int, long long> hist;
    for (auto c : pred_count)
        ++hist[static_cast<int>(c)];
    return hist;
}

PriorTable prior_table(Rule rule, int width) {
    if (width < 1 || width + 2 > 24)
        throw std::invalid_argument("prior table width out of range");
    PriorTable table;
    table.rule = rule;
    table.width = width;
    table.rows.resize(std::size_t{1} << width);
    const int wlen = width + 2;
    for (std::uint32_t pre = 0; pre < (1u << wlen); ++pre) {
        // pre read MSB-first: bit j of the window is (pre >> (wlen-1-j)) & 1
        std::uint32_t pattern = 0;
        for (int j = 0; j < width; ++j) {
            const int l = (pre >> (wlen - 1 - j)) & 1;
            const int w = (pre >> (wlen - 2 - j)) & 1;
            const int r = (pre >> (wlen - 3 - j)) & 1;
            pattern = (pattern << 1) | static_cast<std::uint32_t>(rule.apply(l, w, r));
        }
        table.rows[pattern].predecessors.push_back(
            BitVec::from_msb_word(pre, static_cast<std::size_t>(wlen)));
    }
    for (auto& row : table.rows) {
        std::sort(row.predecessors.begin(), row.predecessors.end());
        row.one_counts.assign(static_cast<std::size_t>(wlen), 0);
        row.fixed.assign(static_cast<std::size_t>(wlen), -1);
        for (const auto& p : row.predecessors)
            for (int j = 0; j < wlen; ++j)
                row.one_counts[static_cast<std::size_t>(j)] += p.get(static_cast<std::size_t>(j));
        const int total = static_cast<int>(row.predecessors.size());
        for (int j = 0; j < wlen; ++j) {
            if (row.one_counts[static_cast<std::size_t>(j)] == 0)
                row.fixed[static_cast<std::size_t>(j)] = 0;
            else if (row.one_counts[static_cast<std::size_t>(j)] == total && total > 0)
                row.fixed[static_cast<std::size_t>(j)] = 1;
        }
    }
    return table;
}

BitVec unique_predecessor_from_010(const BitVec& state) {
    const std::size_t n = state.size();
    const Rule rule30(30);
    std::size_t center = n; // center index of a cyclic 010 window
    for (std::size_t i = 0; i < n; ++i) {
        if (state.get((i + n - 1) % n) == 0 && state.get(i) == 1 &&
            state.get((i + 1) % n) == 0) {
            center = i;
            break;
        }
    }
    if (center == n)
        throw std::invalid_argument("state has no cyclic 010 window");

    // s_{i-2}^(t-1) = 1, s_{i-3}^(t-1) = ~s_{i-2}^(t), then unwind leftward
    // with the left-toggle identity s_{j-1} = s_j^(t) ^ (s_j + s_{j+1}).
    const std::size_t n2 = n;
    auto idx = [n2](std::ptrdiff_t i) {
        return static_cast<std::size_t>(((i % static_cast<std::ptrdiff_t>(n2)) +
                                         static_cast<std::ptrdiff_t>(n2)) %
                                        static_cast<std::ptrdiff_t>(n2));
    };
    BitVec pred(n);
    std::vector<bool> known(n, false);
    const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(center);
    pred.set(idx(c - 2), 1);
    known[idx(c - 2)] = true;
    pred.set(idx(c - 3), 1 ^ state.get(idx(c - 2)));
    known[idx(c - 3)] = true;
    for (std::ptrdiff_t j = c - 3; known[idx(j - 1)] == false; --j) {
        const int w = pred.get(idx(j));
        const int r = pred.get(idx(j + 1));
        pred.set(idx(j - 1), state.get(idx(j)) ^ (w | r));
        known[idx(j - 1)] = true;
    }
    if (!(step(RuleVector::uniform(rule30, n), pred) == state))
        throw std::domain_error("state has no rule-30 predecessor");
    return pred;
}

std::vector<std::pair<int, int>> left_adjacent_constraints(const BitVec& sigma) {
    if (sigma.size() < 2)
        throw std::invalid_argument("sequence too short");
    std::vector<std::pair<int, int>> out;
    for (std::size_t t = 0; t + 1 < sigma.size(); ++t)
        if (sigma.get(t) == 1)
            out.emplace_back(static_cast<int>(t), 1 ^ sigma.get(t + 1));
    return out;
}

} // namespace cabench
