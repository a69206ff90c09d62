#include "cabench/orbit.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cabench {

namespace {

PeriodReport brent_cycle(const std::function<std::uint64_t(std::uint64_t)>& f,
                         std::uint64_t x0, const StepKernel& kernel) {
    // Brent's algorithm: cycle length first, then the tail.
    long power = 1, lam = 1;
    std::uint64_t tortoise = x0;
    std::uint64_t hare = f(x0);
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = f(hare);
        ++lam;
    }
    std::uint64_t a = x0, b = x0;
    for (long i = 0; i < lam; ++i)
        b = f(b);
    long mu = 0;
    while (a != b) {
        a = f(a);
        b = f(b);
        ++mu;
    }
    PeriodReport rep;
    rep.tail = mu;
    rep.period = lam;
    rep.entry = kernel.unpack(a);
    return rep;
}

} // namespace

PeriodReport eventual_period(const RuleVector& rules, const BitVec& seed) {
    if (seed.size() > 64)
        throw std::invalid_argument("cycle detection limited to n <= 64");
    StepKernel kernel(rules);
    auto f = [&kernel](std::uint64_t s) { return kernel.step(s); };
    return brent_cycle(f, kernel.pack(seed), kernel);
}

CycleSummary analyze_cycles(const RuleVector& rules) {
    const std::size_t n = rules.size();
    if (n > 20)
        throw std::invalid_argument("cycle census limited to n <= 20");
    StepKernel kernel(rules);
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::uint32_t> succ(count);
    for (std::uint64_t s = 0; s < count; ++s)
        succ[s] = static_cast<std::uint32_t>(kernel.step(s));

    // color: 0 unvisited, 1 on current path, 2 finished
    std::vector<std::uint8_t> color(count, 0);
    std::vector<std::uint32_t> order(count, 0);
    std::vector<std::uint32_t> path;
    CycleSummary out;
    out.only_zero_cycle = true;
    for (std::uint32_t start = 0; start < count; ++start) {
        if (color[start])
            continue;
        path.clear();
        std::uint32_t v = start;
        while (color[v] == 0) {
            color[v] = 1;
            order[v] = static_cast<std::uint32_t>(path.size());
            path.push_back(v);
            v = succ[v];
        }
        if (color[v] == 1) {
            const long len = static_cast<long>(path.size()) - order[v];
            out.max_cycle_len = std::max(out.max_cycle_len, len);
            for (std::size_t i = order[v]; i < path.size(); ++i)
                if (path[i] != 0)
                    out.only_zero_cycle = false;
        }
        for (auto u : path)
            color[u] = 2;
    }
    return out;
}

long max_period(const RuleVector& rules) {
    if (rules.size() > 16)
        throw std::invalid_argument("max period search limited to n <= 16");
    return analyze_cycles(rules).max_cycle_len;
}

SequenceSeedMap sequence_seed_map(const RuleVector& rules, std::size_t L) {
    const std::size_t n = rules.size();
    if (n > 16)
        throw std::invalid_argument("sequence map limited to n <= 16");
    if (L < 1 || L > 64)
        throw std::invalid_argument("sequence length out of range");
    StepKernel kernel(rules);
    const std::size_t center = n / 2;
    SequenceSeedMap map;
    map.cells = n;
    map.length = L;
    for (std::uint64_t seed = 0; seed < (std::uint64_t{1} << n); ++seed) {
        std::uint64_t s = seed;
        std::uint64_t key = 0;
        for (std::size_t t = 0; t < L; ++t) {
            key = (key << 1) | ((s >> center) & 1u);
            s = kernel.step(s);
        }
        map.groups[key].push_back(kernel.unpack(seed).to_msb_word());
    }
    return map;
}

std::vector<BitVec> matching_seeds(const RuleVector& rules, const BitVec& seed,
                                   std::size_t L) {
    const std::size_t n = rules.size();
    if (n > 16)
        throw std::invalid_argument("matching seed search limited to n <= 16");
    const std::size_t center = n / 2;
    const BitVec target = temporal_sequence(rules, seed, center, L);
    StepKernel kernel(rules);
    std::vector<BitVec> out;
    for (std::uint64_t cand = 0; cand < (std::uint64_t{1} << n); ++cand) {
        std::uint64_t s = cand;
        bool match = true;
        for (std::size_t t = 0; t < L && match; ++t) {
            match = static_cast<int>((s >> center) & 1u) == target.get(t);
            s = kernel.step(s);
        }
        if (match)
            out.push_back(kernel.unpack(cand));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HybridDiffRow> hybrid_pred_diffs(Rule r1, Rule r2, Rule r3) {
    for (Rule r : {r1, r2, r3})
        if (!r.classify().affine)
            throw std::invalid_argument("hybrid diff rules must be affine");
    auto window_rows = [](Rule a, Rule b, Rule c) {
        std::vector<std::vector<BitVec>> rows(8);
        for (std::uint32_t w = 0; w < 32; ++w) {
            const int b0 = (w >> 4) & 1, b1 = (w >> 3) & 1, b2 = (w >> 2) & 1,
                      b3 = (w >> 1) & 1, b4 = w & 1;
            const int succ = (a.apply(b0, b1, b2) << 2) | (b.apply(b1, b2, b3) << 1) |
                             c.apply(b2, b3, b4);
            rows[static_cast<std::size_t>(succ)].push_back(BitVec::from_msb_word(w, 5));
        }
        for (auto& r : rows)
            std::sort(r.begin(), r.end());
        return rows;
    };
    const Rule r150(150);
    const auto base = window_rows(r150, r150, r150);
    const auto got = window_rows(r1, r2, r3);
    std::vector<HybridDiffRow> out(8);
    for (std::size_t s = 0; s < 8; ++s) {
        out[s].predecessors = got[s];
        if (got[s].size() != base[s].size())
            throw std::domain_error("affine triple does not have 4 windows per successor");
        for (std::size_t i = 0; i < got[s].size(); ++i)
            out[s].diffs.push_back(got[s][i] ^ base[s][i]);
    }
    return out;
}

std::vector<CensusRow> ruleset_census(int n) {
    if (n < 3 || n > 12)
        throw std::invalid_argument("census limited to 3 <= n <= 12");
    const Rule r90(90), r150(150);
    const int free_cells = n - 2;
    std::vector<CensusRow> rows;
    for (std::uint32_t mask = 0; mask < (1u << free_cells); ++mask) {
        std::vector<Rule> rules(static_cast<std::size_t>(n), r90);
        std::string label(static_cast<std::size_t>(n), '0');
        rules[0] = rules[1] = r150;
        label[0] = label[1] = '1';
        for (int i = 0; i < free_cells; ++i)
            if ((mask >> (free_cells - 1 - i)) & 1) {
                rules[static_cast<std::size_t>(2 + i)] = r150;
                label[static_cast<std::size_t>(2 + i)] = '1';
            }
        const RuleVector rv{rules};
        const CycleSummary cyc = analyze_cycles(rv);
        CensusRow row;
        row.ruleset = label;
        row.period = (cyc.max_cycle_len == 1 && cyc.only_zero_cycle) ? 0 : cyc.max_cycle_len;

        StepKernel kernel(rv);
        const std::size_t center = static_cast<std::size_t>(n) / 2;
        std::vector<std::uint64_t> keys;
        keys.reserve((std::size_t{1} << n) - 1);
        for (std::uint64_t seed = 1; seed < (std::uint64_t{1} << n); ++seed) {
            std::uint64_t s = seed;
            std::uint64_t key = 0;
            for (int t = 0; t < n; ++t) {
                key = (key << 1) | ((s >> center) & 1u);
                s = kernel.step(s);
            }
            keys.push_back(key);
        }
        std::sort(keys.begin(), keys.end());
        row.sequences = static_cast<long>(
            std::unique(keys.begin(), keys.end()) - keys.begin());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.period != b.period) return a.period > b.period;
        if (a.sequences != b.sequences) return a.sequences > b.sequences;
        return a.ruleset < b.ruleset;
    });
    return rows;
}

} // namespace cabench
