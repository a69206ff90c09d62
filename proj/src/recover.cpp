#include "cabench/recover.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cabench/invert.hpp"

namespace cabench {

namespace {

constexpr std::int8_t UNK = -1;

struct Grid {
    int n = 0;
    int T = 0;
    std::vector<std::int8_t> g;
    bool bad = false;

    Grid(int n_, int T_) : n(n_), T(T_), g(static_cast<std::size_t>(n_) * T_, UNK) {}
    std::int8_t at(int t, int j) const {
        j %= n;
        if (j < 0) j += n;
        return g[static_cast<std::size_t>(t) * n + j];
    }
    bool put(int t, int j, int v) {
        j %= n;
        if (j < 0) j += n;
        auto& cell = g[static_cast<std::size_t>(t) * n + j];
        if (cell != UNK) {
            if (cell != v) bad = true;
            return false;
        }
        cell = static_cast<std::int8_t>(v);
        return true;
    }
};

// Deterministic fills for rule 30, run to a fixpoint.
void deduce30(Grid& gr) {
    const int n = gr.n, T = gr.T;
    bool changed = true;
    while (changed && !gr.bad) {
        changed = false;
        for (int t = 0; t < T && !gr.bad; ++t) {
            for (int j = 0; j < n; ++j) {
                const int w = gr.at(t, j);
                if (t + 1 < T) {
                    const int up = gr.at(t + 1, j);
                    const int r = gr.at(t, j + 1);
                    if (up != UNK) {
                        // left neighbor = up ^ (w | r); any 1 settles the OR
                        if (w == 1 || r == 1)
                            changed |= gr.put(t, j - 1, up ^ 1);
                        else if (w == 0 && r == 0)
                            changed |= gr.put(t, j - 1, up);
                        // a known 1 above a known-left 1 forces two zeros
                        if (up == 1 && gr.at(t, j - 1) == 1) {
                            changed |= gr.put(t, j, 0);
                            changed |= gr.put(t, j + 1, 0);
                        }
                    }
                    const int l = gr.at(t, j - 1);
                    if (l != UNK) {
                        if (w == 1 || r == 1)
                            changed |= gr.put(t + 1, j, l ^ 1);
                        else if (w == 0 && r == 0)
                            changed |= gr.put(t + 1, j, l);
                    }
                }
                if (t >= 1) {
                    // fixed predecessor positions: x10 at (j-1,j,j+1) pins
                    // cell j-2 one row up to ~x
                    const int l = gr.at(t, j - 1);
                    if (l != UNK && gr.at(t, j) == 1 && gr.at(t, j + 1) == 0)
                        changed |= gr.put(t - 1, j - 2, l ^ 1);
                }
            }
        }
    }
}

void probe30(Grid& gr) {
    const int n = gr.n, T = gr.T;
    bool again = true;
    while (again && !gr.bad) {
        again = false;
        for (int t = 0; t < T && !gr.bad; ++t) {
            for (int j = 0; j < n; ++j) {
                if (gr.at(t, j) != UNK)
                    continue;
                const bool touched = gr.at(t, j - 1) != UNK || gr.at(t, j + 1) != UNK ||
                                     (t + 1 < T && gr.at(t + 1, j) != UNK) ||
                                     (t > 0 && gr.at(t - 1, j) != UNK);
                if (!touched)
                    continue;
                Grid g0 = gr;
                g0.put(t, j, 0);
                deduce30(g0);
                Grid g1 = gr;
                g1.put(t, j, 1);
                deduce30(g1);
                if (g0.bad && g1.bad) {
                    gr.bad = true;
                    return;
                }
                if (g0.bad || g1.bad) {
                    gr.put(t, j, g0.bad ? 1 : 0);
                    deduce30(gr);
                    again = true;
                }
            }
        }
    }
}

void solve_round(Grid& gr) {
    deduce30(gr);
    if (!gr.bad)
        probe30(gr);
}

// Second-level probing: refute candidate cell values with a full solve
// round. Returns once stable; used only at search frontiers, where it keeps
// random choices down to genuinely free bits.
void deep_probe30(Grid& gr) {
    bool again = true;
    while (again && !gr.bad) {
        again = false;
        for (int t = 0; t < gr.T && !gr.bad; ++t) {
            for (int j = 0; j < gr.n; ++j) {
                if (gr.at(t, j) != UNK)
                    continue;
                const bool touched = gr.at(t, j - 1) != UNK || gr.at(t, j + 1) != UNK ||
                                     (t + 1 < gr.T && gr.at(t + 1, j) != UNK) ||
                                     (t > 0 && gr.at(t - 1, j) != UNK);
                if (!touched)
                    continue;
                Grid g0 = gr;
                g0.put(t, j, 0);
                solve_round(g0);
                Grid g1 = gr;
                g1.put(t, j, 1);
                solve_round(g1);
                if (g0.bad && g1.bad) {
                    gr.bad = true;
                    return;
                }
                if (g0.bad || g1.bad) {
                    gr.put(t, j, g0.bad ? 1 : 0);
                    solve_round(gr);
                    again = true;
                }
            }
        }
    }
}

BitVec row_state(const Grid& gr, int t) {
    BitVec s(static_cast<std::size_t>(gr.n));
    for (int j = 0; j < gr.n; ++j)
        s.set(static_cast<std::size_t>(j), gr.at(t, j));
    return s;
}

// If some row is fully known, try to turn it into a seed: verify the forward
// run against sigma, then invert row by row back to t=0 over all predecessor
// chains consistent with the grid. Returns the seed (rotated frame) if any.
std::optional<BitVec> complete_from_grid(const Grid& gr, const BitVec& sigma,
                                         const RuleVector& rules, bool& contradiction) {
    const int n = gr.n, T = gr.T;
    contradiction = false;
    int t_full = -1;
    for (int t = 0; t < T && t_full < 0; ++t) {
        bool full = true;
        for (int j = 0; j < n; ++j)
            if (gr.at(t, j) == UNK) full = false;
        if (full) t_full = t;
    }
    if (t_full < 0)
        return std::nullopt;

    BitVec s = row_state(gr, t_full);
    BitVec cur = s;
    for (int t = t_full; t < T; ++t) {
        if (sigma.get(static_cast<std::size_t>(t)) != cur.get(static_cast<std::size_t>(n - 1))) {
            contradiction = true;
            return std::nullopt;
        }
        cur = step(rules, cur);
    }
    // depth-first over predecessor chains
    std::vector<std::pair<BitVec, int>> stack{{s, t_full}};
    while (!stack.empty()) {
        auto [row, t] = stack.back();
        stack.pop_back();
        if (t == 0) {
            if (temporal_sequence(rules, row, static_cast<std::size_t>(n - 1), sigma.size()) == sigma)
                return row;
            continue;
        }
        for (const auto& p : invert_toggle_rule(rules, row)) {
            bool consistent = true;
            for (int j = 0; j < n && consistent; ++j) {
                const int k = gr.at(t - 1, j);
                consistent = (k == UNK || k == p.get(static_cast<std::size_t>(j)));
            }
            if (consistent)
                stack.emplace_back(p, t - 1);
        }
    }
    contradiction = true;
    return std::nullopt;
}

} // namespace

std::vector<BitVec> ms_recover(Rule rule, const BitVec& sigma, std::size_t n) {
    const RuleProperties props = rule.classify();
    if (!props.left_toggle && !props.right_toggle)
        throw std::invalid_argument("recovery requires a toggle rule");
    if (sigma.size() < (n + 1) / 2)
        throw std::invalid_argument("sequence must cover at least ceil(n/2) steps");
    const std::size_t center = n / 2;
    const RuleVector rules = RuleVector::uniform(rule, n);
    const std::size_t T = sigma.size();

    // Cells to guess: the side the toggle identity cannot reach directly.
    std::vector<std::size_t> guess_cells;
    if (props.left_toggle) {
        for (std::size_t j = center + 1; j < n; ++j)
            guess_cells.push_back(j);
    } else {
        for (std::size_t j = 0; j < center; ++j)
            guess_cells.push_back(j);
    }

    std::vector<BitVec> out;
    const std::uint64_t guesses = std::uint64_t{1} << guess_cells.size();
    for (std::uint64_t gbits = 0; gbits < guesses; ++gbits) {
        Grid gr(static_cast<int>(n), static_cast<int>(T));
        for (std::size_t t = 0; t < T; ++t)
            gr.put(static_cast<int>(t), static_cast<int>(center), sigma.get(t));
        for (std::size_t k = 0; k < guess_cells.size(); ++k)
            gr.put(0, static_cast<int>(guess_cells[k]),
                   static_cast<int>((gbits >> k) & 1u));

        // forward fills plus the directional substitution identity
        bool changed = true;
        while (changed && !gr.bad) {
            changed = false;
            for (int t = 0; t < static_cast<int>(T) && !gr.bad; ++t) {
                for (int j = 0; j < static_cast<int>(n); ++j) {
                    const int l = gr.at(t, j - 1), w = gr.at(t, j), r = gr.at(t, j + 1);
                    if (t + 1 < static_cast<int>(T)) {
                        if (l != UNK && w != UNK && r != UNK)
                            changed |= gr.put(t + 1, j, rule.apply(l, w, r));
                        const int up = gr.at(t + 1, j);
                        if (up != UNK && w != UNK) {
                            if (props.left_toggle && r != UNK)
                                changed |= gr.put(t, j - 1, rule.apply(up, w, r));
                            if (props.right_toggle && l != UNK)
                                changed |= gr.put(t, j + 1, rule.apply(l, w, up));
                        }
                    }
                }
            }
        }
        if (gr.bad)
            continue;
        bool full = true;
        for (int j = 0; j < static_cast<int>(n); ++j)
            if (gr.at(0, j) == UNK) full = false;
        if (!full)
            continue;
        BitVec seed = row_state(gr, 0);
        if (temporal_sequence(rules, seed, center, T) == sigma)
            out.push_back(std::move(seed));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ImprovedRecovery ms_recover_improved(Rule rule, const BitVec& sigma, std::size_t n) {
    if (rule.number() != 30)
        throw std::invalid_argument("improved recovery is specific to rule 30");
    if (sigma.size() < n)
        throw std::invalid_argument("improved recovery consumes a sequence of length >= n");
    const int N = static_cast<int>(n);
    const int T = static_cast<int>(sigma.size());
    const RuleVector rules = RuleVector::uniform(rule, n);
    const std::size_t center = n / 2;

    // Rotated frame: the observed cell sits at column n-1.
    Grid root(N, T);
    for (int t = 0; t < T; ++t)
        root.put(t, N - 1, sigma.get(static_cast<std::size_t>(t)));
    solve_round(root);

    struct Node {
        Grid grid;
        std::vector<CoinRecord> coins;
    };
    std::vector<Node> stack;
    stack.push_back({std::move(root), {}});
    long nodes = 0;
    const long node_budget = 200000;
    const int shift = static_cast<int>((center + 1) % n); // column w -> cell (w + shift) % n

    while (!stack.empty()) {
        if (++nodes > node_budget)
            throw std::domain_error("recovery search budget exhausted");
        Node node = std::move(stack.back());
        stack.pop_back();
        if (node.grid.bad)
            continue;
        deep_probe30(node.grid);
        if (node.grid.bad)
            continue;
        bool contradiction = false;
        if (auto seed = complete_from_grid(node.grid, sigma, rules, contradiction)) {
            // rotate back to the original frame
            BitVec orig(n);
            for (int w = 0; w < N; ++w)
                orig.set(static_cast<std::size_t>((w + shift) % N),
                         seed->get(static_cast<std::size_t>(w)));
            for (auto& c : node.coins)
                c.cell = (c.cell + shift) % N;
            if (!(temporal_sequence(rules, orig, center, sigma.size()) == sigma))
                throw std::logic_error("recovered seed failed forward verification");
            return {std::move(orig), std::move(node.coins)};
        }
        if (contradiction)
            continue;

        // coin cell: bottom-most hole in the left-adjacent column, else the
        // bottom-most, leftmost open cell with a known right neighbor
        int ct = -1, cj = -1;
        for (int t = T - 2; t >= 0 && ct < 0; --t)
            if (node.grid.at(t, N - 2) == UNK) {
                ct = t;
                cj = N - 2;
            }
        if (ct < 0) {
            for (int t = T - 2; t >= 0 && ct < 0; --t)
                for (int j = 0; j < N; ++j)
                    if (node.grid.at(t, j) == UNK && node.grid.at(t, j + 1) != UNK) {
                        ct = t;
                        cj = j;
                        break;
                    }
        }
        if (ct < 0)
            continue;

        // deep probing left both values open: this is a genuine random bit
        Grid b0 = node.grid;
        b0.put(ct, cj, 0);
        solve_round(b0);
        Grid b1 = node.grid;
        b1.put(ct, cj, 1);
        solve_round(b1);
        auto coins1 = node.coins;
        coins1.push_back({ct, cj, 1});
        stack.push_back({std::move(b1), std::move(coins1)});
        auto coins0 = node.coins;
        coins0.push_back({ct, cj, 0});
        stack.push_back({std::move(b0), std::move(coins0)});
    }
    throw std::domain_error("sequence is not producible by any seed");
}

} // namespace cabench
