#include "cabench/sat_compiler.hpp"

#include <algorithm>
#include <stdexcept>

namespace cabench {

namespace {

// Builder that appends one pass (one new state per cell) at a time, keeping
// the constructed automaton simple by chaining states.
struct PassBuilder {
    int n;
    std::vector<std::vector<TransitionKind>> passes;
    std::vector<TransitionKind> current;

    explicit PassBuilder(int cells) : n(cells) {}

    void begin_pass() { current.assign(static_cast<std::size_t>(n), TransitionKind::Omega); }
    void put(int i, TransitionKind k) { current[static_cast<std::size_t>(i - 1)] = k; }
    void end_pass() { passes.push_back(current); }

    Fsca build() const {
        Fsca a;
        a.cells.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            auto& cell = a.cells[static_cast<std::size_t>(i)];
            cell.delta.resize(passes.size() + 1);
            cell.start = 0;
            for (std::size_t t = 0; t < passes.size(); ++t)
                expand_transition_set(cell, static_cast<std::uint32_t>(t),
                                      static_cast<std::uint32_t>(t + 1),
                                      passes[t][static_cast<std::size_t>(i)]);
            // final state self-loops holding its value
            const std::uint32_t fin = static_cast<std::uint32_t>(passes.size());
            expand_transition_set(cell, fin, fin, TransitionKind::Omega);
        }
        return a;
    }
};

} // namespace

Compilation compile(const Cnf3& cnf) {
    const int v = cnf.variable_count;
    const int n = static_cast<int>(cnf.literals.size());
    if (n == 0 || n % 3 != 0)
        throw std::invalid_argument("formula must be a nonempty 3-CNF");

    std::vector<int> count(static_cast<std::size_t>(v) + 1, 0);
    for (const auto& lit : cnf.literals)
        ++count[static_cast<std::size_t>(lit.var)];
    for (int j = 1; j <= v; ++j)
        if (count[static_cast<std::size_t>(j)] == 0)
            throw std::invalid_argument("every variable must occur at least once");

    // initial positions: each assignment centered in a span of width count[j]
    std::vector<int> V(static_cast<std::size_t>(n) + 1, 0); // 1-based
    std::vector<int> p(static_cast<std::size_t>(v) + 1, 0);
    {
        int i = 1;
        for (int j = 1; j <= v; ++j) {
            p[static_cast<std::size_t>(j)] = i + (count[static_cast<std::size_t>(j)] - 1) / 2;
            V[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] = j;
            i += count[static_cast<std::size_t>(j)];
        }
    }

    Compilation comp;
    comp.clause_count = n / 3;
    comp.variable_count = v;
    for (int j = 1; j <= v; ++j)
        comp.slot_positions.push_back(p[static_cast<std::size_t>(j)] - 1);
    comp.v_trace.push_back(std::vector<int>(V.begin() + 1, V.end()));

    PassBuilder builder(n);

    // span growth: replicate each assignment over its span, one cell per side
    // per pass, left split first once the span is wider than one cell
    std::vector<int> need(static_cast<std::size_t>(v) + 1, 0);
    std::vector<std::pair<int, int>> span(static_cast<std::size_t>(v) + 1);
    long total_need = 0;
    for (int j = 1; j <= v; ++j) {
        need[static_cast<std::size_t>(j)] = count[static_cast<std::size_t>(j)] - 1;
        span[static_cast<std::size_t>(j)] = {p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j)]};
        total_need += need[static_cast<std::size_t>(j)];
    }
    while (total_need > 0) {
        // cells not split in this pass keep their value (the builder default)
        builder.begin_pass();
        for (int j = 1; j <= v; ++j) {
            auto& nd = need[static_cast<std::size_t>(j)];
            auto& sp = span[static_cast<std::size_t>(j)];
            if (nd == 0)
                continue;
            if (nd >= 2) {
                if (sp.first == sp.second) {
                    // first split grows both directions
                    const int m = sp.first;
                    V[static_cast<std::size_t>(m - 1)] = V[static_cast<std::size_t>(m)];
                    V[static_cast<std::size_t>(m + 1)] = V[static_cast<std::size_t>(m)];
                    builder.put(m - 1, TransitionKind::Rho);
                    builder.put(m + 1, TransitionKind::Lambda);
                    sp = {m - 1, m + 1};
                    nd -= 2;
                    total_need -= 2;
                    continue;
                }
                const int m = sp.first;
                V[static_cast<std::size_t>(m - 1)] = V[static_cast<std::size_t>(m)];
                builder.put(m - 1, TransitionKind::Rho);
                sp.first = m - 1;
                --nd;
                --total_need;
            }
            // the right end grows whenever the span still needs cells
            const int m = sp.second;
            V[static_cast<std::size_t>(m + 1)] = V[static_cast<std::size_t>(m)];
            builder.put(m + 1, TransitionKind::Lambda);
            sp.second = m + 1;
            --nd;
            --total_need;
        }
        builder.end_pass();
        comp.v_trace.push_back(std::vector<int>(V.begin() + 1, V.end()));
    }

    // destinations: literal index per assignment copy, in clause-scan order
    std::vector<std::vector<int>> dest(static_cast<std::size_t>(v) + 1);
    for (int i = 1; i <= n; ++i)
        dest[static_cast<std::size_t>(cnf.literals[static_cast<std::size_t>(i - 1)].var)].push_back(i);
    std::vector<int> D(static_cast<std::size_t>(n) + 1, 0);
    {
        int i = 1;
        for (int j = 1; j <= v; ++j)
            for (int d : dest[static_cast<std::size_t>(j)])
                D[static_cast<std::size_t>(i++)] = d;
    }
    comp.destinations = std::vector<int>(D.begin() + 1, D.end());

    // odd-even transposition sort of D, mirrored on V and the cells
    auto is_sorted = [&] {
        for (int i = 1; i < n; ++i)
            if (D[static_cast<std::size_t>(i)] > D[static_cast<std::size_t>(i + 1)])
                return false;
        return true;
    };
    auto run_phase = [&](int start) {
        bool swapped = false;
        for (int i = start; i + 1 <= n; i += 2) {
            if (D[static_cast<std::size_t>(i)] > D[static_cast<std::size_t>(i + 1)]) {
                std::swap(D[static_cast<std::size_t>(i)], D[static_cast<std::size_t>(i + 1)]);
                std::swap(V[static_cast<std::size_t>(i)], V[static_cast<std::size_t>(i + 1)]);
                builder.put(i, TransitionKind::Rho);
                builder.put(i + 1, TransitionKind::Lambda);
                swapped = true;
            }
        }
        return swapped;
    };
    while (true) {
        builder.begin_pass();
        bool swapped = run_phase(1);
        builder.end_pass();
        comp.v_trace.push_back(std::vector<int>(V.begin() + 1, V.end()));
        if (!swapped && is_sorted())
            break;
        builder.begin_pass();
        swapped = run_phase(2);
        builder.end_pass();
        comp.v_trace.push_back(std::vector<int>(V.begin() + 1, V.end()));
        if (!swapped && is_sorted())
            break;
    }
    for (int i = 1; i <= n; ++i)
        if (V[static_cast<std::size_t>(i)] != cnf.literals[static_cast<std::size_t>(i - 1)].var)
            throw std::logic_error("assignment routing failed");

    // complement pass, then clause evaluation
    builder.begin_pass();
    for (int i = 1; i <= n; ++i)
        builder.put(i, cnf.literals[static_cast<std::size_t>(i - 1)].negated
                           ? TransitionKind::NotOmega
                           : TransitionKind::Omega);
    builder.end_pass();
    builder.begin_pass();
    for (int i = 1; i <= n; ++i)
        builder.put(i, i % 3 == 2 ? TransitionKind::Or : TransitionKind::Const0);
    builder.end_pass();

    comp.automaton = builder.build();
    comp.steps = static_cast<long>(builder.passes.size());
    comp.target = BitVec(static_cast<std::size_t>(n));
    for (int c = 0; c < comp.clause_count; ++c)
        comp.target.set(static_cast<std::size_t>(3 * c + 1), 1);
    return comp;
}

BitVec initial_value(const Cnf3& cnf, const std::vector<int>& assignment) {
    const int v = cnf.variable_count;
    if (static_cast<int>(assignment.size()) != v)
        throw std::invalid_argument("assignment length does not match variable count");
    std::vector<int> count(static_cast<std::size_t>(v) + 1, 0);
    for (const auto& lit : cnf.literals)
        ++count[static_cast<std::size_t>(lit.var)];
    BitVec s(cnf.literals.size());
    std::size_t i = 0;
    for (int j = 1; j <= v; ++j) {
        const int c = count[static_cast<std::size_t>(j)];
        const int left = (c - 1) / 2;
        s.set(i + static_cast<std::size_t>(left), assignment[static_cast<std::size_t>(j - 1)]);
        i += static_cast<std::size_t>(c);
    }
    return s;
}

EvalResult evaluate(const Compilation& comp, const std::vector<int>& assignment) {
    if (assignment.size() != comp.slot_positions.size())
        throw std::invalid_argument("assignment length does not match variable count");
    BitVec s0(comp.automaton.size());
    for (std::size_t j = 0; j < assignment.size(); ++j)
        s0.set(static_cast<std::size_t>(comp.slot_positions[j]), assignment[j]);
    Configuration c = initial_configuration(comp.automaton, s0);
    c = run_fsca(comp.automaton, std::move(c), comp.steps);
    EvalResult out;
    out.final_value = c.s;
    out.satisfied = c.s == comp.target;
    return out;
}

PaddedCompilation pad(const Cnf3& cnf, int sigma) {
    if (sigma < 1)
        throw std::invalid_argument("padding factor must be >= 1");
    const int c = static_cast<int>(cnf.literals.size()) / 3;
    if ((9L * c * sigma) % 2 != 0)
        throw std::invalid_argument("9*c*sigma must be even for padding");
    Compilation comp = compile(cnf);
    const long n_total = 9L * c * sigma / 2 + 2L * sigma;
    const long dummies = n_total - 3L * c;
    if (dummies < 0)
        throw std::invalid_argument("padding smaller than the compiled automaton");

    PaddedCompilation out;
    out.automaton = comp.automaton;
    out.steps = comp.steps;
    out.original_cells = 3 * c;
    const std::size_t k = static_cast<std::size_t>(comp.steps);
    for (long d = 0; d < dummies; ++d) {
        FiniteStateCell cell;
        cell.delta.resize(k + 1);
        for (std::size_t t = 0; t < k; ++t)
            expand_transition_set(cell, static_cast<std::uint32_t>(t),
                                  static_cast<std::uint32_t>(t + 1), TransitionKind::Const0);
        expand_transition_set(cell, static_cast<std::uint32_t>(k),
                              static_cast<std::uint32_t>(k), TransitionKind::Const0);
        out.automaton.cells.push_back(std::move(cell));
    }
    out.target = BitVec(static_cast<std::size_t>(n_total));
    for (int cl = 0; cl < c; ++cl)
        out.target.set(static_cast<std::size_t>(3 * cl + 1), 1);
    return out;
}

std::vector<BitVec> invert_small(const Compilation& comp, const Cnf3& cnf) {
    const int v = cnf.variable_count;
    if (v > 20)
        throw std::invalid_argument("assignment search limited to v <= 20");
    Configuration target;
    target.s = comp.target;
    for (const auto& cell : comp.automaton.cells)
        target.q.push_back(static_cast<std::uint32_t>(cell.state_count() - 1));
    std::vector<BitVec> out;
    for (std::uint32_t bits = 0; bits < (1u << v); ++bits) {
        std::vector<int> alpha(static_cast<std::size_t>(v));
        for (int j = 0; j < v; ++j)
            alpha[static_cast<std::size_t>(j)] = (bits >> j) & 1;
        const BitVec s0 = initial_value(cnf, alpha);
        if (verify_certificate(comp.automaton, target, comp.steps, s0))
            out.push_back(s0);
    }
    return out;
}

} // namespace cabench
