#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cabench/sat_compiler.hpp"

using namespace cabench;

namespace {

// the running example: (x1|x2|~x3)(x1|x3|x5)(~x2|~x4|x5)(x3|x4|~x5)
const char* kExampleDimacs =
    "c four clauses over five variables\n"
    "p cnf 5 4\n"
    "1 2 -3 0\n"
    "1 3 5 0\n"
    "-2 -4 5 0\n"
    "3 4 -5 0\n";

// independent truth-table evaluator used as the test oracle
bool oracle(const Cnf3& cnf, const std::vector<int>& alpha) {
    for (int c = 0; c < cnf.clause_count(); ++c) {
        bool clause = false;
        for (int k = 0; k < 3; ++k) {
            const auto& lit = cnf.literals[static_cast<std::size_t>(3 * c + k)];
            const bool val = alpha[static_cast<std::size_t>(lit.var - 1)] == 1;
            clause = clause || (lit.negated ? !val : val);
        }
        if (!clause)
            return false;
    }
    return true;
}

Cnf3 random_cnf(std::mt19937& rng) {
    while (true) {
        const int v = 3 + static_cast<int>(rng() % 4); // 3..6
        const int c = 1 + static_cast<int>(rng() % 8); // 1..8
        std::set<std::vector<int>> clauses;
        int guard = 0;
        while (static_cast<int>(clauses.size()) < c && ++guard < 200) {
            std::vector<int> vars;
            while (static_cast<int>(vars.size()) < 3) {
                const int x = 1 + static_cast<int>(rng() % static_cast<unsigned>(v));
                if (std::find(vars.begin(), vars.end(), x) == vars.end())
                    vars.push_back(x);
            }
            std::sort(vars.begin(), vars.end());
            std::vector<int> cl;
            for (int x : vars)
                cl.push_back((rng() & 1) ? x : -x);
            clauses.insert(cl);
        }
        Cnf3 out;
        std::set<int> used;
        for (const auto& cl : clauses)
            for (int lit : cl)
                used.insert(std::abs(lit));
        // dense renumber so every variable occurs
        std::map<int, int> remap;
        for (int x : used)
            remap[x] = static_cast<int>(remap.size()) + 1;
        for (const auto& cl : clauses)
            for (int lit : cl)
                out.literals.push_back({remap[std::abs(lit)], lit < 0});
        out.variable_count = static_cast<int>(used.size());
        if (out.clause_count() >= 1)
            return out;
    }
}

} // namespace

TEST_CASE("dimacs parsing") {
    const Cnf3 cnf = parse_dimacs(kExampleDimacs);
    CHECK(cnf.variable_count == 5);
    CHECK(cnf.clause_count() == 4);
    CHECK(cnf.literals[2].var == 3);
    CHECK(cnf.literals[2].negated);

    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 1 2 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n1 2 3 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimacs("p cnf 4 1\n1 -2 3 4 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimacs("c nothing\n"), std::invalid_argument);

    // gaps in the numbering are renumbered densely
    const Cnf3 g = parse_dimacs("p cnf 9 1\n2 -5 9 0\n");
    CHECK(g.variable_count == 3);
}

TEST_CASE("compiling the running example") {
    const Cnf3 cnf = parse_dimacs(kExampleDimacs);
    const Compilation comp = compile(cnf);
    CHECK(comp.automaton.size() == 12);
    CHECK(comp.steps <= 3 * 12 / 2 + 2);
    CHECK(is_simple(comp.automaton));
    CHECK(comp.slot_positions == std::vector<int>{0, 2, 5, 7, 10});
    REQUIRE(!comp.v_trace.empty());
    CHECK(comp.v_trace.front() == std::vector<int>{1, 0, 2, 0, 0, 3, 0, 4, 0, 0, 5, 0});
    CHECK(comp.v_trace.back() == std::vector<int>{1, 2, 3, 1, 3, 5, 2, 4, 5, 3, 4, 5});
    // one state per pass, uniformly across cells
    for (const auto& cell : comp.automaton.cells)
        CHECK(cell.state_count() == static_cast<std::size_t>(comp.steps) + 1);

    // the t=0 layout places each assignment centered in its span
    CHECK(initial_value(cnf, {1, 0, 0, 0, 0}).to_bits() == "100000000000");
    CHECK(initial_value(cnf, {1, 1, 1, 1, 1}).to_bits() == "101001010010");
    CHECK(initial_value(cnf, {0, 0, 0, 0, 0}).to_bits() == "000000000000");
}

TEST_CASE("evaluation matches the oracle on the running example") {
    const Cnf3 cnf = parse_dimacs(kExampleDimacs);
    const Compilation comp = compile(cnf);
    CHECK(evaluate(comp, {1, 0, 0, 0, 0}).satisfied);
    CHECK_FALSE(evaluate(comp, {0, 0, 0, 0, 0}).satisfied);
    for (std::uint32_t bits = 0; bits < 32; ++bits) {
        std::vector<int> alpha(5);
        for (int j = 0; j < 5; ++j)
            alpha[static_cast<std::size_t>(j)] = (bits >> j) & 1;
        CHECK(evaluate(comp, alpha).satisfied == oracle(cnf, alpha));
    }
}

TEST_CASE("single clause compiles trivially") {
    const Cnf3 cnf = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    const Compilation comp = compile(cnf);
    CHECK(comp.automaton.size() == 3);
    CHECK(initial_value(cnf, {1, 0, 1}).to_bits() == "101");
    CHECK(comp.v_trace.front() == std::vector<int>{1, 2, 3});
    int sat = 0;
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        std::vector<int> alpha(3);
        for (int j = 0; j < 3; ++j)
            alpha[static_cast<std::size_t>(j)] = (bits >> j) & 1;
        sat += evaluate(comp, alpha).satisfied;
    }
    CHECK(sat == 7);
}

TEST_CASE("random corpus compiles soundly and completely") {
    std::mt19937 rng(90125);
    for (int trial = 0; trial < 60; ++trial) {
        const Cnf3 cnf = random_cnf(rng);
        const Compilation comp = compile(cnf);
        const int n = static_cast<int>(cnf.literals.size());
        CHECK(is_simple(comp.automaton));
        CHECK(comp.steps <= 3 * n / 2 + 2);
        for (const auto& cell : comp.automaton.cells)
            CHECK(cell.state_count() == static_cast<std::size_t>(comp.steps) + 1);
        for (std::uint32_t bits = 0; bits < (1u << cnf.variable_count); ++bits) {
            std::vector<int> alpha(static_cast<std::size_t>(cnf.variable_count));
            for (int j = 0; j < cnf.variable_count; ++j)
                alpha[static_cast<std::size_t>(j)] = (bits >> j) & 1;
            CHECK(evaluate(comp, alpha).satisfied == oracle(cnf, alpha));
        }
    }
}

TEST_CASE("value trace corresponds to the automaton run") {
    // wherever the trace holds variable j, the cell outputs alpha_j
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 10; ++trial) {
        const Cnf3 cnf = random_cnf(rng);
        const Compilation comp = compile(cnf);
        std::vector<int> alpha(static_cast<std::size_t>(cnf.variable_count));
        for (auto& a : alpha)
            a = static_cast<int>(rng() & 1);
        Configuration c = initial_configuration(comp.automaton, initial_value(cnf, alpha));
        for (std::size_t pass = 0; pass < comp.v_trace.size(); ++pass) {
            for (std::size_t i = 0; i < comp.automaton.size(); ++i) {
                const int var = comp.v_trace[pass][i];
                if (var != 0)
                    CHECK(c.s.get(i) == alpha[static_cast<std::size_t>(var - 1)]);
            }
            if (pass + 1 < comp.v_trace.size())
                c = step_fsca(comp.automaton, c);
        }
    }
}

TEST_CASE("padding preserves evaluation") {
    const Cnf3 cnf = parse_dimacs(kExampleDimacs);
    const PaddedCompilation padded = pad(cnf, 2);
    CHECK(padded.automaton.size() == 40); // 9*4*2/2 + 2*2
    CHECK(is_simple(padded.automaton));

    const Compilation comp = compile(cnf);
    for (std::uint32_t bits = 0; bits < 32; ++bits) {
        std::vector<int> alpha(5);
        for (int j = 0; j < 5; ++j)
            alpha[static_cast<std::size_t>(j)] = (bits >> j) & 1;
        BitVec s0 = initial_value(cnf, alpha);
        while (s0.size() < padded.automaton.size())
            s0.append(0);
        Configuration c = initial_configuration(padded.automaton, s0);
        c = run_fsca(padded.automaton, std::move(c), padded.steps);
        CHECK((c.s == padded.target) == oracle(cnf, alpha));
    }

    // 9*c*sigma odd is rejected: c=1, sigma=1 gives 4.5+2 cells
    const Cnf3 single = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    CHECK_THROWS_AS(pad(single, 1), std::invalid_argument);
    CHECK(pad(single, 2).automaton.size() == 13);
}

TEST_CASE("assignment search returns exactly the satisfying encodings") {
    const Cnf3 cnf = parse_dimacs(kExampleDimacs);
    const Compilation comp = compile(cnf);
    const auto found = invert_small(comp, cnf);
    std::set<std::string> got;
    for (const auto& s : found)
        got.insert(s.to_bits());
    std::set<std::string> want;
    for (std::uint32_t bits = 0; bits < 32; ++bits) {
        std::vector<int> alpha(5);
        for (int j = 0; j < 5; ++j)
            alpha[static_cast<std::size_t>(j)] = (bits >> j) & 1;
        if (oracle(cnf, alpha))
            want.insert(initial_value(cnf, alpha).to_bits());
    }
    CHECK(got == want);
    CHECK(got.count("100000000000") == 1);

    // an unsatisfiable formula: all eight sign patterns over three variables
    std::string text = "p cnf 3 8\n";
    for (int m = 0; m < 8; ++m) {
        text += std::to_string((m & 4) ? 1 : -1) + " ";
        text += std::to_string((m & 2) ? 2 : -2) + " ";
        text += std::to_string((m & 1) ? 3 : -3) + " 0\n";
    }
    const Cnf3 unsat = parse_dimacs(text);
    const Compilation comp2 = compile(unsat);
    CHECK(invert_small(comp2, unsat).empty());

    // a single clause admits seven of eight assignments
    const Cnf3 single = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    CHECK(invert_small(compile(single), single).size() == 7);
}
