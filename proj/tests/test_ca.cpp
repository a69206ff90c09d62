#include "doctest.h"

#include <stdexcept>

#include <random>

#include "cabench/ca.hpp"

using namespace cabench;

TEST_CASE("rule application matches Wolfram numbering") {
    CHECK(Rule(30).apply(1, 0, 0) == 1);
    CHECK(Rule(90).apply(1, 1, 1) == 0);
    CHECK(Rule(0).apply(1, 1, 1) == 0);
    CHECK(Rule(0).apply(0, 0, 0) == 0);
    // rule 30 = l ^ (w | r) on all 8 inputs
    for (int l = 0; l < 2; ++l)
        for (int w = 0; w < 2; ++w)
            for (int r = 0; r < 2; ++r)
                CHECK(Rule(30).apply(l, w, r) == (l ^ (w | r)));
}

TEST_CASE("classification") {
    const auto p30 = Rule(30).classify();
    CHECK_FALSE(p30.linear);
    CHECK_FALSE(p30.affine);
    CHECK(p30.left_toggle);
    CHECK_FALSE(p30.right_toggle);
    CHECK(p30.arity == 3);

    const auto p90 = Rule(90).classify();
    CHECK(p90.linear);
    CHECK(p90.affine);
    CHECK(p90.left_toggle);
    CHECK(p90.right_toggle);
    CHECK(p90.arity == 2);

    const auto p105 = Rule(105).classify();
    CHECK(p105.affine);
    CHECK_FALSE(p105.linear);
    CHECK(p105.arity == 3);

    CHECK_THROWS_AS(Rule(256), std::invalid_argument);
    CHECK_THROWS_AS(Rule(-1), std::invalid_argument);
}

TEST_CASE("toggle predicates over all 256 rules") {
    for (int num = 0; num < 256; ++num) {
        const Rule rule(num);
        const auto p = rule.classify();
        if (p.linear)
            CHECK(p.affine);
        bool lt = true, rt = true;
        for (int l = 0; l < 2; ++l)
            for (int w = 0; w < 2; ++w)
                for (int r = 0; r < 2; ++r) {
                    lt = lt && rule.apply(1 ^ l, w, r) == (1 ^ rule.apply(l, w, r));
                    rt = rt && rule.apply(l, w, 1 ^ r) == (1 ^ rule.apply(l, w, r));
                }
        CHECK(p.left_toggle == lt);
        CHECK(p.right_toggle == rt);
        // substitution identity for toggle rules
        if (p.left_toggle)
            for (int l = 0; l < 2; ++l)
                for (int w = 0; w < 2; ++w)
                    for (int r = 0; r < 2; ++r)
                        CHECK(rule.apply(rule.apply(l, w, r), w, r) == l);
        if (p.right_toggle)
            for (int l = 0; l < 2; ++l)
                for (int w = 0; w < 2; ++w)
                    for (int r = 0; r < 2; ++r)
                        CHECK(rule.apply(l, w, rule.apply(l, w, r)) == r);
    }
}

TEST_CASE("stepping") {
    const RuleVector f90 = RuleVector::uniform(Rule(90), 5);
    CHECK(step(f90, BitVec::from_bits("00100")).to_bits() == "01010");
    const RuleVector f30 = RuleVector::uniform(Rule(30), 5);
    CHECK(step(f30, BitVec::from_bits("00100")).to_bits() == "01110");
    const RuleVector f0 = RuleVector::uniform(Rule(0), 5);
    CHECK(step(f0, BitVec::from_bits("10111")).to_bits() == "00000");
    CHECK_THROWS_AS(step(f90, BitVec::from_bits("0010")), std::invalid_argument);
}

TEST_CASE("evolve histories") {
    const RuleVector f90 = RuleVector::uniform(Rule(90), 5);
    const auto h0 = evolve(f90, BitVec::from_bits("00100"), Boundary::Cyclic, 0);
    REQUIRE(h0.size() == 1);
    CHECK(h0[0].to_bits() == "00100");

    const auto h2 = evolve(f90, BitVec::from_bits("00100"), Boundary::Cyclic, 2);
    REQUIRE(h2.size() == 3);
    CHECK(h2[1].to_bits() == "01010");
    CHECK(h2[2].to_bits() == "10001");

    // center-cell column of the rule 30 run behind the seed-recovery example
    const RuleVector f30 = RuleVector::uniform(Rule(30), 7);
    const auto h3 = evolve(f30, BitVec::from_bits("1100110"), Boundary::Cyclic, 3);
    std::string column;
    for (const auto& s : h3)
        column += static_cast<char>('0' + s.get(3));
    CHECK(column == "0101");
}

TEST_CASE("temporal sequences") {
    const RuleVector f30 = RuleVector::uniform(Rule(30), 7);
    CHECK(temporal_sequence(f30, BitVec::from_bits("1100110"), 3, 4).to_bits() == "0101");

    std::vector<Rule> hybrid(9, Rule(90));
    hybrid[8] = Rule(105);
    const RuleVector f(hybrid);
    const BitVec seed = BitVec::from_msb_word(417, 9);
    CHECK(temporal_sequence(f, seed, 4, 19).to_bits() == "0100011010001101000");

    const RuleVector f0 = RuleVector::uniform(Rule(0), 5);
    CHECK(temporal_sequence(f0, BitVec::from_bits("11111"), 2, 3).to_bits() == "100");
    CHECK_THROWS_AS(temporal_sequence(f30, BitVec::from_bits("1100110"), 7, 4),
                    std::invalid_argument);
}

TEST_CASE("temporal sequence equals the evolve column") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5 + rng() % 8;
        std::vector<Rule> rules;
        for (std::size_t i = 0; i < n; ++i)
            rules.push_back(Rule(static_cast<int>(rng() % 256)));
        BitVec seed(n);
        for (std::size_t i = 0; i < n; ++i)
            seed.set(i, static_cast<int>(rng() & 1));
        const RuleVector f(rules);
        const std::size_t cell = rng() % n;
        const std::size_t len = 1 + rng() % 20;
        const auto hist = evolve(f, seed, Boundary::Cyclic, static_cast<int>(len - 1));
        const BitVec seq = temporal_sequence(f, seed, cell, len);
        for (std::size_t t = 0; t < len; ++t)
            CHECK(seq.get(t) == hist[t].get(cell));
    }
}

TEST_CASE("null boundary") {
    // zero state stays zero under any linear rule vector
    std::vector<Rule> rules{Rule(90), Rule(150), Rule(90), Rule(150), Rule(90)};
    const RuleVector f(rules);
    CHECK(step(f, BitVec(5), Boundary::Null).to_bits() == "00000");
    // boundary matters: a lone 1 at the edge wraps only cyclically
    const RuleVector f90 = RuleVector::uniform(Rule(90), 5);
    CHECK(step(f90, BitVec::from_bits("10000"), Boundary::Null).to_bits() == "01000");
    CHECK(step(f90, BitVec::from_bits("10000"), Boundary::Cyclic).to_bits() == "01001");
}

TEST_CASE("kernel agrees with the generic step") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + rng() % 14;
        std::vector<Rule> rules;
        for (std::size_t i = 0; i < n; ++i)
            rules.push_back(Rule(static_cast<int>(rng() % 256)));
        const RuleVector f(rules);
        StepKernel kernel(f);
        BitVec s(n);
        for (std::size_t i = 0; i < n; ++i)
            s.set(i, static_cast<int>(rng() & 1));
        CHECK(kernel.unpack(kernel.step(kernel.pack(s))) == step(f, s));
    }
}

TEST_CASE("rule vector parsing") {
    const RuleVector u = RuleVector::parse("30", 7);
    CHECK(u.size() == 7);
    CHECK(u.is_uniform());
    const RuleVector h = RuleVector::parse("90,90,105", 0);
    CHECK(h.size() == 3);
    CHECK_FALSE(h.is_uniform());
    CHECK_FALSE(h.is_symmetric());
    CHECK(RuleVector::parse("150,90,150", 0).is_symmetric());
    CHECK_THROWS_AS(RuleVector::parse("90,105", 0), std::invalid_argument);
}
