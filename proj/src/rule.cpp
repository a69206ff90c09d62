#include "cabench/rule.hpp"

#include <sstream>
#include <stdexcept>

namespace cabench {

Rule::Rule(int number) {
    if (number < 0 || number > 255)
        throw std::invalid_argument("rule number must be in 0..255");
    number_ = static_cast<std::uint8_t>(number);
}

RuleProperties Rule::classify() const {
    RuleProperties p;
    const int a0 = apply(0, 0, 0);
    const int c1 = apply(1, 0, 0) ^ a0;
    const int c2 = apply(0, 1, 0) ^ a0;
    const int c3 = apply(0, 0, 1) ^ a0;
    p.affine = true;
    p.left_toggle = true;
    p.right_toggle = true;
    bool uses_l = false, uses_w = false, uses_r = false;
    for (int l = 0; l < 2; ++l)
        for (int w = 0; w < 2; ++w)
            for (int r = 0; r < 2; ++r) {
                const int out = apply(l, w, r);
                if (out != (a0 ^ (c1 & l) ^ (c2 & w) ^ (c3 & r)))
                    p.affine = false;
                if (out != (1 ^ apply(1 ^ l, w, r)))
                    p.left_toggle = false;
                if (out != (1 ^ apply(l, w, 1 ^ r)))
                    p.right_toggle = false;
                uses_l |= out != apply(1 ^ l, w, r);
                uses_w |= out != apply(l, 1 ^ w, r);
                uses_r |= out != apply(l, w, 1 ^ r);
            }
    p.linear = p.affine && a0 == 0;
    p.arity = int(uses_l) + int(uses_w) + int(uses_r);
    return p;
}

RuleProperties classify_rule(Rule rule) { return rule.classify(); }

RuleVector::RuleVector(std::vector<Rule> rules) : rules_(std::move(rules)) {
    if (rules_.size() < 3)
        throw std::invalid_argument("rule vector needs at least 3 cells");
}

RuleVector RuleVector::uniform(Rule rule, std::size_t n) {
    return RuleVector(std::vector<Rule>(n, rule));
}

RuleVector RuleVector::parse(const std::string& text, std::size_t n) {
    std::vector<Rule> rules;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        rules.push_back(Rule(std::stoi(tok)));
    if (rules.empty())
        throw std::invalid_argument("empty rule list");
    if (rules.size() == 1)
        return uniform(rules[0], n);
    if (n != 0 && rules.size() != n)
        throw std::invalid_argument("rule list length does not match cell count");
    return RuleVector(std::move(rules));
}

bool RuleVector::is_uniform() const {
    for (const auto& r : rules_)
        if (!(r == rules_[0])) return false;
    return true;
}

bool RuleVector::is_symmetric() const {
    const std::size_t n = rules_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!(rules_[i] == rules_[n - 1 - i])) return false;
    return true;
}

} // namespace cabench
