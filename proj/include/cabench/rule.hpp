#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cabench {

struct RuleProperties {
    bool linear = false;
    bool affine = false;
    bool left_toggle = false;
    bool right_toggle = false;
    int arity = 0; // number of inputs the rule actually depends on
};

// Wolfram-numbered elementary rule: output for input (l,w,r) is bit 4l+2w+r.
class Rule {
public:
    Rule() = default;
    explicit Rule(int number);

    int number() const { return number_; }
    int apply(int l, int w, int r) const {
        return (number_ >> ((l << 2) | (w << 1) | r)) & 1;
    }
    RuleProperties classify() const;

    bool operator==(const Rule&) const = default;

private:
    std::uint8_t number_ = 0;
};

inline int apply_rule(Rule rule, int l, int w, int r) { return rule.apply(l, w, r); }
RuleProperties classify_rule(Rule rule);

class RuleVector {
public:
    RuleVector() = default;
    explicit RuleVector(std::vector<Rule> rules);
    static RuleVector uniform(Rule rule, std::size_t n);
    // "30" (uniform, expanded to n) or "90,90,105" (n ignored unless 0 = must match)
    static RuleVector parse(const std::string& text, std::size_t n);

    std::size_t size() const { return rules_.size(); }
    Rule operator[](std::size_t i) const { return rules_[i]; }
    const std::vector<Rule>& rules() const { return rules_; }

    bool is_uniform() const;
    bool is_symmetric() const;

private:
    std::vector<Rule> rules_;
};

} // namespace cabench
