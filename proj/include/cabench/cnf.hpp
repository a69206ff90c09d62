#pragma once

#include <string>
#include <vector>

namespace cabench {

struct Literal {
    int var = 0;        // 1-based
    bool negated = false;
};

// 3-CNF as a flat literal array; clause i is literals [3i, 3i+2].
struct Cnf3 {
    std::vector<Literal> literals;
    int variable_count = 0;

    int clause_count() const { return static_cast<int>(literals.size()) / 3; }
    bool satisfied_by(const std::vector<int>& assignment) const;
};

// Strict parser: exactly 3 literals per clause, no repeated variable within a
// clause, no duplicate clauses, at least one clause; variables renumbered
// densely when the numbering has gaps.
Cnf3 parse_dimacs(const std::string& text);

std::string to_dimacs(const Cnf3& cnf);

} // namespace cabench
