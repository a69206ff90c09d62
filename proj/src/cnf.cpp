#include "cabench/cnf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cabench {

bool Cnf3::satisfied_by(const std::vector<int>& assignment) const {
    if (static_cast<int>(assignment.size()) != variable_count)
        throw std::invalid_argument("assignment length does not match variable count");
    for (int c = 0; c < clause_count(); ++c) {
        bool any = false;
        for (int k = 0; k < 3; ++k) {
            const Literal& lit = literals[static_cast<std::size_t>(3 * c + k)];
            const int val = assignment[static_cast<std::size_t>(lit.var - 1)];
            any = any || (lit.negated ? val == 0 : val == 1);
        }
        if (!any)
            return false;
    }
    return true;
}

Cnf3 parse_dimacs(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == 'p' || line[0] == '%')
            continue;
        std::istringstream ls(line);
        int v;
        while (ls >> v) {
            if (v == 0) {
                if (!current.empty()) {
                    clauses.push_back(current);
                    current.clear();
                }
            } else {
                current.push_back(v);
            }
        }
    }
    if (!current.empty())
        clauses.push_back(current);
    if (clauses.empty())
        throw std::invalid_argument("empty formula");

    std::set<std::vector<int>> seen;
    for (auto& cl : clauses) {
        if (cl.size() != 3)
            throw std::invalid_argument("every clause must have exactly 3 literals");
        std::set<int> vars;
        for (int lit : cl)
            vars.insert(std::abs(lit));
        if (vars.size() != 3)
            throw std::invalid_argument("variable repeated in clause");
        std::vector<int> key = cl;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate clause");
    }

    // dense renumbering preserving the original order of variable ids
    std::set<int> ids;
    for (const auto& cl : clauses)
        for (int lit : cl)
            ids.insert(std::abs(lit));
    std::map<int, int> remap;
    for (int id : ids)
        remap[id] = static_cast<int>(remap.size()) + 1;

    Cnf3 out;
    out.variable_count = static_cast<int>(remap.size());
    for (const auto& cl : clauses)
        for (int lit : cl)
            out.literals.push_back({remap[std::abs(lit)], lit < 0});
    return out;
}

std::string to_dimacs(const Cnf3& cnf) {
    std::ostringstream os;
    os << "p cnf " << cnf.variable_count << " " << cnf.clause_count() << "\n";
    for (int c = 0; c < cnf.clause_count(); ++c) {
        for (int k = 0; k < 3; ++k) {
            const Literal& lit = cnf.literals[static_cast<std::size_t>(3 * c + k)];
            os << (lit.negated ? -lit.var : lit.var) << " ";
        }
        os << "0\n";
    }
    return os.str();
}

} // namespace cabench
