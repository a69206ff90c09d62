#include "cabench/fsca.hpp"

#include <sstream>
#include <stdexcept>

namespace cabench {

std::uint8_t transition_table(TransitionKind kind) {
    std::uint8_t t = 0;
    for (int v = 0; v < 8; ++v) {
        const int l = (v >> 2) & 1, w = (v >> 1) & 1, r = v & 1;
        int out = 0;
        switch (kind) {
        case TransitionKind::Lambda: out = l; break;
        case TransitionKind::Rho: out = r; break;
        case TransitionKind::Omega: out = w; break;
        case TransitionKind::NotOmega: out = 1 ^ w; break;
        case TransitionKind::Or: out = l | w | r; break;
        case TransitionKind::Const0: out = 0; break;
        case TransitionKind::Const1: out = 1; break;
        }
        t |= static_cast<std::uint8_t>(out << v);
    }
    return t;
}

void expand_transition_set(FiniteStateCell& cell, std::uint32_t from,
                           std::uint32_t to, std::uint8_t table) {
    if (from >= cell.delta.size() || to >= cell.delta.size())
        throw std::invalid_argument("transition endpoints must be existing states");
    for (int v = 0; v < 8; ++v)
        cell.delta[from][static_cast<std::size_t>(v)] = {to,
            static_cast<std::uint8_t>((table >> v) & 1)};
}

void expand_transition_set(FiniteStateCell& cell, std::uint32_t from,
                           std::uint32_t to, TransitionKind kind) {
    expand_transition_set(cell, from, to, transition_table(kind));
}

bool is_simple(const FiniteStateCell& cell) {
    for (const auto& row : cell.delta) {
        for (int v = 1; v < 8; ++v)
            if (row[static_cast<std::size_t>(v)].next != row[0].next)
                return false;
    }
    return true;
}

bool is_simple(const Fsca& a) {
    for (const auto& c : a.cells)
        if (!is_simple(c)) return false;
    return true;
}

Configuration initial_configuration(const Fsca& a, const BitVec& value) {
    if (value.size() != a.size())
        throw std::invalid_argument("initial value length does not match cell count");
    Configuration c;
    c.q.reserve(a.size());
    for (const auto& cell : a.cells)
        c.q.push_back(cell.start);
    c.s = value;
    return c;
}

Configuration step_fsca(const Fsca& a, const Configuration& c) {
    const std::size_t n = a.size();
    if (c.q.size() != n || c.s.size() != n)
        throw std::invalid_argument("configuration does not match automaton");
    Configuration next;
    next.q.resize(n);
    next.s = BitVec(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int l = c.s.get((i + n - 1) % n);
        const int w = c.s.get(i);
        const int r = c.s.get((i + 1) % n);
        const auto& cell = a.cells[i];
        if (c.q[i] >= cell.state_count())
            throw std::invalid_argument("configuration state out of range");
        const CellTransition tr = cell.delta[c.q[i]][static_cast<std::size_t>((l << 2) | (w << 1) | r)];
        next.q[i] = tr.next;
        next.s.set(i, tr.out);
    }
    return next;
}

Configuration run_fsca(const Fsca& a, Configuration c, long k) {
    if (k < 0)
        throw std::invalid_argument("step count must be >= 0");
    for (long t = 0; t < k; ++t)
        c = step_fsca(a, c);
    return c;
}

FiniteStateCell elementary_cell(Rule rule) {
    FiniteStateCell cell;
    cell.delta.resize(1);
    expand_transition_set(cell, 0, 0, static_cast<std::uint8_t>(rule.number()));
    return cell;
}

Fsca elementary_fsca(Rule rule, std::size_t n) {
    return elementary_fsca(RuleVector::uniform(rule, n));
}

Fsca elementary_fsca(const RuleVector& rules) {
    Fsca a;
    a.cells.reserve(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i)
        a.cells.push_back(elementary_cell(rules[i]));
    return a;
}

bool verify_certificate(const Fsca& a, const Configuration& target, long k,
                        const BitVec& initial_value) {
    std::vector<std::uint32_t> starts;
    starts.reserve(a.size());
    for (const auto& cell : a.cells)
        starts.push_back(cell.start);
    return verify_certificate(a, target, k, initial_value, starts);
}

bool verify_certificate(const Fsca& a, const Configuration& target, long k,
                        const BitVec& initial_value,
                        const std::vector<std::uint32_t>& start_states) {
    Configuration c;
    c.q = start_states;
    c.s = initial_value;
    return run_fsca(a, std::move(c), k) == target;
}

std::string serialize_fsca(const Fsca& a) {
    std::ostringstream os;
    os << "fsca " << a.size() << "\n";
    for (const auto& cell : a.cells) {
        os << "cell " << cell.state_count() << " " << cell.start << " "
           << cell.initial_output << "\n";
        for (std::size_t q = 0; q < cell.state_count(); ++q)
            for (int v = 0; v < 8; ++v) {
                const auto& tr = cell.delta[q][static_cast<std::size_t>(v)];
                os << q << " " << v << " " << tr.next << " " << int(tr.out) << "\n";
            }
    }
    return os.str();
}

Fsca parse_fsca(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    std::size_t n = 0;
    if (!(is >> tag >> n) || tag != "fsca")
        throw std::invalid_argument("missing fsca header");
    Fsca a;
    a.cells.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t states = 0;
        std::uint32_t start = 0;
        int init_out = 0;
        if (!(is >> tag >> states >> start >> init_out) || tag != "cell")
            throw std::invalid_argument("missing cell header");
        if (states == 0 || start >= states)
            throw std::invalid_argument("bad cell header");
        auto& cell = a.cells[i];
        cell.start = start;
        cell.initial_output = init_out;
        cell.delta.resize(states);
        std::vector<std::array<bool, 8>> seen(states, std::array<bool, 8>{});
        for (std::size_t line = 0; line < states * 8; ++line) {
            std::uint32_t q = 0, next = 0;
            int v = 0, out = 0;
            if (!(is >> q >> v >> next >> out))
                throw std::invalid_argument("truncated transition list");
            if (q >= states || next >= states || v < 0 || v > 7 || (out & ~1))
                throw std::invalid_argument("transition out of range");
            if (seen[q][static_cast<std::size_t>(v)])
                throw std::invalid_argument("duplicate transition");
            seen[q][static_cast<std::size_t>(v)] = true;
            cell.delta[q][static_cast<std::size_t>(v)] = {next, static_cast<std::uint8_t>(out)};
        }
        for (const auto& row : seen)
            for (bool s : row)
                if (!s)
                    throw std::invalid_argument("transition map is not total");
    }
    return a;
}

} // namespace cabench
