// Command-line workbench for cellular-automaton pseudorandom generators:
// stepping and inversion of elementary CA, seed recovery, linear analysis,
// 3-CNF compilation to finite-state cellular automata, the Chasm generator,
// and a small statistical test battery.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cabench/ca.hpp"
#include "cabench/gf2.hpp"
#include "cabench/chasm.hpp"
#include "cabench/invert.hpp"
#include "cabench/orbit.hpp"
#include "cabench/recover.hpp"
#include "cabench/sat_compiler.hpp"
#include "cabench/stats.hpp"

using json = nlohmann::json;
using namespace cabench;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open file: " + path);
    os << text;
    if (!os)
        throw std::runtime_error("write failed: " + path);
}

struct GenOptions {
    std::string prg = "chasm";
    int n = 0;
    std::string seed_hex;
    std::string seed_file;
    int structured = 0; // 1..18 selects a structured seed pattern
    std::size_t bytes = 0;
    std::string out;
    std::string format = "raw";
    std::string state_in;
    std::string state_out;
};

int run_gen(const GenOptions& opt) {
    if (opt.prg != "chasm")
        throw std::invalid_argument("unknown generator: " + opt.prg);
    Chasm g = [&] {
        if (!opt.state_in.empty())
            return Chasm::restore(read_file(opt.state_in));
        BitVec seed;
        if (opt.structured > 0) {
            if (opt.n <= 0)
                throw std::invalid_argument("--n is required with --structured-seed");
            const auto corpus = structured_seeds(opt.n);
            if (opt.structured > static_cast<int>(corpus.size()))
                throw std::invalid_argument("structured seeds are numbered 1..18");
            seed = corpus[static_cast<std::size_t>(opt.structured - 1)];
        } else if (!opt.seed_hex.empty()) {
            if (opt.n <= 0)
                throw std::invalid_argument("--n is required with --seed");
            const std::size_t want = static_cast<std::size_t>(9 * opt.n);
            if (opt.seed_hex.size() * 4 != want)
                throw std::invalid_argument("seed must be exactly 9n/4 hex digits");
            seed = BitVec::from_hex(opt.seed_hex, want);
        } else if (!opt.seed_file.empty()) {
            const std::string blob = read_file(opt.seed_file);
            std::vector<std::uint8_t> bytes(blob.begin(), blob.end());
            if (opt.n <= 0)
                throw std::invalid_argument("--n is required with --seed-file");
            const std::size_t want = static_cast<std::size_t>(9 * opt.n);
            if (bytes.size() * 8 < want)
                throw std::invalid_argument("seed file too short");
            seed = unpack_bits(bytes, want);
        } else {
            throw std::invalid_argument(
                "one of --seed, --seed-file, --structured-seed, --state-in is required");
        }
        return Chasm::initialize(seed);
    }();
    const auto bytes = g.generate(opt.bytes);
    export_bits(bytes, opt.bytes * 8, opt.out,
                opt.format == "ascii" ? BitFormat::Ascii : BitFormat::Raw);
    if (!opt.state_out.empty())
        write_file(opt.state_out, g.dump());
    return 0;
}

int run_step(const std::string& rules_text, const std::string& state_bits,
             const std::string& boundary, int t) {
    const BitVec state = BitVec::from_bits(state_bits);
    const RuleVector rules = RuleVector::parse(rules_text, state.size());
    const Boundary b = boundary == "null" ? Boundary::Null : Boundary::Cyclic;
    const auto history = evolve(rules, state, b, t);
    for (const auto& s : history)
        std::cout << s.to_bits() << "\n";
    return 0;
}

int run_invert(int rule, const std::string& state_bits, bool brute, int histogram_n) {
    json out;
    out["rule"] = rule;
    if (histogram_n > 0) {
        out["n"] = histogram_n;
        json hist = json::object();
        for (const auto& [preds, states] : predecessor_histogram(Rule(rule), histogram_n))
            hist[std::to_string(preds)] = states;
        out["histogram"] = hist;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    const BitVec state = BitVec::from_bits(state_bits);
    const RuleVector rules = RuleVector::uniform(Rule(rule), state.size());
    const auto preds = brute ? brute_force_predecessors(rules, state)
                             : invert_toggle_rule(rules, state);
    out["state"] = state.to_bits();
    out["method"] = brute ? "brute" : "toggle-sweep";
    out["predecessors"] = json::array();
    for (const auto& p : preds)
        out["predecessors"].push_back(p.to_bits());
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_priors(int rule, int width, const std::string& out_path) {
    const PriorTable table = prior_table(Rule(rule), width);
    std::ostringstream os;
    os << "pattern,predecessors,ones_per_position\n";
    for (std::size_t pat = 0; pat < table.rows.size(); ++pat) {
        const auto& row = table.rows[pat];
        os << BitVec::from_msb_word(pat, static_cast<std::size_t>(width)).to_bits() << ",";
        for (std::size_t i = 0; i < row.predecessors.size(); ++i)
            os << (i ? " " : "") << row.predecessors[i].to_bits();
        os << ",";
        for (std::size_t i = 0; i < row.one_counts.size(); ++i)
            os << (i ? " " : "") << row.one_counts[i];
        os << "\n";
    }
    if (out_path.empty())
        std::cout << os.str();
    else
        write_file(out_path, os.str());
    return 0;
}

int run_seqmap(const std::string& rules_text, int length, const std::string& out_path) {
    const RuleVector rules = RuleVector::parse(rules_text, 0);
    const std::size_t L = length > 0 ? static_cast<std::size_t>(length) : rules.size();
    const auto map = sequence_seed_map(rules, L);
    std::ostringstream os;
    os << "sequence,count,seeds\n";
    for (const auto& [key, seeds] : map.groups) {
        os << BitVec::from_msb_word(key, L).to_bits() << "," << seeds.size() << ",";
        for (std::size_t i = 0; i < seeds.size(); ++i)
            os << (i ? " " : "")
               << BitVec::from_msb_word(seeds[i], map.cells).to_bits();
        os << "\n";
    }
    if (out_path.empty())
        std::cout << os.str();
    else
        write_file(out_path, os.str());
    return 0;
}

int run_affine(const std::string& rules_text) {
    const RuleVector rules = RuleVector::parse(rules_text, 0);
    const auto map = affine_map_of(rules);
    std::cout << map.m.to_grid();
    std::cout << "b " << map.b.to_bits() << "\n";
    return 0;
}

int run_recover(int rule, const std::string& sequence, int n, bool improved) {
    const BitVec sigma = BitVec::from_bits(sequence);
    json out;
    out["rule"] = rule;
    out["n"] = n;
    out["sequence"] = sequence;
    if (improved) {
        const auto rec = ms_recover_improved(Rule(rule), sigma, static_cast<std::size_t>(n));
        out["seed"] = rec.seed.to_bits();
        out["coins"] = json::array();
        for (const auto& c : rec.coins)
            out["coins"].push_back({{"t", c.t}, {"cell", c.cell}, {"value", c.value}});
        out["coin_count"] = rec.coins.size();
    } else {
        const auto seeds = ms_recover(Rule(rule), sigma, static_cast<std::size_t>(n));
        out["seeds"] = json::array();
        for (const auto& s : seeds)
            out["seeds"].push_back(s.to_bits());
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_period(const std::string& rules_text, const std::string& seed_bits, bool max) {
    json out;
    if (max) {
        if (rules_text.find(',') == std::string::npos)
            throw std::invalid_argument("--max needs an explicit per-cell rule list");
        const RuleVector rules = RuleVector::parse(rules_text, 0);
        out["rules"] = rules_text;
        out["max_period"] = max_period(rules);
    } else {
        const BitVec seed = BitVec::from_bits(seed_bits);
        const RuleVector rules = RuleVector::parse(rules_text, seed.size());
        const auto rep = eventual_period(rules, seed);
        out["rules"] = rules_text;
        out["seed"] = seed_bits;
        out["tail"] = rep.tail;
        out["period"] = rep.period;
        out["cycle_entry"] = rep.entry.to_bits();
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_census(int n, const std::string& out_path) {
    const auto rows = ruleset_census(n);
    std::ostringstream os;
    os << "ruleset,period,sequences\n";
    for (const auto& r : rows)
        os << r.ruleset << "," << r.period << "," << r.sequences << "\n";
    if (out_path.empty())
        std::cout << os.str();
    else
        write_file(out_path, os.str());
    return 0;
}

int run_compile(const std::string& in_path, const std::string& out_path) {
    const Cnf3 cnf = parse_dimacs(read_file(in_path));
    const Compilation comp = compile(cnf);
    write_file(out_path, serialize_fsca(comp.automaton));
    json manifest;
    manifest["n"] = comp.automaton.size();
    manifest["k"] = comp.steps;
    manifest["clauses"] = comp.clause_count;
    manifest["variables"] = comp.variable_count;
    manifest["assignment_slots"] = comp.slot_positions;
    manifest["target"] = comp.target.to_bits();
    write_file(out_path + ".json", manifest.dump(2) + "\n");
    std::cout << manifest.dump(2) << "\n";
    return 0;
}

int run_eval(const std::string& fsca_path, const std::string& assign_bits) {
    const Fsca a = parse_fsca(read_file(fsca_path));
    const json manifest = json::parse(read_file(fsca_path + ".json"));
    const long k = manifest["k"].get<long>();
    const BitVec target = BitVec::from_bits(manifest["target"].get<std::string>());
    const std::vector<int> slots = manifest["assignment_slots"].get<std::vector<int>>();
    if (assign_bits.size() != slots.size())
        throw std::invalid_argument("assignment must supply one bit per variable");
    BitVec s0(a.size());
    for (std::size_t j = 0; j < slots.size(); ++j)
        s0.set(static_cast<std::size_t>(slots[j]), assign_bits[j] == '1');
    Configuration c = initial_configuration(a, s0);
    c = run_fsca(a, std::move(c), k);
    json out;
    out["assignment"] = assign_bits;
    out["final_value"] = c.s.to_bits();
    out["satisfied"] = c.s == target;
    std::cout << out.dump(2) << "\n";
    return out["satisfied"].get<bool>() ? 0 : kExitVerification;
}

int run_stats(const std::string& in_path, const std::string& format,
              const std::string& tests, std::size_t group, std::size_t seqlen,
              const std::string& report_path) {
    const BitVec bits = import_bits(in_path, format == "ascii" ? BitFormat::Ascii
                                                               : BitFormat::Raw);
    if (seqlen == 0)
        seqlen = bits.size() / group;
    if (seqlen < 100)
        throw std::invalid_argument("sequences must be at least 100 bits");
    std::vector<BitVec> sequences;
    for (std::size_t g = 0; g + 1 <= group; ++g) {
        if ((g + 1) * seqlen > bits.size())
            break;
        BitVec s(seqlen);
        for (std::size_t i = 0; i < seqlen; ++i)
            s.set(i, bits.get(g * seqlen + i));
        sequences.push_back(std::move(s));
    }
    if (sequences.empty())
        throw std::invalid_argument("input shorter than one sequence");

    json report;
    report["input"] = in_path;
    report["sequences"] = sequences.size();
    report["sequence_bits"] = seqlen;
    std::istringstream ts(tests);
    std::string name;
    bool any_group_failure = false;
    while (std::getline(ts, name, ',')) {
        json entry;
        std::vector<double> pvals;
        if (name == "bm") {
            json lcs = json::array();
            for (const auto& s : sequences)
                lcs.push_back(linear_complexity_bm(s));
            entry["linear_complexity"] = lcs;
            report["tests"][name] = entry;
            continue;
        }
        for (const auto& s : sequences) {
            if (name == "monobit") {
                pvals.push_back(monobit(s));
            } else if (name == "block") {
                pvals.push_back(block_frequency(s));
            } else if (name == "runs") {
                const auto r = runs(s);
                if (r.applicable)
                    pvals.push_back(r.p);
            } else {
                throw std::invalid_argument("unknown test: " + name);
            }
        }
        entry["p_values"] = pvals;
        if (pvals.size() >= 20) {
            const auto verdict = group_analysis(pvals);
            entry["pass_fraction"] = verdict.pass_fraction;
            entry["proportion_threshold"] = verdict.proportion_threshold;
            entry["proportion_failure"] = verdict.proportion_failure;
            entry["uniformity_p"] = verdict.uniformity_p;
            entry["uniformity_failure"] = verdict.uniformity_failure;
            any_group_failure = any_group_failure || verdict.proportion_failure ||
                                verdict.uniformity_failure;
        }
        report["tests"][name] = entry;
    }
    const std::string text = report.dump(2) + "\n";
    if (report_path.empty())
        std::cout << text;
    else
        write_file(report_path, text);
    return any_group_failure ? kExitVerification : 0;
}

int run_selftest() {
    int failures = 0;
    auto check = [&failures](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << what << "\n";
        if (!ok) ++failures;
    };

    check(Rule(30).apply(1, 0, 0) == 1 && Rule(90).apply(1, 1, 1) == 0,
          "rule numbering");
    check(step(RuleVector::uniform(Rule(90), 5), BitVec::from_bits("00100")).to_bits() ==
              "01010",
          "rule 90 step");

    const auto h6 = predecessor_histogram(Rule(30), 6);
    check(h6 == std::map<int, long long>{{0, 12}, {1, 41}, {2, 10}, {3, 1}},
          "rule 30 predecessor histogram at n=6");

    const auto row = prior_table(Rule(30), 3).rows[0b010];
    check(row.one_counts == std::vector<int>{4, 1, 3, 2, 2} &&
              row.predecessors.size() == 4 && row.predecessors[0].to_bits() == "10101",
          "rule 30 window priors");

    bool alg1_ok = true;
    for (int num : {30, 45, 135}) {
        const RuleVector f = RuleVector::uniform(Rule(num), 7);
        for (std::uint64_t sv = 0; sv < 128 && alg1_ok; ++sv) {
            const BitVec s = BitVec::from_msb_word(sv, 7);
            alg1_ok = invert_toggle_rule(f, s) == brute_force_predecessors(f, s);
        }
    }
    check(alg1_ok, "toggle inversion equals brute force (n=7 sample)");

    const auto seeds = ms_recover(Rule(30), BitVec::from_bits("0101"), 7);
    bool has = false;
    for (const auto& s : seeds)
        has = has || s.to_bits() == "1100110";
    check(has, "seed recovery of the worked example");

    std::vector<Rule> t11(9, Rule(90));
    t11[8] = Rule(150);
    check(max_period(RuleVector(t11)) == 28, "max period of the 90*8+150 vector");

    const auto m90 = affine_map_of(RuleVector::uniform(Rule(90), 5));
    const auto [m4, s4] = gf2_power_sum(m90.m, 4);
    const auto [m3, s3] = gf2_power_sum(m90.m, 3);
    check(m4 == m90.m && s3.is_zero(), "rule 90 matrix identities at n=5");

    const Cnf3 cnf = parse_dimacs(
        "p cnf 5 4\n1 2 -3 0\n1 3 5 0\n-2 -4 5 0\n3 4 -5 0\n");
    const Compilation comp = compile(cnf);
    check(comp.automaton.size() == 12 && is_simple(comp.automaton),
          "formula compiles to twelve simple cells");
    check(evaluate(comp, {1, 0, 0, 0, 0}).satisfied &&
              !evaluate(comp, {0, 0, 0, 0, 0}).satisfied,
          "compiled formula evaluation");

    check(aes_sbox()[0] == 0x63 && aes_sbox()[255] == 0x16, "sbox endpoints");
    Chasm g = Chasm::initialize(BitVec(72));
    const auto golden = g.generate(4);
    check(golden == std::vector<std::uint8_t>{0x20, 0x24, 0xd5, 0x78},
          "generator golden vector for the zero seed");

    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cellular automaton PRG workbench"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate pseudorandom bytes");
    gen->add_option("--prg", gen_opt.prg, "generator family")->capture_default_str();
    gen->add_option("--n", gen_opt.n, "cell count (multiple of 4)");
    gen->add_option("--seed", gen_opt.seed_hex, "seed as 9n/4 hex digits");
    gen->add_option("--seed-file", gen_opt.seed_file, "raw file holding 9n seed bits");
    gen->add_option("--structured-seed", gen_opt.structured,
                    "structured seed pattern number (1..18)");
    gen->add_option("--bytes", gen_opt.bytes, "bytes to generate")->required();
    gen->add_option("--out", gen_opt.out, "output path")->required();
    gen->add_option("--format", gen_opt.format, "raw|ascii")->capture_default_str();
    gen->add_option("--state-in", gen_opt.state_in, "resume from a state dump");
    gen->add_option("--state-out", gen_opt.state_out, "write the final state dump");

    std::string step_rules, step_state, step_boundary = "cyclic";
    int step_t = 1;
    auto* step_cmd = app.add_subcommand("step", "advance an elementary CA");
    step_cmd->add_option("--rules", step_rules, "rule number or comma list")->required();
    step_cmd->add_option("--state", step_state, "state bits")->required();
    step_cmd->add_option("--boundary", step_boundary, "cyclic|null")->capture_default_str();
    step_cmd->add_option("--t", step_t, "steps")->capture_default_str();

    int inv_rule = 30, inv_hist_n = 0;
    std::string inv_state;
    bool inv_brute = false;
    auto* inv = app.add_subcommand("invert", "predecessors of a state");
    inv->add_option("--rule", inv_rule, "uniform rule")->required();
    inv->add_option("--state", inv_state, "state bits");
    inv->add_flag("--brute", inv_brute, "use the exhaustive oracle");
    inv->add_option("--histogram", inv_hist_n,
                    "predecessor-count histogram over all states of this size");

    int pr_rule = 30, pr_width = 3;
    std::string pr_out;
    auto* pr = app.add_subcommand("priors", "sliding-window preimage table as CSV");
    pr->add_option("--rule", pr_rule, "rule number")->required();
    pr->add_option("--width", pr_width, "pattern width")->capture_default_str();
    pr->add_option("--out", pr_out, "CSV output path (default: stdout)");

    std::string sm_rules, sm_out;
    int sm_len = 0;
    auto* sm = app.add_subcommand("seqmap", "center-sequence to seed map as CSV");
    sm->add_option("--rules", sm_rules, "comma rule list")->required();
    sm->add_option("--length", sm_len, "sequence length (default: cell count)");
    sm->add_option("--out", sm_out, "CSV output path (default: stdout)");

    std::string af_rules;
    auto* af = app.add_subcommand("affine", "print the transition matrix and offset");
    af->add_option("--rules", af_rules, "comma rule list of affine rules")->required();

    int rec_rule = 30, rec_n = 0;
    std::string rec_seq;
    bool rec_improved = false;
    auto* rec = app.add_subcommand("recover", "seed recovery from a temporal sequence");
    rec->add_option("--rule", rec_rule, "uniform toggle rule")->capture_default_str();
    rec->add_option("--sequence", rec_seq, "center temporal sequence bits")->required();
    rec->add_option("--n", rec_n, "cell count")->required();
    rec->add_flag("--improved", rec_improved, "backtracking variant");

    std::string per_rules, per_seed;
    bool per_max = false;
    auto* per = app.add_subcommand("period", "orbit period analysis");
    per->add_option("--rules", per_rules, "rule number or comma list")->required();
    per->add_option("--seed", per_seed, "seed bits");
    per->add_flag("--max", per_max, "maximum over all seeds");

    int census_n = 9;
    std::string census_out;
    auto* cen = app.add_subcommand("census", "period/sequence census over rule vectors");
    cen->add_option("--n", census_n, "cell count")->capture_default_str();
    cen->add_option("--out", census_out, "CSV output path");

    std::string cc_in, cc_out;
    auto* cc = app.add_subcommand("compile-cnf", "compile a 3-CNF into an FSCA");
    cc->add_option("--in", cc_in, "DIMACS input")->required();
    cc->add_option("--out", cc_out, "FSCA output path")->required();

    std::string ev_fsca, ev_assign;
    auto* ev = app.add_subcommand("eval-cnf", "run a compiled FSCA on an assignment");
    ev->add_option("--fsca", ev_fsca, "compiled FSCA path")->required();
    ev->add_option("--assign", ev_assign, "assignment bits, x1 first")->required();

    std::string st_in, st_tests = "monobit,block,runs", st_report, st_format = "raw";
    std::size_t st_group = 100, st_len = 0;
    auto* st = app.add_subcommand("stats", "statistical tests over a bit stream");
    st->add_option("--in", st_in, "input path")->required();
    st->add_option("--format", st_format, "raw|ascii")->capture_default_str();
    st->add_option("--tests", st_tests, "comma list: monobit,block,runs,bm")
        ->capture_default_str();
    st->add_option("--group", st_group, "sequences per group")->capture_default_str();
    st->add_option("--seq-bits", st_len, "bits per sequence (default: split evenly)");
    st->add_option("--report", st_report, "JSON report path (default: stdout)");

    auto* self = app.add_subcommand("selftest", "run the built-in reproductions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_gen(gen_opt);
        if (step_cmd->parsed())
            return run_step(step_rules, step_state, step_boundary, step_t);
        if (inv->parsed())
            return run_invert(inv_rule, inv_state, inv_brute, inv_hist_n);
        if (pr->parsed())
            return run_priors(pr_rule, pr_width, pr_out);
        if (sm->parsed())
            return run_seqmap(sm_rules, sm_len, sm_out);
        if (af->parsed())
            return run_affine(af_rules);
        if (rec->parsed())
            return run_recover(rec_rule, rec_seq, rec_n, rec_improved);
        if (per->parsed())
            return run_period(per_rules, per_seed, per_max);
        if (cen->parsed())
            return run_census(census_n, census_out);
        if (cc->parsed())
            return run_compile(cc_in, cc_out);
        if (ev->parsed())
            return run_eval(ev_fsca, ev_assign);
        if (st->parsed())
            return run_stats(st_in, st_format, st_tests, st_group, st_len, st_report);
        if (self->parsed())
            return run_selftest();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
