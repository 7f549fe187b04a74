#include "golodkit/ainf.hpp"
#include "golodkit/complex.hpp"
#include "golodkit/export.hpp"
#include "golodkit/golod.hpp"
#include "golodkit/ideal_io.hpp"
#include "golodkit/jollenbeck.hpp"
#include "golodkit/morse.hpp"
#include "golodkit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace golodkit;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kDecided = 0, kInputError = 1, kInconclusive = 2, kCapExceeded = 3, kVerifyFailed = 4 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    std::string inline_ideal;
    std::string field = "q";
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string output;
    std::string sort;
    bool unchecked = false;
};

std::string read_all(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path)
{
    if (path == "-")
        return read_all(std::cin);
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot open '" + path + "'");
    return read_all(f);
}

std::shared_ptr<const MonomialIdeal> load_ideal(const RunConfig& cfg)
{
    if (cfg.input.empty() == cfg.inline_ideal.empty())
        throw InputError("give exactly one of --input and --ideal");
    std::string text = cfg.inline_ideal.empty() ? read_file(cfg.input) : cfg.inline_ideal;
    auto src = parse_ideal_source(text);
    auto res = minimalize(src.vars, src.generators);
    if (!res.already_minimal)
        std::cerr << "warning: generators were not minimal; redundant ones dropped\n";
    MonomialIdeal ideal = res.ideal;
    if (cfg.sort == "lex")
        ideal = ideal.sorted_lex();
    else if (!cfg.sort.empty())
        throw InputError("unknown --sort '" + cfg.sort + "' (expected lex)");
    if (ideal.size() > max_generators())
        throw CapExceeded(ideal.size(), max_generators());
    if (ideal.size() > 14)
        std::cerr << "warning: " << ideal.size() << " generators; the Taylor complex has 2^" << ideal.size()
                  << " cells\n";
    return std::make_shared<const MonomialIdeal>(std::move(ideal));
}

Field field_of(const RunConfig& cfg)
{
    try {
        return Field::parse(cfg.field);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json header(const std::string& command, const RunConfig& cfg)
{
    return {{"tool", "golodkit"}, {"version", kVersion}, {"command", command}, {"seed", cfg.seed},
            {"field", field_of(cfg).name()}};
}

std::string text_header(const std::string& command, const RunConfig& cfg)
{
    return "# golodkit " + command + " seed=" + std::to_string(cfg.seed) + " field=" + field_of(cfg).name() + "\n";
}

void emit(const RunConfig& cfg, const std::string& body)
{
    if (cfg.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f)
        throw InputError("cannot write '" + cfg.output + "'");
    f << body;
}

void emit_json(const RunConfig& cfg, const std::string& command, json j)
{
    j["header"] = header(command, cfg);
    emit(cfg, j.dump(2) + "\n");
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (cfg.format == a)
            return;
    throw InputError("format '" + cfg.format + "' is not available for this command");
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

struct MatchOptions {
    std::string strategy = "lex";
    std::string construction = "greedy";
    std::string matching_file;
};

Strategy strategy_of(const std::string& s)
{
    try {
        return Strategy::parse(s);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

struct BuiltMatching {
    Matching matching;
    std::string construction;
    std::optional<JollenbeckReport> staged;
};

BuiltMatching build_matching(const ComplexPtr& t, const MorseGraph& g, const MatchOptions& o)
{
    if (!o.matching_file.empty()) {
        json j;
        try {
            j = json::parse(read_file(o.matching_file));
        } catch (const json::parse_error& e) {
            throw InputError(std::string("matching file: ") + e.what());
        }
        try {
            return {matching_from_json(j, t->ideal().size()), "given", std::nullopt};
        } catch (const std::exception& e) {
            throw InputError(std::string("matching file: ") + e.what());
        }
    }
    if (o.construction == "jollenbeck") {
        auto rep = jollenbeck_matching(t);
        Matching m = rep.matching;
        return {m, "jollenbeck", std::move(rep)};
    }
    if (o.construction != "greedy")
        throw InputError("unknown --construction '" + o.construction + "' (expected greedy or jollenbeck)");
    Strategy s = strategy_of(o.strategy);
    return {greedy_maximal_matching(g, s), "greedy:" + s.name(), std::nullopt};
}

void add_match_options(CLI::App* sub, MatchOptions& o)
{
    sub->add_option("--strategy", o.strategy, "lex, revlex or random:<seed>")->capture_default_str();
    sub->add_option("--construction", o.construction, "greedy or jollenbeck")->capture_default_str();
    sub->add_option("--matching", o.matching_file, "matching JSON file instead of a construction");
}

std::shared_ptr<const MorseReduction> reduce(const ComplexPtr& t, const Matching& m)
{
    MorseGraph g(t);
    auto v = validate_matching(g, m);
    if (!v.valid)
        throw InputError("not a Morse matching: " + v.message);
    return std::make_shared<const MorseReduction>(t, m, false);
}

// ---- commands ----------------------------------------------------------

int cmd_resolve(const RunConfig& cfg, const MatchOptions& mo, bool show_taylor)
{
    require_format(cfg, {"text", "json"});
    auto ideal = load_ideal(cfg);
    auto t = taylor(ideal, field_of(cfg), !cfg.unchecked);
    ComplexPtr out = t;
    std::string construction = "taylor";
    if (!show_taylor) {
        MorseGraph g(t);
        auto built = build_matching(t, g, mo);
        out = reduce(t, built.matching)->morse_complex();
        construction = built.construction;
        if (!is_minimal(*out).minimal)
            std::cerr << "warning: the Morse complex of " << construction << " is not minimal\n";
    }
    if (cfg.format == "json") {
        auto j = complex_to_json(*out);
        j["construction"] = construction;
        emit_json(cfg, "resolve", j);
        return kDecided;
    }
    std::ostringstream os;
    const auto& vars = ideal->vars();
    std::size_t r = ideal->size();
    os << text_header("resolve", cfg) << "construction: " << construction << "\n"
       << "ranks: " << join(out->rank_vector()) << "\n";
    for (CellId c : out->cells()) {
        os << cell_name(c, r) << " [" << out->multidegree(c).to_string(vars) << "] -> "
           << out->d(c).to_string(vars, r) << "\n";
    }
    emit(cfg, os.str());
    return kDecided;
}

int cmd_betti(const RunConfig& cfg, std::size_t order)
{
    require_format(cfg, {"text", "json", "csv"});
    auto ideal = load_ideal(cfg);
    auto t = taylor(ideal, field_of(cfg), !cfg.unchecked);
    auto ranks = tor_ranks(*t);
    std::vector<std::int64_t> serre;
    if (order > 0)
        serre = serre_bound_series(ranks, ideal->nvars(), order);
    if (cfg.format == "json") {
        json j = {{"schema", "golodkit.betti/1"}, {"ideal", ideal->to_string()}, {"tor_ranks", ranks}};
        if (order > 0)
            j["serre_bound"] = serre;
        emit_json(cfg, "betti", j);
    } else if (cfg.format == "csv") {
        emit(cfg, betti_csv(ranks));
    } else {
        std::string s = text_header("betti", cfg) + "(" + join(ranks) + ")\n";
        if (order > 0) {
            s += "serre bound:";
            for (auto c : serre)
                s += " " + std::to_string(c);
            s += "\n";
        }
        emit(cfg, s);
    }
    return kDecided;
}

int cmd_tor_table(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json", "csv"});
    auto ideal = load_ideal(cfg);
    auto t = taylor(ideal, field_of(cfg), !cfg.unchecked);
    auto table = tor_table(*t);
    const auto& vars = ideal->vars();
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& e : table)
            rows.push_back({{"degree", e.degree},
                            {"multidegree", e.multidegree.to_string(vars)},
                            {"exponents", e.multidegree.exponents()},
                            {"rank", e.rank}});
        emit_json(cfg, "tor-table", {{"schema", "golodkit.tor-table/1"}, {"entries", rows}});
        return kDecided;
    }
    std::ostringstream os;
    if (cfg.format == "csv")
        os << "degree,multidegree,rank\n";
    else
        os << text_header("tor-table", cfg);
    for (const auto& e : table) {
        if (cfg.format == "csv")
            os << e.degree << "," << e.multidegree.to_string(vars) << "," << e.rank << "\n";
        else
            os << e.degree << "  " << e.multidegree.to_string(vars) << "  " << e.rank << "\n";
    }
    emit(cfg, os.str());
    return kDecided;
}

int cmd_match(const RunConfig& cfg, const MatchOptions& mo, bool standard)
{
    require_format(cfg, {"text", "json"});
    auto ideal = load_ideal(cfg);
    auto t = taylor(ideal, field_of(cfg), !cfg.unchecked);
    MorseGraph g(t);
    auto built = build_matching(t, g, mo);
    auto v = validate_matching(g, built.matching);
    std::optional<std::vector<std::size_t>> ranks;
    bool minimal = false;
    if (v.valid) {
        auto mc = MorseReduction(t, built.matching, false).morse_complex();
        ranks = mc->rank_vector();
        minimal = is_minimal(*mc).minimal;
    }
    std::optional<StandardVerdict> sv;
    if (standard && v.valid)
        sv = is_standard_matching(t, built.matching);
    std::size_t r = ideal->size();

    if (cfg.format == "json") {
        json j = matching_to_json(*t, built.matching, built.construction);
        j["valid"] = v.valid;
        if (!v.valid) {
            j["failure"] = {{"kind", to_string(v.failure)}, {"message", v.message}};
            json cyc = json::array();
            for (CellId c : v.cycle)
                cyc.push_back(cell_name(c, r));
            j["failure"]["cycle"] = cyc;
        } else {
            j["critical_counts"] = *ranks;
            j["morse_complex_minimal"] = minimal;
        }
        if (built.staged) {
            j["staged"] = {{"valid_on_taylor", built.staged->valid_on_taylor},
                           {"maximal", built.staged->maximal},
                           {"stalled", built.staged->stalled},
                           {"detail", built.staged->detail}};
        }
        if (sv)
            j["standard"] = {{"standard", sv->standard}, {"violated_clause", sv->violated_clause},
                             {"detail", sv->detail}};
        emit_json(cfg, "match", j);
        return v.valid ? kDecided : kInputError;
    }
    std::ostringstream os;
    os << text_header("match", cfg) << "construction: " << built.construction << "\n";
    for (const auto& a : built.matching.arrows()) {
        os << cell_name(a.from, r) << " -> " << cell_name(a.to, r);
        if (a.stage)
            os << "  (stage " << a.stage << ", step " << a.substep << ")";
        os << "\n";
    }
    if (!v.valid) {
        os << "invalid: " << v.message << "\n";
        emit(cfg, os.str());
        return kInputError;
    }
    os << "critical:";
    for (CellId c : built.matching.critical(*t))
        os << " " << cell_name(c, r);
    os << "\ncritical counts: (" << join(*ranks) << ")\nminimal Morse complex: " << (minimal ? "yes" : "no") << "\n";
    if (built.staged && built.staged->stalled)
        os << "staged construction stalled: " << built.staged->detail << "\n";
    if (sv)
        os << "standard: " << (sv->standard ? "yes" : "no (clause " + std::to_string(sv->violated_clause) + ": " +
                                                       sv->detail + ")")
           << "\n";
    emit(cfg, os.str());
    return kDecided;
}

int cmd_ainf(RunConfig cfg, const MatchOptions& mo, int max_arity, bool char2, bool morse)
{
    require_format(cfg, {"text", "json", "csv"});
    if (char2)
        cfg.field = "f2";
    if (max_arity < 2)
        throw InputError("--max-arity must be at least 2");
    auto ideal = load_ideal(cfg);
    auto t = taylor(ideal, field_of(cfg), !cfg.unchecked);
    MorseGraph g(t);
    auto built = build_matching(t, g, mo);
    auto red = reduce(t, built.matching);
    MerkulovTransfer tr(red);
    const auto& vars = ideal->vars();
    std::size_t r = ideal->size();

    std::vector<AInfTable> tables;
    std::vector<ArityVerdict> verdicts;
    for (int n = 2; n <= max_arity; ++n) {
        tables.push_back(materialize(tr, n, morse));
        verdicts.push_back(check_arity_minimal(tr, n));
    }
    if (cfg.format == "csv") {
        std::string s;
        for (std::size_t k = 0; k < tables.size(); ++k)
            s += (k ? "\n" : "") + ainf_table_csv(tables[k], *ideal);
        emit(cfg, s);
        return kDecided;
    }
    if (cfg.format == "json") {
        json arr = json::array();
        for (std::size_t k = 0; k < tables.size(); ++k) {
            json tj = ainf_table_json(tables[k], *ideal);
            const auto& v = verdicts[k];
            tj["minimal"] = v.minimal;
            if (!v.minimal) {
                json off = json::array();
                for (CellId c : v.offender)
                    off.push_back(cell_name(c, r));
                tj["offender"] = {{"inputs", off}, {"value", v.value.to_string(vars, r)},
                                  {"unit_cell", cell_name(v.unit_cell, r)}};
            }
            arr.push_back(tj);
        }
        emit_json(cfg, "ainf", {{"schema", "golodkit.ainf/1"}, {"matching", built.construction}, {"tables", arr}});
        return kDecided;
    }
    std::ostringstream os;
    os << text_header("ainf", cfg) << "matching: " << built.construction << "\n";
    const char* sym = morse ? "nu" : "mu";
    for (std::size_t k = 0; k < tables.size(); ++k) {
        int n = tables[k].arity;
        os << "arity " << n << ":\n";
        for (const auto& [tuple, value] : tables[k].entries) {
            if (value.is_zero())
                continue;
            os << "  " << sym << n << "(";
            for (std::size_t i = 0; i < tuple.size(); ++i)
                os << (i ? "," : "") << cell_name(tuple[i], r);
            os << ") = " << value.to_string(vars, r) << "\n";
        }
        const auto& v = verdicts[k];
        os << "  minimal: " << (v.minimal ? "yes" : "no");
        if (!v.minimal)
            os << ", unit on " << cell_name(v.unit_cell, r);
        os << "\n";
    }
    emit(cfg, os.str());
    return kDecided;
}

int cmd_golod(const RunConfig& cfg, int max_arity, std::vector<std::string> strategies, bool no_staged,
              std::size_t order)
{
    require_format(cfg, {"text", "json"});
    auto ideal = load_ideal(cfg);
    GolodConfig gc;
    gc.field = field_of(cfg);
    gc.seed = cfg.seed;
    gc.max_arity = max_arity;
    gc.jollenbeck = !no_staged;
    if (strategies.empty()) {
        gc.strategies = default_strategies(cfg.seed);
    } else {
        gc.strategies.clear();
        for (const auto& s : strategies)
            gc.strategies.push_back(strategy_of(s));
    }
    auto rep = golod_decision(ideal, gc);
    std::vector<std::int64_t> serre;
    if (order > 0)
        serre = serre_bound_series(rep.tor_ranks, ideal->nvars(), order);
    if (cfg.format == "json") {
        json j = rep.to_json();
        j["header"] = header("golod", cfg);
        j["header"]["max_arity"] = max_arity;
        if (order > 0)
            j["serre_bound"] = serre;
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::string s = rep.to_text();
        if (order > 0) {
            s += "serre bound:";
            for (auto c : serre)
                s += " " + std::to_string(c);
            s += "\n";
        }
        emit(cfg, s);
    }
    return rep.exit_code();
}

int cmd_check(const RunConfig& cfg, bool gcd, bool generic, bool strongly)
{
    require_format(cfg, {"text", "json"});
    auto ideal = load_ideal(cfg);
    if (!gcd && !generic && !strongly)
        gcd = generic = strongly = true;
    const auto& vars = ideal->vars();
    auto gen = [&](std::size_t i) { return ideal->generator(i).to_string(vars); };
    json j = {{"schema", "golodkit.check/1"}, {"ideal", ideal->to_string()}};
    std::ostringstream os;
    os << text_header("check", cfg);
    if (gcd) {
        auto v = gcd_condition(*ideal);
        j["gcd_condition"] = {{"holds", v.holds}};
        os << "gcd condition: " << (v.holds ? "holds" : "fails");
        if (!v.holds) {
            j["gcd_condition"]["witness"] = {gen(v.first), gen(v.second)};
            os << " at (" << gen(v.first) << ", " << gen(v.second) << ")";
        }
        os << "\n";
    }
    if (generic) {
        auto v = is_generic(*ideal);
        j["generic"] = {{"holds", v.holds}};
        os << "generic: " << (v.holds ? "yes" : "no");
        if (!v.holds) {
            j["generic"]["witness"] = {gen(v.first), gen(v.second)};
            os << " (" << gen(v.first) << ", " << gen(v.second) << ")";
        }
        os << "\n";
    }
    if (strongly) {
        auto v = is_strongly_generic(*ideal);
        j["strongly_generic"] = {{"holds", v.holds}};
        os << "strongly generic: " << (v.holds ? "yes" : "no");
        if (!v.holds) {
            j["strongly_generic"]["witness"] = {{"variable", vars[v.variable]},
                                                {"generators", {gen(v.first), gen(v.second)}}};
            os << " (" << vars[v.variable] << " in " << gen(v.first) << ", " << gen(v.second) << ")";
        }
        os << "\n";
    }
    if (cfg.format == "json")
        emit_json(cfg, "check", j);
    else
        emit(cfg, os.str());
    return kDecided;
}

int cmd_lcm_lattice(const RunConfig& cfg)
{
    require_format(cfg, {"text", "json"});
    auto ideal = load_ideal(cfg);
    auto nodes = lcm_lattice_with_covers(*ideal);
    const auto& vars = ideal->vars();
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& n : nodes) {
            json covers = json::array();
            for (auto c : n.covers)
                covers.push_back(nodes[c].mu.to_string(vars));
            arr.push_back({{"lcm", n.mu.to_string(vars)}, {"exponents", n.mu.exponents()}, {"covers", covers}});
        }
        emit_json(cfg, "lcm-lattice", {{"schema", "golodkit.lcm-lattice/1"}, {"elements", arr}});
        return kDecided;
    }
    std::ostringstream os;
    os << text_header("lcm-lattice", cfg);
    for (const auto& n : nodes) {
        os << n.mu.to_string(vars) << " covers";
        if (n.covers.empty())
            os << " nothing";
        for (auto c : n.covers)
            os << " " << nodes[c].mu.to_string(vars);
        os << "\n";
    }
    emit(cfg, os.str());
    return kDecided;
}

int cmd_export_dot(const RunConfig& cfg, const MatchOptions& mo, bool empty)
{
    auto ideal = load_ideal(cfg);
    auto t = taylor(ideal, field_of(cfg), !cfg.unchecked);
    MorseGraph g(t);
    Matching m;
    if (!empty) {
        m = build_matching(t, g, mo).matching;
        auto v = validate_matching(g, m);
        if (!v.valid)
            throw InputError("not a Morse matching: " + v.message);
    }
    emit(cfg, "// golodkit export-dot seed=" + std::to_string(cfg.seed) + "\n" + export_dot(g, m));
    return kDecided;
}

int cmd_verify(const RunConfig& cfg, std::size_t ideals, std::size_t strands, std::size_t independence)
{
    require_format(cfg, {"text", "json"});
    PropertyReport rep;
    if (!cfg.input.empty() || !cfg.inline_ideal.empty()) {
        auto ideal = load_ideal(cfg);
        check_ideal_properties(*ideal, cfg.seed, rep);
        if (rep.ok())
            check_matching_independence(*ideal, cfg.seed, rep);
        rep.ideals = 1;
    } else {
        SuiteConfig sc;
        sc.seed = cfg.seed;
        sc.ideals = ideals;
        sc.strand_pairs = strands;
        sc.independence = independence;
        rep = run_property_suite(sc);
    }
    if (cfg.format == "json") {
        json fails = json::array();
        for (const auto& f : rep.failures)
            fails.push_back({{"property", f.property}, {"ideal", f.ideal}, {"seed", f.seed}, {"detail", f.detail}});
        emit_json(cfg, "verify",
                  {{"schema", "golodkit.verify/1"},
                   {"ok", rep.ok()},
                   {"ideals", rep.ideals},
                   {"strand_pairs", rep.strand_pairs},
                   {"independence_ideals", rep.independence_ideals},
                   {"checks", rep.checks},
                   {"failures", fails}});
    } else {
        std::ostringstream os;
        os << text_header("verify", cfg) << "ideals " << rep.ideals << ", strand pairs " << rep.strand_pairs
           << ", independence ideals " << rep.independence_ideals << "\n";
        for (const auto& [k, n] : rep.checks)
            os << "  " << k << ": " << n << "\n";
        for (const auto& f : rep.failures)
            os << "FAILED " << f.property << ": " << f.detail << "\n  reproduce with: golodkit verify --ideal '"
               << f.ideal << "' --seed " << f.seed << "\n";
        os << (rep.ok() ? "all properties hold\n" : "property violated\n");
        emit(cfg, os.str());
    }
    return rep.ok() ? kDecided : kVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("-i,--input", cfg.input, "ideal file (text grammar or JSON); - for stdin");
    sub->add_option("--ideal", cfg.inline_ideal, "ideal source given inline");
    sub->add_option("--field", cfg.field, "q, f2 or fp:<p>")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
    sub->add_option("--format", cfg.format, "text, json or csv")->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
    sub->add_option("--sort", cfg.sort, "re-order generators before indexing (lex)");
    sub->add_flag("--unchecked", cfg.unchecked, "skip the d^2 = 0 check on the Taylor complex");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal resolutions, A-infinity structures and Golod tests for monomial ideals"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    MatchOptions mo;
    int max_arity = 0;
    bool char2 = false, morse = false, taylor_only = false, standard = false, empty = false;
    bool gcd = false, generic = false, strongly = false, no_staged = false;
    std::size_t order = 0, ideals = 200, strands = 25, independence = 50;
    std::vector<std::string> strategies;

    auto* resolve = app.add_subcommand("resolve", "minimal free resolution as a Morse complex of the Taylor complex");
    add_common(resolve, cfg);
    add_match_options(resolve, mo);
    resolve->add_flag("--taylor", taylor_only, "print the Taylor complex itself");

    auto* betti = app.add_subcommand("betti", "Betti numbers from the Taylor complex");
    add_common(betti, cfg);
    betti->add_option("--order", order, "also print the Serre bound to this order");

    auto* tor = app.add_subcommand("tor-table", "multigraded Betti numbers");
    add_common(tor, cfg);

    auto* match = app.add_subcommand("match", "construct or validate a Morse matching");
    add_common(match, cfg);
    add_match_options(match, mo);
    match->add_flag("--standard", standard, "also test the standard-matching clauses");

    auto* ainf = app.add_subcommand("ainf", "transferred A-infinity operations");
    add_common(ainf, cfg);
    add_match_options(ainf, mo);
    ainf->add_option("--max-arity", max_arity, "highest arity (default 3)");
    ainf->add_flag("--char2", char2, "work over F2");
    ainf->add_flag("--morse", morse, "nu_n on the Morse complex instead of mu_n");

    auto* golod = app.add_subcommand("golod", "decide the Golod property");
    add_common(golod, cfg);
    golod->add_option("--max-arity", max_arity, "highest arity examined (default 4)");
    golod->add_option("--strategy", strategies, "greedy strategies (repeatable); default lex, revlex and two seeded random orders");
    golod->add_flag("--no-staged", no_staged, "skip the staged construction");
    golod->add_option("--order", order, "also print the Serre bound to this order");

    auto* check = app.add_subcommand("check", "combinatorial criteria");
    add_common(check, cfg);
    check->add_flag("--gcd", gcd, "gcd condition");
    check->add_flag("--generic", generic, "genericity");
    check->add_flag("--strongly-generic", strongly, "strong genericity");

    auto* lattice = app.add_subcommand("lcm-lattice", "lcm lattice with cover relations");
    add_common(lattice, cfg);

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the Morse graph");
    add_common(dot, cfg);
    add_match_options(dot, mo);
    dot->add_flag("--empty", empty, "no matching, just the graph");

    auto* verify = app.add_subcommand("verify", "randomized invariant suite, or all invariants of one ideal");
    add_common(verify, cfg);
    verify->add_option("--ideals", ideals, "random ideals for the Morse and transfer checks")->capture_default_str();
    verify->add_option("--strand-pairs", strands, "random (complex, ideal) pairs")->capture_default_str();
    verify->add_option("--independence", independence, "random ideals for strategy independence")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (*resolve)
            return cmd_resolve(cfg, mo, taylor_only);
        if (*betti)
            return cmd_betti(cfg, order);
        if (*tor)
            return cmd_tor_table(cfg);
        if (*match)
            return cmd_match(cfg, mo, standard);
        if (*ainf)
            return cmd_ainf(cfg, mo, max_arity ? max_arity : 3, char2, morse);
        if (*golod)
            return cmd_golod(cfg, max_arity ? max_arity : 4, strategies, no_staged, order);
        if (*check)
            return cmd_check(cfg, gcd, generic, strongly);
        if (*lattice)
            return cmd_lcm_lattice(cfg);
        if (*dot)
            return cmd_export_dot(cfg, mo, empty);
        if (*verify)
            return cmd_verify(cfg, ideals, strands, independence);
    } catch (const ParseError& e) {
        std::cerr << "error: parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: coefficient overflow: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
