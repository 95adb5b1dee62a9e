#include "paramodular/cli.hpp"

#include "paramodular/humbert.hpp"
#include "paramodular/jacobi.hpp"
#include "paramodular/numtheory.hpp"
#include "paramodular/report.hpp"
#include "paramodular/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

namespace paramodular {

namespace {

struct Options {
    std::string format = "text";
    std::uint64_t seed = 1;
    std::optional<long> bound;
    std::string out_path;

    long t = 0;
    long max_t = 250;
    long delta = 0;
    std::optional<long> d;
    bool oracle = false;
    std::string variant;
    std::string suite;
};

std::string join(const std::set<long>& s)
{
    std::string out;
    for (long v : s)
        out += (out.empty() ? "" : ";") + std::to_string(v);
    return out;
}

// "++-" -> "(+,+,-)"
std::string pattern_tuple(const EigenCharacter& eps)
{
    std::string p = eps.pattern(), out = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? "," : "") + std::string(1, p[i]);
    return out + ")";
}

void require_positive(long t, const char* what)
{
    if (t < 1)
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
}

RunReport cmd_xi(const Options& o)
{
    require_positive(o.t, "t");
    RunReport r{"xi", {{"t", o.t}, {"nu", static_cast<long>(nu(o.t))}}, {}, {}};
    Section& s = r.add_section("xi", {"d", "xi_d"});
    for (const XiElement& x : xi_group(o.t))
        s.rows.push_back({x.d, x.value});
    return r;
}

RunReport cmd_dims(const Options& o)
{
    require_positive(o.t, "t");
    RunReport r{"dims", {{"t", o.t}, {"dim_cusp", dim_cusp(o.t)}}, {}, {}};
    std::string gens;
    for (long p : prime_power_parts(o.t))
        gens += (gens.empty() ? "" : ",") + std::to_string(p);
    r.parameters.emplace_back("generators", gens);
    Section& tr = r.add_section("traces", {"d", "trace"});
    for (long d : unitary_divisors(o.t))
        tr.rows.push_back({d, trace_wd_full(o.t, d)});
    Section& dm = r.add_section("dims", {"pattern", "dim"});
    for (const EigenCharacter& eps : EigenCharacter::all(o.t))
        dm.rows.push_back({pattern_tuple(eps), dim_eigenspace(o.t, eps)});
    return r;
}

RunReport cmd_scan(const Options& o)
{
    require_positive(o.max_t, "--max-t");
    TrivialScan scan = trivial_eigenspace_scan(o.max_t);
    RunReport r{"scan-trivial", {{"max_t", o.max_t}}, {}, {}};
    Section& p = r.add_section("pairs", {"t", "minus", "plus", "dim"});
    for (const TrivialPair& x : scan.pairs)
        p.rows.push_back({x.t, x.minus_part, x.plus_part, x.dim});
    Section& z = r.add_section("zero_dimension", {"t"});
    for (long t : scan.zero_dimension)
        z.rows.push_back({t});
    Section& zt = r.add_section("pairs_zero_total", {"t", "minus", "plus"});
    for (const TrivialPair& x : scan.pairs_zero_total)
        zt.rows.push_back({x.t, x.minus_part, x.plus_part});
    return r;
}

RunReport cmd_humbert(const Options& o)
{
    require_positive(o.t, "t");
    require_positive(o.delta, "--delta");
    RunReport r{"humbert", {{"t", o.t}, {"delta", o.delta}, {"components", component_count(o.t, o.delta)}}, {}, {}};
    Section& s = r.add_section("components", {"ell", "f", "c", "b", "ta", "te"});
    for (const HumbertComponent& h : humbert_representatives(o.t, o.delta)) {
        std::string ell = "(";
        for (std::size_t i = 0; i < 5; ++i)
            ell += (i ? "," : "") + h.ell[i].get_str();
        s.rows.push_back({ell + ")", h.f, h.c, h.b, h.ta, h.te});
    }
    return r;
}

RunReport cmd_ramification(const Options& o)
{
    require_positive(o.t, "t");
    const bool squarefree = is_squarefree(o.t);
    if (!squarefree && (!o.oracle || o.d))
        throw std::invalid_argument("the closed-form rule needs square-free t; use --oracle alone for other t");
    RunReport r{"ramification", {{"t", o.t}}, {}, {}};
    if (!squarefree) {
        // No closed form to compare with: report the survey only.
        const long bound = o.bound ? *o.bound : 10 * o.t;
        require_positive(bound, "--bound");
        SurveyReport survey = reflection_survey(o.t, bound);
        r.parameters.emplace_back("bound", bound);
        r.parameters.emplace_back("reflections", survey.reflections);
        Section& v = r.add_section("survey", {"d", "discriminants", "a", "b", "c"});
        for (const auto& [d, set] : survey.per_coset) {
            const SurveyHit& h = survey.first_hit.at(d);
            v.rows.push_back({d, join(set), h.a, h.b, h.c});
        }
        return r;
    }
    Section& s = r.add_section("divisors", {"d", "xi_d", "discriminants"});
    if (o.d) {
        r.parameters.emplace_back("d", *o.d);
        s.rows.push_back({*o.d, xi_element(o.t, *o.d).value, join(ramification_divisor(o.t, *o.d))});
    } else {
        RamificationReport rep = ramification_total(o.t);
        r.parameters.emplace_back("distinct", rep.distinct);
        for (const RamificationEntry& e : rep.entries)
            s.rows.push_back({e.d, xi_element(o.t, e.d).value, join(e.discriminants)});
    }
    if (o.oracle) {
        const long bound = o.bound ? *o.bound : 10 * o.t;
        require_positive(bound, "--bound");
        SurveyReport survey = reflection_survey(o.t, bound);
        const bool ok = oracle_consistent(o.t, survey);
        r.parameters.emplace_back("bound", bound);
        r.parameters.emplace_back("reflections", survey.reflections);
        r.parameters.emplace_back("oracle_consistent", ok);
        Section& v = r.add_section("survey", {"d", "discriminants", "a", "b", "c"});
        for (const auto& [d, set] : survey.per_coset) {
            const SurveyHit& h = survey.first_hit.at(d);
            v.rows.push_back({d, join(set), h.a, h.b, h.c});
        }
        SuiteVerdict verdict{"lemma3-8-oracle", 1, ok, ""};
        if (!ok)
            for (long d : divisors(o.t))
                if (ramification_divisor(o.t, d) != survey.per_coset[d]) {
                    verdict.witness = "d=" + std::to_string(d);
                    break;
                }
        r.suites.push_back(verdict);
    }
    return r;
}

RunReport cmd_hilbert(const Options& o)
{
    require_positive(o.t, "t");
    Variant v = parse_variant(o.variant);
    RunReport r{"hilbert-check", {{"t", o.t}, {"variant", to_string(v)}, {"seed", static_cast<long>(o.seed)}}, {}, {}};
    r.suites = suite_hilbert(o.t, v, o.seed);
    return r;
}

RunReport cmd_verify(const Options& o)
{
    RunReport r{"verify", {{"suite", o.suite}, {"seed", static_cast<long>(o.seed)}}, {}, {}};
    if (o.bound)
        r.parameters.emplace_back("bound", *o.bound);
    auto append = [&r](std::vector<SuiteVerdict> v) {
        for (auto& s : v)
            r.suites.push_back(std::move(s));
    };
    const bool all = o.suite == "all";
    if (all || o.suite == "lemma1-1")
        append(suite_psi_image(o.seed));
    if (all || o.suite == "prop1-2-diagram")
        append(suite_quadric_diagram(o.seed));
    if (all || o.suite == "thm2-1")
        append(suite_lift_eigen(o.seed, o.bound ? *o.bound : 8));
    if (all || o.suite == "lemma3-8-oracle")
        append(suite_ramification_oracle(30, o.bound));
    if (all || o.suite == "brasch")
        append(suite_brasch());
    if (all || o.suite == "hilbert")
        append(suite_hilbert_all(o.seed));
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact computations with the paramodular group and its extensions", "paramodular_cli"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", o.seed, "Random seed for sampled suites");
    app.add_option("--bound", o.bound, "Search bound (surveys default to 10 t)");
    app.add_option("--out", o.out_path, "Write the report to this file");

    auto* xi = app.add_subcommand("xi", "The group Xi(t) and its xi_d table");
    xi->add_option("t", o.t)->required();
    auto* dims = app.add_subcommand("dims", "Traces of W_d and eigenspace dimensions of J_{3,t}^cusp");
    dims->add_option("t", o.t)->required();
    auto* scan = app.add_subcommand("scan-trivial", "Trivial eigenspaces for t with two prime factors");
    scan->add_option("--max-t", o.max_t, "Largest index scanned");
    auto* hum = app.add_subcommand("humbert", "Components of the Humbert surface H_delta");
    hum->add_option("t", o.t)->required();
    hum->add_option("--delta", o.delta)->required();
    auto* ram = app.add_subcommand("ramification", "Ramification divisor of A_t* -> A_t");
    ram->add_option("t", o.t)->required();
    ram->add_option("--d", o.d, "Single divisor d | t");
    ram->add_flag("--oracle", o.oracle, "Cross-check against a brute-force reflection survey");
    auto* hil = app.add_subcommand("hilbert-check", "Identity suite for the Hilbert modular embedding");
    hil->add_option("t", o.t)->required();
    hil->add_option("--variant", o.variant)->required()->check(
        CLI::IsMember({"H4t_1mod4", "Ht_1mod4", "H4t_other"}));
    auto* ver = app.add_subcommand("verify", "Named property suites");
    ver->add_option("suite", o.suite)->required()->check(CLI::IsMember(
        {"lemma1-1", "thm2-1", "prop1-2-diagram", "lemma3-8-oracle", "brasch", "hilbert", "all"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_invalid_input;
    }

    RunReport report;
    try {
        if (*xi)
            report = cmd_xi(o);
        else if (*dims)
            report = cmd_dims(o);
        else if (*scan)
            report = cmd_scan(o);
        else if (*hum)
            report = cmd_humbert(o);
        else if (*ram)
            report = cmd_ramification(o);
        else if (*hil)
            report = cmd_hilbert(o);
        else
            report = cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }

    const std::string bytes = serialize(report, parse_format(o.format));
    if (o.out_path.empty()) {
        out << bytes;
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << o.out_path << "\n";
            return exit_invalid_input;
        }
        f << bytes;
    }
    return report.all_pass() ? exit_ok : exit_verification_failure;
}

} // namespace paramodular
