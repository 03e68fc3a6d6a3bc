// fhkit: command-line front end. Exit codes: 0 success, 1 verification
// failure, 2 usage error, 10-23 the structured error classes of fh::ErrorCode.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fhkit/errors.hpp"
#include "fhkit/hecke.hpp"
#include "fhkit/io.hpp"
#include "fhkit/koszul.hpp"
#include "fhkit/ktheory.hpp"
#include "fhkit/localization.hpp"
#include "fhkit/sheafcoh.hpp"
#include "fhkit/verify.hpp"

using namespace fh;
using nlohmann::json;

namespace {

constexpr int kDefaultCutoff = 8;

int default_cutoff() {
    const char* env = std::getenv("FHKIT_CUTOFF");
    if (!env || !*env) return kDefaultCutoff;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, std::string("FHKIT_CUTOFF is not an integer: ") + env);
    }
}

json weights_json(const Weights& w) {
    return {{"q", render_rational(w.wq)}, {"t", render_rational(w.wt)}, {"a", render_rational(w.wa)}};
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "not an integer list: " + s);
        }
    return out;
}

int infer_strands(const std::string& braid) {
    int n = 1;
    std::stringstream ss(braid);
    std::string tok;
    while (ss >> tok) {
        std::size_t i = tok.find_first_of("0123456789");
        if (i != std::string::npos) n = std::max(n, std::atoi(tok.c_str() + i) + 1);
    }
    return n;
}

FactoredRat maybe_subst(const FactoredRat& x, const std::string& subst) {
    return subst.empty() ? x : x.specialize(parse_subst(subst));
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

json koszul_entries(const std::vector<KoszulEntry>& xs) {
    json out = json::array();
    for (const auto& e : xs) out.push_back({{"degree", e.degree}, {"weight", to_json(e.weight)}, {"dim", e.dim}});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flag Hilbert scheme and HOMFLY toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    // homfly
    auto* homfly_cmd = app.add_subcommand("homfly", "Markov trace of a braid closure");
    std::string braid, subst;
    int strands = 0;
    homfly_cmd->add_option("--braid", braid, "braid word, e.g. \"s1 s2 -s1\"")->required();
    homfly_cmd->add_option("--strands", strands, "number of strands (default: from the word)");
    homfly_cmd->add_option("--subst", subst, "substitution applied to the result, e.g. \"a=-a,t=1/q\"");
    homfly_cmd->add_flag("--json", as_json);

    // hhh
    auto* hhh_cmd = app.add_subcommand("hhh", "Knot homology Poincare series");
    std::string family;
    int k = 0;
    TorusOptions topt;
    hhh_cmd->add_option("--family", family, "torus3, torus2, figure8 or two-strand-hom")
        ->required()
        ->check(CLI::IsMember({"torus3", "torus2", "figure8", "two-strand-hom"}));
    hhh_cmd->add_option("--k", k, "twist parameter");
    hhh_cmd->add_flag("--a-graded", topt.a_graded);
    hhh_cmd->add_flag("--unreduced", topt.unreduced);
    hhh_cmd->add_option("--subst", subst);
    hhh_cmd->add_flag("--json", as_json);

    // chart-series
    auto* chart_cmd = app.add_subcommand("chart-series", "Poincare series of a chart");
    std::string tableau, flavor = "C", specialize, chart_family;
    int n = 0, expand = -1;
    bool exterior = false;
    auto* tab_opt = chart_cmd->add_option("--tableau", tableau, "e.g. \"[[1,2],[3]]\"");
    auto* fam_opt = chart_cmd->add_option("--family", chart_family, "toeplitz or antisym")->excludes(tab_opt);
    chart_cmd->add_option("--n", n)->needs(fam_opt);
    chart_cmd->add_option("--flavor", flavor, "C2, C or point")->check(CLI::IsMember({"C2", "C", "point"}));
    chart_cmd->add_option("--specialize", specialize, "e.g. t=1/q");
    chart_cmd->add_flag("--exterior", exterior, "include the exterior a-factor");
    chart_cmd->add_option("--expand", expand, "expand in the chart grading up to this degree");
    chart_cmd->add_flag("--json", as_json);

    // magic-sum
    auto* magic_cmd = app.add_subcommand("magic-sum", "Fixed-point sum over standard tableaux");
    std::string twists, variant = "as-printed";
    bool swap_zeta = false, no_a = false;
    magic_cmd->add_option("--n", n)->required();
    magic_cmd->add_option("--twists", twists, "comma-separated a_1..a_n")->required();
    magic_cmd->add_option("--variant", variant, "as-printed, drop-first-denominator or reduced");
    magic_cmd->add_flag("--swap-zeta", swap_zeta);
    magic_cmd->add_flag("--no-a-grading", no_a);
    magic_cmd->add_flag("--json", as_json);

    // ktheory-push
    auto* push_cmd = app.add_subcommand("ktheory-push", "Push a class down one step of the flag tower");
    std::string klass = "1";
    bool with_markov = false;
    push_cmd->add_option("--n", n)->required();
    push_cmd->add_option("--class", klass, "class in l (= L_{n+1}), r1..rn, q, t, a");
    push_cmd->add_flag("--markov", with_markov, "also print the three stabilization factors");
    push_cmd->add_flag("--json", as_json);

    // ktheory-verify
    auto* kver_cmd = app.add_subcommand("ktheory-verify", "K-theory identities");
    std::string ksuite = "all";
    unsigned seed = 2024;
    kver_cmd->add_option("--suite", ksuite)->check(CLI::IsMember({"push", "serre", "markov", "tower", "all"}));
    kver_cmd->add_option("--seed", seed);
    kver_cmd->add_flag("--json", as_json);

    // koszul
    auto* koszul_cmd = app.add_subcommand("koszul", "First page of the Koszul complex of a section");
    std::string chart = "toeplitz";
    int N = 0, Mv = 0, cutoff = -1;
    auto* ktab = koszul_cmd->add_option("--tableau", tableau);
    koszul_cmd->add_option("--chart", chart, "toeplitz or antisym")->excludes(ktab);
    koszul_cmd->add_option("--n", n);
    koszul_cmd->add_option("--N", N)->required();
    koszul_cmd->add_option("--M", Mv)->required();
    koszul_cmd->add_option("--cutoff", cutoff, "grading cutoff (default $FHKIT_CUTOFF or 8)");
    koszul_cmd->add_flag("--json", as_json);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Cross-verification suites");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"hecke", "projectors", "two-strand", "three-strand", "ktheory", "charts", "koszul", "all"}));
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (homfly_cmd->parsed()) {
            int s = strands > 0 ? strands : infer_strands(braid);
            BraidWord w = parse_braid(braid, s);
            FactoredRat h = maybe_subst(homfly(w), subst);
            emit(as_json, {{"braid", to_string(w)}, {"strands", s}, {"homfly", to_json(h)}}, render(h));
        } else if (hhh_cmd->parsed()) {
            FactoredRat h;
            if (family == "torus3")
                h = torus_knot_hhh(3, k, topt);
            else if (family == "torus2")
                h = torus_knot_hhh(2, k, topt);
            else if (family == "figure8")
                h = figure_eight_hhh();
            else
                h = two_strand_hom_series(k);
            h = maybe_subst(h, subst);
            emit(as_json, {{"family", family}, {"k", k}, {"series", to_json(h)}}, render(h));
        } else if (chart_cmd->parsed()) {
            if (tableau.empty() && chart_family.empty()) fail(ErrorCode::ParseError, "give --tableau or --family");
            StandardTableau t = !tableau.empty() ? parse_tableau(tableau) : family_tableau(parse_family(chart_family), n);
            ChartFlavor f = parse_flavor(flavor);
            FactoredRat s = exterior ? endomorphism_series(t, f) : chart_series(t, f);
            s = maybe_subst(s, specialize);
            json j = {{"tableau", to_string(t)}, {"flavor", flavor_name(f)}, {"series", to_json(s)}};
            std::string text = render(s);
            if (expand >= 0) {
                Weights w = chart_weights(chart_presentation(t));
                GradedSeries g = s.expand(w, expand);
                j["expansion"] = to_json(g);
                text += "\n" + render(g);
            }
            emit(as_json, j, text);
        } else if (magic_cmd->parsed()) {
            MagicOptions opt{!no_a, parse_variant(variant), swap_zeta};
            MagicSumReport r = magic_sum(n, parse_int_list(twists), opt);
            json terms = json::array(), poles = json::array();
            std::ostringstream text;
            for (const auto& t : r.terms) {
                terms.push_back({{"tableau", to_string(t.tableau)}, {"value", to_json(t.value)}});
                text << to_string(t.tableau) << ": " << render(t.value) << "\n";
            }
            for (const auto& p : r.poles) {
                poles.push_back({{"tableau", to_string(p.tableau)}, {"factor", p.factor}});
                text << to_string(p.tableau) << ": UncancelledPole at " << p.factor << "\n";
            }
            if (r.total) text << "total: " << render(*r.total);
            json j = {{"n", n}, {"twists", parse_int_list(twists)}, {"variant", variant_name(opt.variant)},
                      {"terms", terms}, {"poles", poles}, {"total", r.total ? to_json(*r.total) : json(nullptr)}};
            std::string out = text.str();
            if (!out.empty() && out.back() == '\n') out.pop_back();
            emit(as_json, j, out);
            if (!r.poles.empty()) return static_cast<int>(ErrorCode::UncancelledPole);
        } else if (push_cmd->parsed()) {
            if (n < 0 || n > 3) fail(ErrorCode::UnsupportedN, "ktheory-push supports n = 0..3");
            FactoredRat c = parse_expr(klass);
            const int ell = slot_l(n + 1);
            if (n > 0 && !c.involves(ell)) {
                Subst s;
                s.map_var(slot_l(1), 1, Monomial::var(ell));
                c = c.specialize(s);
            }
            FactoredRat p = push(c, n);
            json j = {{"n", n}, {"class", to_json(c)}, {"push", to_json(p)}};
            std::string text = render(p);
            if (with_markov) {
                MarkovFactors m = markov_factors(std::max(n, 1));
                j["markov"] = {{"bare", to_json(m.bare)}, {"positive", to_json(m.positive)}, {"negative", to_json(m.negative)}};
                text += "\nbare: " + render(m.bare) + "\npositive: " + render(m.positive) + "\nnegative: " + render(m.negative);
            }
            emit(as_json, j, text);
        } else if (kver_cmd->parsed()) {
            VerifyReport r = run_verify("ktheory", seed).front();
            if (ksuite != "all") {
                std::vector<VerifyItem> keep;
                for (const auto& i : r.items)
                    if (i.name.rfind(ksuite + ":", 0) == 0) keep.push_back(i);
                r.items = keep;
            }
            std::string text = render(r);
            if (!text.empty() && text.back() == '\n') text.pop_back();
            emit(as_json, to_json(r), text);
            return r.ok() ? 0 : 1;
        } else if (koszul_cmd->parsed()) {
            Chart c = tableau.empty() ? build_chart(parse_family(chart), n) : build_chart(parse_tableau(tableau));
            int cut = cutoff >= 0 ? cutoff : default_cutoff();
            KoszulTable t = koszul_homology(c, N, Mv, cut);
            std::vector<ChartPoly> sec = section(c, N, Mv);
            json secj = json::array();
            std::ostringstream text;
            text << "chart " << chart_kind_name(c.kind) << " " << to_string(c.tableau) << ", N=" << N << ", M=" << Mv
                 << ", cutoff " << cut << " (first page only)\nsection:";
            for (const auto& s : sec) {
                secj.push_back(render(c, s));
                text << " " << render(c, s);
            }
            text << "\nd^2 = 0: " << (t.d_squared_zero ? "yes" : "no") << ", Euler check: " << (t.euler_matches ? "yes" : "no")
                 << "\nhomology:";
            if (t.homology.empty()) text << " 0";
            for (const auto& e : t.homology)
                text << "\n  H_" << e.degree << " " << render_monomial(e.weight) << ": " << e.dim;
            json j = {{"chart", chart_kind_name(c.kind)},
                      {"tableau", to_string(c.tableau)},
                      {"N", N},
                      {"M", Mv},
                      {"cutoff", cut},
                      {"grading", weights_json(t.grading)},
                      {"first_page_only", true},
                      {"section", secj},
                      {"d_squared_zero", t.d_squared_zero},
                      {"euler_matches", t.euler_matches},
                      {"chains", koszul_entries(t.chains)},
                      {"homology", koszul_entries(t.homology)}};
            emit(as_json, j, text.str());
        } else if (verify_cmd->parsed()) {
            std::vector<VerifyReport> rs = run_verify(suite, seed);
            bool ok = true;
            json j = json::array();
            std::string text;
            for (const auto& r : rs) {
                ok = ok && r.ok();
                j.push_back(to_json(r));
                text += render(r);
            }
            if (!text.empty() && text.back() == '\n') text.pop_back();
            emit(as_json, {{"seed", seed}, {"ok", ok}, {"suites", j}}, text);
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
        return static_cast<int>(e.code());
    }
    return 0;
}
