#include "fhkit/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "fhkit/calibration.hpp"
#include "fhkit/errors.hpp"
#include "fhkit/hecke.hpp"
#include "fhkit/io.hpp"
#include "fhkit/koszul.hpp"
#include "fhkit/ktheory.hpp"
#include "fhkit/localization.hpp"
#include "fhkit/sheafcoh.hpp"
#include "fhkit/skein.hpp"

namespace fh {

namespace {

constexpr std::size_t kMaxFailures = 20;

FactoredRat om(const Monomial& m) { return FactoredRat::one_minus(m); }
FactoredRat M(int a, int b) { return FactoredRat(qt(a, b)); }

FactoredRat degree_part(const EquivSeries& s, int i) {
    auto it = s.find(i);
    return it == s.end() ? FactoredRat() : it->second;
}

std::string braid_label(const BraidWord& w) {
    return "n=" + std::to_string(w.strands) + " [" + to_string(w) + "]";
}

VerifyItem item(const std::string& name) {
    VerifyItem it;
    it.name = name;
    return it;
}

// hecke -------------------------------------------------------------------

VerifyReport hecke_suite(unsigned seed) {
    VerifyReport r{"hecke", {}, {}};
    std::mt19937 rng(seed);
    const FactoredRat d = trace_symbol_to_rat(trace_symbol_poly(1));
    VerifyItem conj = item("trace is invariant under conjugation");
    VerifyItem incl = item("inclusion multiplies the trace by (1-a)/(v-v^-1)");
    VerifyItem pos = item("positive stabilization preserves the trace");
    VerifyItem neg = item("negative stabilization multiplies the trace by a");
    for (int i = 0; i < 500; ++i) {
        int n = 1 + i % 4;
        BraidWord w = random_braid(n, 8, rng), g = random_braid(n, 4, rng);
        FactoredRat chi = homfly(w);
        conj.check_eq(braid_label(w) + " by [" + to_string(g) + "]", homfly(g * w * g.inverse()), chi);
        HeckeElement up = from_braid(w).include();
        incl.check_eq(braid_label(w), markov_trace(up), d * chi);
        pos.check_eq(braid_label(w), markov_trace(up * HeckeElement::generator(n + 1, n)), chi);
        neg.check_eq(braid_label(w), markov_trace(up * HeckeElement::generator_inverse(n + 1, n)),
                     FactoredRat(a_pow(1)) * chi);
    }
    VerifyItem rel = item("quadratic and braid relations");
    const LaurentPoly g = v_minus_inv();
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i) {
            auto s = HeckeElement::generator(n, i);
            rel.check(s * s == HeckeElement::identity(n) + s * g, "n=" + std::to_string(n) + " s" + std::to_string(i) + "^2");
            if (i + 1 < n) {
                auto t = HeckeElement::generator(n, i + 1);
                rel.check(s * t * s == t * s * t, "n=" + std::to_string(n) + " braid relation at " + std::to_string(i));
            }
        }
    VerifyItem skein = item("trace equals the skein recursion");
    for (int k = 0; k <= 15; ++k) {
        SkeinOracle o(2);
        BraidWord w = torus_braid(2, k);
        skein.check_eq("T(2," + std::to_string(k) + ")", homfly(w), trace_symbol_to_rat(o.eval(w)));
    }
    SkeinOracle three(3);
    for (int k = 0; k <= 10; ++k) {
        BraidWord w = torus_braid(3, k);
        skein.check_eq("T(3," + std::to_string(k) + ")", homfly(w), trace_symbol_to_rat(three.eval(w)));
    }
    for (int i = 0; i < 40; ++i) {
        int n = 2 + i % 3;
        SkeinOracle o(n);
        BraidWord w = random_braid(n, 7, rng);
        skein.check_eq(braid_label(w), homfly(w), trace_symbol_to_rat(o.eval(w)));
    }
    r.items = {conj, incl, pos, neg, rel, skein};
    return r;
}

// projectors --------------------------------------------------------------

VerifyReport projector_suite() {
    VerifyReport r{"projectors", {}, {}};
    VerifyItem idem = item("P_T^2 = P_T"), orth = item("P_T P_S = 0 for T != S"), comp = item("sum of P_T is 1");
    VerifyItem jm = item("L_k P_T = q^{c(k)} P_T"), ft = item("FT_k P_T = q^{c(1)+...+c(k)} P_T");
    VerifyItem tr = item("chi(P_T) = (-v)^n q^{n(lambda)} prod(1 - a q^-c)/prod(1 - q^h)");
    VerifyItem br = item("P_T = sum of P_T' over addable boxes");
    for (int n = 1; n <= 4; ++n) {
        std::vector<Idempotent> ps;
        for (const StandardTableau& t : all_syt(n)) ps.push_back(young_idempotent(t));
        HeckeElement total(n);
        LaurentPoly all_den(1);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const Idempotent& p = ps[i];
            const std::string where = to_string(p.tableau);
            idem.check(p.numerator * p.numerator == p.numerator * p.denominator, where);
            for (std::size_t j = 0; j < ps.size(); ++j)
                if (i != j) orth.check((p.numerator * ps[j].numerator).is_zero(), where + " * " + to_string(ps[j].tableau));
            int csum = 0;
            for (int k = 1; k <= n; ++k) {
                int c = content(p.tableau.box(k));
                csum += c;
                if (k >= 2)
                    jm.check(from_braid(jucys_murphy(k, n)) * p.numerator == p.numerator * LaurentPoly(q_pow(c)),
                             where + " k=" + std::to_string(k));
                ft.check(from_braid(full_twist(k, n)) * p.numerator == p.numerator * LaurentPoly(q_pow(csum)),
                         where + " k=" + std::to_string(k));
            }
            Partition shape = p.tableau.shape();
            tr.check_eq(where, idempotent_trace(p), projector_trace_normalization(shape) * projector_trace_formula(shape));
            LaurentPoly others(1);
            for (std::size_t j = 0; j < ps.size(); ++j)
                if (j != i) others *= ps[j].denominator;
            total += p.numerator * others;
            all_den *= p.denominator;
        }
        comp.check(total == HeckeElement::scalar(n, all_den), "n=" + std::to_string(n));
    }
    for (int n = 1; n <= 3; ++n)
        for (const StandardTableau& t : all_syt(n)) {
            Idempotent p = young_idempotent(t);
            std::vector<Idempotent> kids;
            for (const Box& b : corners(t.shape()).addable) kids.push_back(young_idempotent(t.extend(b)));
            LaurentPoly prod(1);
            for (const auto& k : kids) prod *= k.denominator;
            HeckeElement rhs(n + 1);
            for (std::size_t i = 0; i < kids.size(); ++i) {
                LaurentPoly others(1);
                for (std::size_t j = 0; j < kids.size(); ++j)
                    if (j != i) others *= kids[j].denominator;
                rhs += kids[i].numerator * others;
            }
            br.check(p.numerator.include() * prod == rhs * p.denominator, to_string(t));
        }
    r.items = {idem, orth, comp, jm, ft, tr, br};
    return r;
}

// two-strand --------------------------------------------------------------

VerifyReport two_strand_suite() {
    VerifyReport r{"two-strand", {}, {}};
    VerifyItem hom = item("Hom series equals the sheaf side");
    for (int k = -6; k <= 6; ++k) {
        EquivSeries h = fh2_cohomology_from_components(k);
        FactoredRat sheaf = k >= 0 ? degree_part(h, 0) : FactoredRat(Monomial::qta(0, 1)) * degree_part(h, 1);
        hom.check_eq("k=" + std::to_string(k), two_strand_hom_series(k), sheaf);
    }
    VerifyItem comp = item("cohomology table equals the component sequence");
    for (int k = -8; k <= 8; ++k)
        for (bool reduced : {true, false}) {
            EquivSeries a = fh2_cohomology(k, reduced), b = fh2_cohomology_from_components(k, reduced);
            std::string where = "k=" + std::to_string(k) + (reduced ? " reduced" : " unreduced");
            comp.check_eq(where, euler_characteristic(a), euler_characteristic(b));
            comp.check(a == b, where + " by degree");
        }
    VerifyItem decat = item("decategorifies to the trace of sigma^(2k+1)");
    DecatReport d = decategorification_check(2, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    for (const DecatInstance& i : d.instances)
        decat.check(i.ok, "k=" + std::to_string(i.k), render(i.specialized), render(i.normalized_homfly));
    decat.check(d.framing && d.framing->second == calibration::framing(2) && d.framing->first == 1, "framing",
                d.framing ? render_monomial(d.framing->second) : "none", render_monomial(calibration::framing(2)));
    r.items = {hom, comp, decat};
    return r;
}

// three-strand ------------------------------------------------------------

VerifyReport three_strand_suite() {
    VerifyReport r{"three-strand", {}, {}};
    VerifyItem closed = item("torus knot series match the closed sums");
    for (int m = 0; m <= 5; ++m) {
        FactoredRat k1, k2;
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j <= 3 * m - 3 * i; ++j) k1 += M(i + j, 3 * m - 2 * i - j);
            for (int j = 0; j <= 3 * m - 3 * i + 1; ++j) k2 += M(i + j, 3 * m - 2 * i - j + 1);
        }
        closed.check_eq("k=" + std::to_string(3 * m + 1), torus_knot_hhh(3, 3 * m + 1), k1);
        closed.check_eq("k=" + std::to_string(3 * m + 2), torus_knot_hhh(3, 3 * m + 2), k2);
    }
    VerifyItem fig = item("figure eight equals (1+a/q)(1+a/t) + a(qt)^(1/2)");
    FactoredRat ext = FactoredRat(LaurentPoly(1) + LaurentPoly(qt(-1, 0) * a_pow(1))) *
                      FactoredRat(LaurentPoly(1) + LaurentPoly(qt(0, -1) * a_pow(1)));
    FactoredRat odd = FactoredRat(Monomial::qta(1, 1, 1));
    fig.check_eq("closed form", figure_eight_hhh(), ext + odd);
    fig.check_eq("trace, odd class signed", homfly(figure_eight_braid()) / homfly(BraidWord(1, {})),
                 (ext - odd).specialize(calibration::markov()));
    VerifyItem decat = item("decategorifies to the trace of (s1 s2)^k");
    std::vector<int> ks;
    for (int k = 1; k <= 17; ++k)
        if (k % 3) ks.push_back(k);
    DecatReport d = decategorification_check(3, ks);
    for (const DecatInstance& i : d.instances)
        decat.check(i.ok, "k=" + std::to_string(i.k), render(i.specialized), render(i.normalized_homfly));
    decat.check(d.framing && d.framing->second == calibration::framing(3) && d.framing->first == 1, "framing",
                d.framing ? render_monomial(d.framing->second) : "none", render_monomial(calibration::framing(3)));
    r.items = {closed, fig, decat};
    return r;
}

// ktheory -----------------------------------------------------------------

FactoredRat ell(int n, int k) { return FactoredRat(Monomial::var(slot_l(n + 1), k)); }

LaurentPoly complete(const std::vector<Monomial>& xs, int k, std::size_t from = 0) {
    if (k == 0) return LaurentPoly(1);
    if (k < 0 || from == xs.size()) return {};
    return LaurentPoly(xs[from]) * complete(xs, k - 1, from) + complete(xs, k, from + 1);
}

LaurentPoly elementary(const std::vector<Monomial>& xs, int k, std::size_t from = 0) {
    if (k == 0) return LaurentPoly(1);
    if (k < 0 || from == xs.size()) return {};
    return LaurentPoly(xs[from]) * elementary(xs, k - 1, from + 1) + elementary(xs, k, from + 1);
}

// S^k of (q T + t T + O) - (qt T + T) for T with roots r_1..r_n.
LaurentPoly sym_power(int n, int k) {
    std::vector<Monomial> plus = {Monomial::one()}, minus;
    for (int i = 1; i <= n; ++i) {
        Monomial r = Monomial::var(slot_r(i));
        plus.push_back(q_pow(1) * r);
        plus.push_back(t_pow(1) * r);
        minus.push_back(qt(1, 1) * r);
        minus.push_back(r);
    }
    LaurentPoly s;
    for (int j = 0; j <= k; ++j) s += elementary(minus, j) * complete(plus, k - j) * Rational(j % 2 ? -1 : 1);
    return s;
}

KClass random_class(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> ex(-2, 2), lx(-3, 3), co(-3, 3), len(1, 4);
    LaurentPoly p;
    for (int i = len(rng); i > 0; --i) {
        Monomial m = Monomial::qta(2 * ex(rng), 2 * ex(rng), ex(rng)) * Monomial::var(slot_l(n + 1), lx(rng));
        for (int j = 1; j <= n; ++j) m *= Monomial::var(slot_r(j), ex(rng));
        p.add_term(m, co(rng));
    }
    return FactoredRat(p);
}

VerifyReport ktheory_suite(unsigned seed) {
    VerifyReport r{"ktheory", {}, {}};
    VerifyItem unit = item("push: push(1) = push(l^-1) = 1");
    for (int n = 0; n <= 3; ++n) {
        unit.check_eq("push(1) n=" + std::to_string(n), push(FactoredRat(1), n), FactoredRat(1));
        unit.check_eq("push(l^-1) n=" + std::to_string(n), push(ell(n, -1), n), FactoredRat(1));
    }
    VerifyItem sym = item("push: push(l^k) is the symmetric power S^k E");
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= (n == 3 ? 3 : 5); ++k)
            sym.check_eq("n=" + std::to_string(n) + " k=" + std::to_string(k), push(ell(n, k), n),
                         FactoredRat(sym_power(n, k)));
    VerifyItem triple = item("push: O_Z twisted by l^0, l^-1, l^-2 gives 1-q, 0, (q-1)/(qt r_n)");
    for (int n = 1; n <= 3; ++n) {
        KClass z = zn_class(n);
        std::string where = "n=" + std::to_string(n);
        triple.check_eq(where + " l^0", push(z, n), om(q_pow(1)));
        triple.check_eq(where + " l^-1", push(z * ell(n, -1), n), FactoredRat());
        FactoredRat expected = (FactoredRat(q_pow(1)) - FactoredRat(1)) / FactoredRat(qt(1, 1) * Monomial::var(slot_r(n)));
        triple.check_eq(where + " l^-2", push(z * ell(n, -2), n), expected);
    }
    VerifyItem serre = item("serre: push(f)^dual = push(f^dual l^-1)");
    std::mt19937 rng(seed);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + i % 3;
        KClass f = random_class(n, rng);
        serre.check_eq("n=" + std::to_string(n) + " f=" + render(f), push(f, n).dual(), push(f.dual() * ell(n, -1), n));
    }
    VerifyItem markov = item("markov: factors (1-a)/(1-q), 1, a/(qt)");
    for (int n = 1; n <= 3; ++n) {
        MarkovFactors m = markov_factors(n);
        std::string where = "n=" + std::to_string(n);
        markov.check_eq(where + " bare", m.bare, om(a_pow(1)) / om(q_pow(1)));
        markov.check_eq(where + " positive", m.positive, FactoredRat(1));
        markov.check_eq(where + " negative", m.negative, FactoredRat(a_pow(1) * qt(-1, -1)));
    }
    VerifyItem compose = item("markov: factors compose with the Hecke trace at t = 1/q");
    {
        const MarkovFactors m = markov_factors();
        const Subst dec = calibration::decategorify();
        const FactoredRat strand(Monomial::qta(1, 0), calibration::kStrandSign);
        for (int i = 0; i < 30; ++i) {
            int n = 1 + i % 3;
            BraidWord w = random_braid(n, 5, rng);
            FactoredRat chi = homfly(w);
            HeckeElement up = from_braid(w).include();
            compose.check_eq(braid_label(w) + " bare", markov_trace(up), strand * m.bare.specialize(dec) * chi);
            compose.check_eq(braid_label(w) + " positive", markov_trace(up * HeckeElement::generator(n + 1, n)),
                             m.positive.specialize(dec) * chi);
            compose.check_eq(braid_label(w) + " negative", markov_trace(up * HeckeElement::generator_inverse(n + 1, n)),
                             m.negative.specialize(dec) * chi);
        }
    }
    VerifyItem tower = item("tower: tower_euler agrees with sheaf cohomology");
    for (int k = -6; k <= 6; ++k) {
        std::string where = "n=2 d=(0," + std::to_string(k) + ")";
        tower.check_eq(where + " punctual", tower_euler(2, {0, k}, true), euler_characteristic(p1_cohomology(k)));
        tower.check_eq(where + " line", tower_euler(2, {0, k}, false), euler_characteristic(fh2_cohomology(k, false)));
    }
    for (int a = -3; a <= 3; ++a)
        for (int b = -4; b <= 3; ++b)
            tower.check_eq("n=3 d=(0," + std::to_string(a) + "," + std::to_string(b) + ")", tower_euler(3, {0, a, b}, true),
                           euler_characteristic(fh3_point_bundle(a, b)));
    for (int k : {1, 2, 4, 5, 7, 8}) {
        auto [x, y] = torus_knot_bundle(k);
        FactoredRat hhh = torus_knot_hhh(3, k, {true, false}).specialize(calibration::a_calibration());
        tower.check_eq("exterior, T(3," + std::to_string(k) + ")", tower_euler(3, {0, x, y}, true, true), om(a_pow(1)) * hhh);
    }
    for (int k = 0; k <= 5; ++k) {
        FactoredRat hhh = two_strand_knot_hhh(k) / FactoredRat(Monomial::qta(0, 1));
        tower.check_eq("exterior, sigma^" + std::to_string(2 * k + 1), tower_euler(2, {0, k}, true, true),
                       om(a_pow(1)) * hhh.specialize(calibration::a_calibration()));
    }
    r.items = {unit, sym, triple, serre, markov, compose, tower};
    return r;
}

// charts ------------------------------------------------------------------

StandardTableau along(int n, bool t_axis) {
    std::vector<Box> b;
    for (int i = 0; i < n; ++i) b.push_back(t_axis ? Box{0, i} : Box{i, 0});
    return StandardTableau(b);
}

VerifyReport chart_suite() {
    VerifyReport r{"charts", {}, {}};
    auto tab = parse_tableau;
    VerifyItem closed = item("chart series closed forms (presentation degrees)");
    const std::vector<std::pair<std::string, FactoredRat>> forms = {
        {"[[1,2]]", FactoredRat(1) / (om(q_pow(1)) * om(qt(1, -1)))},
        {"[[1],[2]]", om(t_pow(1)) / (om(q_pow(1)).pow(2) * om(qt(-1, 1)))},
        {"[[1,2,3]]", FactoredRat(1) / (om(q_pow(1)) * om(qt(1, -1)) * om(qt(1, -2)))},
        {"[[1],[2],[3]]", om(t_pow(1)).pow(2) / (om(q_pow(1)).pow(3) * om(qt(-1, 1)) * om(qt(-2, 1)))},
        {"[[1,2],[3]]", om(t_pow(2)) / (om(q_pow(1)).pow(2) * om(qt(1, -1)) * om(qt(-1, 2)))},
        {"[[1,3],[2]]", om(t_pow(1)) * om(q_pow(2)) / (om(q_pow(1)).pow(3) * om(qt(-1, 1)) * om(qt(2, -1)))},
    };
    for (const auto& [text, value] : forms) closed.check_eq(text, chart_series(tab(text), ChartFlavor::C), value);
    for (int n = 1; n <= 7; ++n) {
        FactoredRat sym(1), anti = om(t_pow(1)).pow(n - 1) / om(q_pow(1)).pow(n);
        for (int i = 1; i <= n; ++i) sym /= om(qt(1, 1 - i));
        for (int i = 1; i < n; ++i) anti /= om(qt(-i, 1));
        closed.check_eq("toeplitz n=" + std::to_string(n), chart_series(along(n, true), ChartFlavor::C), sym);
        closed.check_eq("antisym n=" + std::to_string(n), chart_series(along(n, false), ChartFlavor::C), anti);
    }
    VerifyItem hook_item = item("hook-length specialization is the hook product up to one monomial");
    for (const StandardTableau& t : implemented_tableaux(6)) {
        HookSpecialization h = hook_length_specialization(t);
        FactoredRat hooks(1);
        Partition shape = t.shape();
        for (const Box& b : shape.boxes()) hooks /= om(q_pow(hook(shape, b)));
        hook_item.check_eq(to_string(t), h.specialized, FactoredRat(h.discrepancy) * hooks);
        r.notes.push_back("mu(" + to_string(t) + ") = " + render_monomial(h.discrepancy));
    }
    VerifyItem markov = item("one calibration for the Markov trace identity, sizes <= 3");
    MarkovCheckReport m = markov_trace_identity_check(implemented_tableaux(3));
    for (const MarkovCheckEntry& e : m.entries) markov.check(e.ok, to_string(e.tableau), render(e.lhs), render(e.rhs));
    markov.check(m.ok && m.calibration.has_value(), "calibration found");
    VerifyItem zeta_sym = item("zeta product is symmetric at t = 1/q");
    for (int n = 2; n <= 5; ++n) {
        FactoredRat p = zeta_product_symbolic(n).specialize(Subst::t_to_inverse_q());
        for (int i = 1; i < n; ++i) {
            Subst swap;
            swap.map_var(slot_z(i), 1, Monomial::var(slot_z(i + 1)));
            swap.map_var(slot_z(i + 1), 1, Monomial::var(slot_z(i)));
            zeta_sym.check_eq("n=" + std::to_string(n) + " swap " + std::to_string(i), p.specialize(swap), p);
        }
    }
    VerifyItem pole = item("magic sum as printed reports the z_1 pole for n = 1");
    MagicSumReport ms = magic_sum(1, {0});
    pole.check(ms.poles.size() == 1 && !ms.total && ms.poles[0].factor == "1 - 1/z1", "n=1 twists=0",
               ms.poles.empty() ? "no pole" : ms.poles[0].factor, "1 - 1/z1");
    r.items = {closed, hook_item, markov, zeta_sym, pole};
    return r;
}

// koszul ------------------------------------------------------------------

VerifyReport koszul_suite() {
    VerifyReport r{"koszul", {}, {}};
    std::vector<Chart> charts;
    for (const StandardTableau& t : implemented_tableaux(3)) charts.push_back(build_chart(t));
    charts.push_back(build_chart(ChartFamily::Toeplitz, 4));
    VerifyItem dd = item("d^2 = 0 and Euler characteristic");
    for (const Chart& c : charts)
        for (int N = 0; N <= 2; ++N)
            for (int Mm = 0; Mm <= 2; ++Mm) {
                KoszulTable t = koszul_homology(c, N, Mm, 5);
                std::string where = to_string(c.tableau) + " N=" + std::to_string(N) + " M=" + std::to_string(Mm);
                dd.check(t.d_squared_zero, where + " d^2");
                dd.check(t.euler_matches, where + " euler");
            }
    VerifyItem contract = item("homology vanishes when the diagram contains (N, M), cutoff 8");
    for (const Chart& c : charts)
        for (const Box& b : c.tableau.boxes()) {
            KoszulTable t = koszul_homology(c, b.a, b.b, 8);
            contract.check(t.homology.empty() && !t.chains.empty(), to_string(c.tableau) + " box " + to_string(b),
                           std::to_string(t.homology.size()) + " nonzero homology entries", "0");
        }
    VerifyItem one = item("n = 1 homology is 1 + q + ... + q^(N-1)");
    Chart c1 = build_chart(ChartFamily::Toeplitz, 1);
    for (int N = 1; N <= 6; ++N) {
        KoszulTable t = koszul_homology(c1, N, 0, 8);
        LaurentPoly got, want;
        bool in_degree_zero = true;
        for (const KoszulEntry& e : t.homology) {
            got.add_term(e.weight, e.dim);
            in_degree_zero = in_degree_zero && e.degree == 0;
        }
        for (int j = 0; j < N; ++j) want.add_term(q_pow(j), 1);
        one.check(got == want && in_degree_zero, "N=" + std::to_string(N), render(got), render(want));
    }
    r.items = {dd, contract, one};
    return r;
}

}  // namespace

void VerifyItem::check(bool ok, const std::string& where, const std::string& lhs, const std::string& rhs) {
    ++checked;
    if (ok) return;
    ++failed;
    if (failures.size() < kMaxFailures) failures.push_back({where, lhs, rhs});
}

void VerifyItem::check_eq(const std::string& where, const FactoredRat& lhs, const FactoredRat& rhs) {
    bool ok = lhs == rhs;
    check(ok, where, ok ? std::string() : render(lhs), ok ? std::string() : render(rhs));
}

bool VerifyReport::ok() const {
    for (const auto& i : items)
        if (!i.ok()) return false;
    return true;
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {"hecke",   "projectors", "two-strand", "three-strand",
                                                   "ktheory", "charts",     "koszul"};
    return names;
}

std::vector<VerifyReport> run_verify(const std::string& suite, unsigned seed) {
    const std::map<std::string, std::function<VerifyReport()>> table = {
        {"hecke", [&] { return hecke_suite(seed); }},
        {"projectors", [] { return projector_suite(); }},
        {"two-strand", [] { return two_strand_suite(); }},
        {"three-strand", [] { return three_strand_suite(); }},
        {"ktheory", [&] { return ktheory_suite(seed); }},
        {"charts", [] { return chart_suite(); }},
        {"koszul", [] { return koszul_suite(); }},
    };
    std::vector<VerifyReport> out;
    if (suite == "all") {
        for (const auto& name : verify_suites()) out.push_back(table.at(name)());
        return out;
    }
    auto it = table.find(suite);
    if (it == table.end()) fail(ErrorCode::ParseError, "unknown suite '" + suite + "'");
    out.push_back(it->second());
    return out;
}

nlohmann::json to_json(const VerifyReport& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& i : r.items) {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : i.failures) fs.push_back({{"where", f.where}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        items.push_back({{"name", i.name}, {"ok", i.ok()}, {"checked", i.checked}, {"failed", i.failed}, {"failures", fs}});
    }
    return {{"suite", r.suite}, {"ok", r.ok()}, {"items", items}, {"notes", r.notes}};
}

std::string render(const VerifyReport& r) {
    std::ostringstream os;
    for (const auto& i : r.items) {
        os << (i.ok() ? "PASS " : "FAIL ") << r.suite << ": " << i.name << " (" << i.checked << " checked";
        if (i.failed) os << ", " << i.failed << " failed";
        os << ")\n";
        for (const auto& f : i.failures) {
            os << "    " << f.where;
            if (!f.lhs.empty() || !f.rhs.empty()) os << ": " << f.lhs << " != " << f.rhs;
            os << "\n";
        }
    }
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace fh
