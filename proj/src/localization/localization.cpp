#include "fhkit/localization.hpp"

#include "fhkit/calibration.hpp"
#include "fhkit/errors.hpp"
#include "fhkit/hecke.hpp"

namespace fh {

FactoredRat zeta(const Monomial& x) {
    const Monomial qtm = qt(1, 1);
    return FactoredRat::one_minus(x) * FactoredRat::one_minus(qtm * x) /
           (FactoredRat::one_minus(q_pow(1) * x) * FactoredRat::one_minus(t_pow(1) * x));
}

FactoredRat zeta_product_symbolic(int n) {
    if (n < 1 || n > kWeights) fail(ErrorCode::UnsupportedN, "symbolic weights are available for n <= 5");
    FactoredRat r(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            r *= zeta(Monomial::var(slot_z(i)) / Monomial::var(slot_z(j)));
    return r;
}

const char* variant_name(MagicVariant v) {
    switch (v) {
        case MagicVariant::AsPrinted: return "as-printed";
        case MagicVariant::DropFirstDenominator: return "drop-first-denominator";
        case MagicVariant::ReducedByUnknot: return "reduced";
    }
    return "?";
}

MagicVariant parse_variant(const std::string& s) {
    if (s == "as-printed") return MagicVariant::AsPrinted;
    if (s == "drop-first-denominator") return MagicVariant::DropFirstDenominator;
    if (s == "reduced" || s == "reduced-by-unknot") return MagicVariant::ReducedByUnknot;
    fail(ErrorCode::ParseError, "unknown magic-sum variant: " + s);
}

namespace {

std::string ratio_name(int i, int j) {
    return "z" + std::to_string(i) + "/z" + std::to_string(j);
}

}  // namespace

MagicSumReport magic_sum(int n, const std::vector<int>& twists, const MagicOptions& opt) {
    if (n < 1) fail(ErrorCode::UnsupportedN, "magic sum needs n >= 1");
    if (static_cast<int>(twists.size()) != n) fail(ErrorCode::StrandMismatch, "need one twist per strand");
    MagicSumReport rep;
    const bool reduced = opt.variant == MagicVariant::ReducedByUnknot;
    const bool drop_first = reduced || opt.variant == MagicVariant::DropFirstDenominator;
    for (const StandardTableau& t : all_syt(n)) {
        std::vector<Monomial> z = t.weights();
        FactoredRat term = FactoredRat::inv_one_minus(q_pow(1)).pow(n);
        std::string pole;
        int tail = 0;
        for (int i = n; i >= 1; --i) {
            tail += twists[i - 1];
            const Monomial& zi = z[i - 1];
            term *= FactoredRat(zi.pow(tail));
            if (opt.a_grading && !(reduced && i == 1))
                term *= FactoredRat(LaurentPoly(1) + LaurentPoly(a_pow(1) * zi.inv()));
            if (drop_first && i == 1) continue;
            if (zi.inv().is_one()) {
                pole = "1 - 1/z" + std::to_string(i);
                continue;
            }
            term /= FactoredRat::one_minus(zi.inv());
        }
        for (int i = 1; i <= n && pole.empty(); ++i)
            for (int j = i + 1; j <= n && pole.empty(); ++j) {
                Monomial x = opt.swap_zeta ? z[j - 1] / z[i - 1] : z[i - 1] / z[j - 1];
                if ((q_pow(1) * x).is_one() || (t_pow(1) * x).is_one()) {
                    pole = "zeta(" + (opt.swap_zeta ? ratio_name(j, i) : ratio_name(i, j)) + ")";
                    break;
                }
                term *= zeta(x);
            }
        if (pole.empty())
            rep.terms.push_back({t, term});
        else
            rep.poles.push_back({t, pole});
    }
    if (rep.poles.empty()) {
        std::vector<FactoredRat> vals;
        for (const auto& x : rep.terms) vals.push_back(x.value);
        rep.total = sum(vals);
    }
    return rep;
}

const char* flavor_name(ChartFlavor f) {
    switch (f) {
        case ChartFlavor::C2: return "C2";
        case ChartFlavor::C: return "C";
        case ChartFlavor::Point: return "point";
    }
    return "?";
}

ChartFlavor parse_flavor(const std::string& s) {
    if (s == "C2") return ChartFlavor::C2;
    if (s == "C") return ChartFlavor::C;
    if (s == "point") return ChartFlavor::Point;
    fail(ErrorCode::ParseError, "unknown chart flavor: " + s);
}

const char* chart_kind_name(ChartKind k) {
    switch (k) {
        case ChartKind::Toeplitz: return "toeplitz";
        case ChartKind::Antisymmetric: return "antisymmetric";
        case ChartKind::HookTQ: return "hook-1tq";
        case ChartKind::HookQT: return "hook-1qt";
    }
    return "?";
}

ChartPresentation chart_presentation(const StandardTableau& t) {
    const int n = t.size();
    std::vector<Monomial> z = t.weights();
    bool along_t = true, along_q = true;
    for (int i = 0; i < n; ++i) {
        along_t = along_t && z[i] == t_pow(i);
        along_q = along_q && z[i] == q_pow(i);
    }
    ChartPresentation p;
    p.n = n;
    if (n >= 1 && along_t) {
        p.kind = ChartKind::Toeplitz;
        for (int i = 1; i <= n; ++i) p.generators.push_back({"u" + std::to_string(i), qt(1, 1 - i), i == 1});
        return p;
    }
    if (n >= 1 && along_q) {
        p.kind = ChartKind::Antisymmetric;
        for (int i = 1; i <= n; ++i) p.generators.push_back({"x" + std::to_string(i), q_pow(1), true});
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j) {
                std::string ij = std::to_string(i) + std::to_string(j);
                p.generators.push_back({"y" + ij, qt(j - i, 1), false});
                p.relations.push_back({"r" + ij, qt(j - i + 1, 1), i == j + 1});
            }
        return p;
    }
    if (n == 3 && z[1] == t_pow(1) && z[2] == q_pow(1)) {
        p.kind = ChartKind::HookTQ;
        p.generators = {{"x1", q_pow(1), true},
                        {"x3", q_pow(1), true},
                        {"x21", qt(1, -1), false},
                        {"y32", qt(-1, 2), false}};
        p.relations = {{"(x1-x3)y32", t_pow(2), true}};
        return p;
    }
    if (n == 3 && z[1] == q_pow(1) && z[2] == t_pow(1)) {
        p.kind = ChartKind::HookQT;
        p.generators = {{"x1", q_pow(1), true},
                        {"x2", q_pow(1), true},
                        {"x3", q_pow(1), true},
                        {"x32", qt(2, -1), false},
                        {"y21", qt(-1, 1), false}};
        p.relations = {{"(x1-x2)y21", t_pow(1), true}, {"(x2-x3)y32", q_pow(2), true}};
        return p;
    }
    fail(ErrorCode::UnsupportedShape, "no chart presentation for " + to_string(t));
}

Weights chart_weights(const ChartPresentation& p) {
    switch (p.kind) {
        case ChartKind::Toeplitz: return {p.n, 1, 1};
        case ChartKind::Antisymmetric: return {1, p.n, 1};
        case ChartKind::HookTQ: return {3, 2, 1};
        case ChartKind::HookQT: return {2, 3, 1};
    }
    return {};
}

FactoredRat presentation_series(const ChartPresentation& p, ChartFlavor f) {
    FactoredRat r(1);
    const bool point = f == ChartFlavor::Point;
    for (const auto& g : p.generators)
        if (!(point && g.diagonal)) r /= FactoredRat::one_minus(g.weight);
    for (const auto& rel : p.relations)
        if (!(point && rel.vanishes_at_point)) r *= FactoredRat::one_minus(rel.weight);
    if (f == ChartFlavor::C2) r /= FactoredRat::one_minus(t_pow(1)).pow(p.n);
    return r;
}

FactoredRat chart_series(const StandardTableau& t, ChartFlavor f) {
    return presentation_series(chart_presentation(t), f);
}

FactoredRat exterior_factor(const StandardTableau& t) {
    FactoredRat r(1);
    for (const Monomial& z : t.weights()) r *= FactoredRat(LaurentPoly(1) + LaurentPoly(a_pow(1) * z.inv()));
    return r;
}

FactoredRat endomorphism_series(const StandardTableau& t, ChartFlavor f) {
    return chart_series(t, f) * exterior_factor(t);
}

HookSpecialization hook_length_specialization(const StandardTableau& t) {
    FactoredRat s = chart_series(t, ChartFlavor::C).specialize(calibration::decategorify());
    Partition shape = t.shape();
    FactoredRat ratio = s;
    for (const Box& b : shape.boxes()) ratio *= FactoredRat::one_minus(q_pow(hook(shape, b)));
    auto mono = ratio.as_monomial();
    if (!mono || mono->first != 1)
        fail(ErrorCode::NotMonomialRatio, "hook-length ratio is not a monomial for " + to_string(t));
    return {s, mono->second};
}

namespace {

std::optional<Monomial> uniform_ratio(const std::vector<StandardTableau>& ts, const Subst& sub,
                                      std::vector<MarkovCheckEntry>* out) {
    std::optional<Monomial> nu;
    bool ok = true;
    for (const StandardTableau& t : ts) {
        MarkovCheckEntry e;
        e.tableau = t;
        e.mu = hook_length_specialization(t).discrepancy;
        e.lhs = endomorphism_series(t, ChartFlavor::C).specialize(sub);
        FactoredRat base = FactoredRat(e.mu) * projector_trace_formula(t.shape());
        auto ratio = (e.lhs / base).as_monomial();
        bool mono = ratio && ratio->first == 1;
        if (mono && !nu) nu = ratio->second;
        e.ok = mono && ratio->second == *nu;
        e.rhs = base * FactoredRat(nu ? *nu : Monomial::one());
        ok = ok && e.ok;
        if (out) out->push_back(e);
        if (!ok && !out) return std::nullopt;
    }
    if (!ok) return std::nullopt;
    return nu;
}

}  // namespace

MarkovCheckReport markov_trace_identity_check(const std::vector<StandardTableau>& ts) {
    MarkovCheckReport rep;
    for (int sign : {-1, 1})
        for (int power : {1, -1})
            for (int k : {0, 1, -1, 2, -2, 3, -3, 4, -4}) {
                Subst a_sub;
                a_sub.map_var(A, sign, Monomial::qta(k, 0, power));
                Subst sub = calibration::decategorify().then(a_sub);
                auto nu = uniform_ratio(ts, sub, nullptr);
                if (!nu) continue;
                rep.calibration = MarkovCalibration{sign, power, k, *nu};
                uniform_ratio(ts, sub, &rep.entries);
                rep.ok = true;
                return rep;
            }
    uniform_ratio(ts, calibration::markov(), &rep.entries);
    return rep;
}

std::vector<StandardTableau> implemented_tableaux(int max_n) {
    std::vector<StandardTableau> out;
    for (int n = 1; n <= max_n; ++n)
        for (const StandardTableau& t : all_syt(n)) {
            try {
                chart_presentation(t);
                out.push_back(t);
            } catch (const Error&) {
            }
        }
    return out;
}

}  // namespace fh
