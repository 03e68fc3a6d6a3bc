#include "fhkit/sheafcoh.hpp"

#include "fhkit/calibration.hpp"
#include "fhkit/errors.hpp"
#include "fhkit/hecke.hpp"

namespace fh {

namespace {

void accumulate(EquivSeries& s, int degree, const FactoredRat& x) {
    if (x.is_zero()) return;
    auto [it, fresh] = s.try_emplace(degree, x);
    if (!fresh) {
        it->second += x;
        if (it->second.is_zero()) s.erase(it);
    }
}

FactoredRat geometric(const Monomial& m) { return FactoredRat(m) / FactoredRat::one_minus(q_pow(1)); }

// (qt)^-1 (t^(k+2) + ... + q^(k+2)) for k <= -2
LaurentPoly h1_line(int k) {
    LaurentPoly r;
    for (int j = 0; j <= -k - 2; ++j) r.add_term(qt(-j - 1, k + 1 + j), 1);
    return r;
}

const FactoredRat& half_t() {
    static const FactoredRat x(Monomial::qta(0, 1));
    return x;
}

}  // namespace

FactoredRat euler_characteristic(const EquivSeries& s) {
    FactoredRat r;
    for (const auto& [i, x] : s) r += i % 2 ? -x : x;
    return r;
}

LaurentPoly h_qt(int d) {
    LaurentPoly r;
    for (int j = 0; j <= d; ++j) r.add_term(qt(j, d - j), 1);
    return r;
}

EquivSeries p1_cohomology(int d) {
    EquivSeries s;
    if (d >= 0) accumulate(s, 0, FactoredRat(h_qt(d)));
    if (d <= -2) accumulate(s, 1, FactoredRat(h1_line(d)));
    return s;
}

EquivSeries fh2_cohomology(int k, bool reduced) {
    EquivSeries s;
    FactoredRat h0 = geometric(q_pow(k + 1));
    if (k >= 0) h0 += FactoredRat(h_qt(k));
    accumulate(s, 0, h0);
    if (k <= -2) accumulate(s, 1, FactoredRat(h1_line(k)));
    if (!reduced)
        for (auto& [i, x] : s) x /= FactoredRat::one_minus(q_pow(1));
    return s;
}

EquivSeries fh2_cohomology_from_components(int k, bool reduced) {
    EquivSeries s = p1_cohomology(k);
    // H^*(C, O(k)) = q^k/(1 - q), twisted by the q of the ideal sheaf
    accumulate(s, 0, FactoredRat(q_pow(1)) * geometric(q_pow(k)));
    if (!reduced)
        for (auto& [i, x] : s) x /= FactoredRat::one_minus(q_pow(1));
    return s;
}

FactoredRat two_strand_hom_series(int k) {
    if (k >= 0) {
        FactoredRat r = geometric(q_pow(k));
        for (int i = 1; i <= k; ++i) r += FactoredRat(qt(k - i, i));
        return r;
    }
    EquivSeries h = fh2_cohomology(k);
    auto it = h.find(1);
    return it == h.end() ? FactoredRat() : half_t() * it->second;
}

FactoredRat two_strand_knot_hhh(int k, bool a_graded) {
    if (k < 0) fail(ErrorCode::UnsupportedN, "two-strand knot series are implemented for k >= 0");
    FactoredRat r = euler_characteristic(p1_cohomology(k));
    if (a_graded) r += FactoredRat(a_pow(1)) * euler_characteristic(p1_cohomology(k - 1));
    return half_t() * r;
}

EquivSeries fh3_point_bundle(int a, int b) {
    EquivSeries s;
    if (b >= 0) {
        // S^b(O(2) + qt O(-1)) = sum_i (qt)^i O(2b - 3i)
        for (int i = 0; i <= b; ++i)
            for (const auto& [j, x] : p1_cohomology(a + 2 * b - 3 * i)) accumulate(s, j, FactoredRat(qt(i, i)) * x);
    } else if (b <= -2) {
        // R^1 pi_* L_3^b = (qt)^-1 O(-1) S^c(O(-2) + (qt)^-1 O(1)), c = -b - 2
        int c = -b - 2;
        for (int i = 0; i <= c; ++i)
            for (const auto& [j, x] : p1_cohomology(a - 1 + 3 * i - 2 * c))
                accumulate(s, j + 1, FactoredRat(qt(-1 - i, -1 - i)) * x);
    }
    return s;
}

std::pair<int, int> torus_knot_bundle(int k) {
    if (k % 3 == 0) fail(ErrorCode::NotAKnot, "(s1 s2)^k closes to a knot only when 3 does not divide k");
    int m = k / 3;
    return k % 3 == 1 ? std::make_pair(m, m) : std::make_pair(m + 1, m);
}

FactoredRat torus_knot_hhh(int n, int k, const TorusOptions& opt) {
    FactoredRat r;
    if (n == 2) {
        if (k % 2 == 0) fail(ErrorCode::NotAKnot, "sigma^k closes to a knot only for odd k");
        if (k < 0) fail(ErrorCode::UnsupportedN, "negative torus knots are not implemented");
        r = two_strand_knot_hhh((k - 1) / 2, opt.a_graded);
    } else if (n == 3) {
        if (k < 0) fail(ErrorCode::UnsupportedN, "negative torus knots are not implemented");
        auto [x, y] = torus_knot_bundle(k);
        r = euler_characteristic(fh3_point_bundle(x, y));
        if (opt.a_graded) {
            // exterior algebra of the dual tautological bundle: (1 + a/l_2)(1 + a/l_3)
            r += FactoredRat(a_pow(1)) *
                 (euler_characteristic(fh3_point_bundle(x - 1, y)) + euler_characteristic(fh3_point_bundle(x, y - 1)));
            r += FactoredRat(a_pow(2)) * euler_characteristic(fh3_point_bundle(x - 1, y - 1));
        }
    } else {
        fail(ErrorCode::UnsupportedN, "torus knots are implemented for 2 and 3 strands");
    }
    if (opt.unreduced) {
        FactoredRat f = opt.a_graded ? FactoredRat(LaurentPoly(1) + LaurentPoly(a_pow(1))) : FactoredRat(1);
        r = r * f / FactoredRat::one_minus(q_pow(1));
    }
    return r;
}

FactoredRat figure_eight_hhh() {
    FactoredRat ext = FactoredRat(LaurentPoly(1) + LaurentPoly(qt(-1, 0) * a_pow(1))) *
                      FactoredRat(LaurentPoly(1) + LaurentPoly(qt(0, -1) * a_pow(1)));
    return ext + FactoredRat(Monomial::qta(1, 1, 1));
}

BraidWord figure_eight_braid() { return BraidWord(3, {1, -2, 1, -2}); }

FactoredRat twisted_square_integral(int d2, int d3) {
    FactoredRat ext = FactoredRat(LaurentPoly(1) + LaurentPoly(qt(-1, 0) * a_pow(1))) *
                      FactoredRat(LaurentPoly(1) + LaurentPoly(qt(0, -1) * a_pow(1)));
    return ext * FactoredRat(qt(d3, d3)) * euler_characteristic(p1_cohomology(d2));
}

DecatReport decategorification_check(int strands, const std::vector<int>& ks) {
    if (strands != 2 && strands != 3) fail(ErrorCode::UnsupportedN, "decategorification is checked for 2 and 3 strands");
    DecatReport rep;
    rep.strands = strands;
    const FactoredRat unknot = homfly(BraidWord(1, {}));
    const Subst sub = calibration::markov();
    for (std::size_t idx = 0; idx < ks.size(); ++idx) {
        int k = ks[idx];
        DecatInstance inst;
        inst.k = k;
        BraidWord w = strands == 2 ? BraidWord(2, std::vector<int>(2 * k + 1, 1)) : torus_braid(3, k);
        FactoredRat series = strands == 2 ? two_strand_knot_hhh(k) : torus_knot_hhh(3, k, {true, false});
        inst.specialized = series.specialize(sub);
        inst.normalized_homfly = homfly(w) / unknot;
        auto ratio = (inst.normalized_homfly / inst.specialized).as_monomial();
        if (idx < 2 && ratio && !rep.framing) rep.framing = ratio;
        inst.ok = ratio && rep.framing && *ratio == *rep.framing;
        rep.instances.push_back(inst);
    }
    rep.ok = rep.framing.has_value() && ks.size() >= 2;
    for (const auto& inst : rep.instances) rep.ok = rep.ok && inst.ok;
    return rep;
}

}  // namespace fh
