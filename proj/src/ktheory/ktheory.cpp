#include "fhkit/ktheory.hpp"

#include <algorithm>
#include <climits>

#include "fhkit/errors.hpp"

namespace fh {

namespace {

// l-degree seen from the expansion point: +e at l ~ 0, -e at l ~ infinity.
int degree(const Monomial& m, int ell, int side) { return side * m.e[ell]; }

int min_degree(const LaurentPoly& p, int ell, int side) {
    int lo = INT_MAX;
    for (const auto& [m, c] : p.terms()) lo = std::min(lo, degree(m, ell, side));
    return lo;
}

LaurentPoly truncate(const LaurentPoly& p, int ell, int side, int bound) {
    LaurentPoly r;
    for (const auto& [m, c] : p.terms())
        if (degree(m, ell, side) <= bound) r.add_term(m, c);
    return r;
}

LaurentPoly mul_trunc(const LaurentPoly& x, const LaurentPoly& y, int ell, int side, int bound) {
    LaurentPoly r;
    for (const auto& [m1, c1] : x.terms())
        for (const auto& [m2, c2] : y.terms()) {
            Monomial m = m1 * m2;
            if (degree(m, ell, side) <= bound) r.add_term(m, c1 * c2);
        }
    return r;
}

// (1 - m)^-k expanded in powers of m (or of 1/m when m has negative degree),
// up to l-degree `bound`.
LaurentPoly geometric(const Monomial& m, int k, int ell, int side, int bound) {
    int ue = degree(m, ell, side);
    Monomial g = ue > 0 ? m : m.inv();
    int step = std::abs(ue);
    LaurentPoly pre(1);
    if (ue < 0) pre = LaurentPoly(g.pow(k), k % 2 ? -1 : 1);
    int lo = ue < 0 ? k * step : 0;
    LaurentPoly r;
    Rational binom = 1;  // C(j + k - 1, k - 1)
    Monomial gj = Monomial::one();
    for (int j = 0; lo + j * step <= bound; ++j) {
        r.add_term(gj, binom);
        binom = binom * (j + k) / (j + 1);
        gj *= g;
    }
    return r * pre;
}

struct Split {
    FactoredRat prefactor;  // no l
    LaurentPoly finite;     // l^e0 * rnum * (1 - m)^k numerator factors
    std::vector<std::pair<Monomial, int>> poles;
};

Split split(const FactoredRat& f, int ell) {
    if (f.rden().involves(ell)) fail(ErrorCode::KernelNotExpandable, "denominator is not a product of (1 - m) factors in l");
    Split s;
    Monomial free = f.mono(), lpart = Monomial::one();
    free.e[ell] = 0;
    lpart.e[ell] = f.mono().e[ell];
    s.prefactor = FactoredRat(free, f.coeff()) / FactoredRat(f.rden());
    s.finite = f.rnum() * lpart;
    for (const auto& [m, k] : f.num()) {
        if (m.e[ell] == 0)
            s.prefactor *= FactoredRat::one_minus(m).pow(k);
        else
            s.finite *= LaurentPoly::one_minus(m).pow(k);
    }
    for (const auto& [m, k] : f.den()) {
        if (m.e[ell] == 0)
            s.prefactor /= FactoredRat::one_minus(m).pow(k);
        else
            s.poles.push_back({m, k});
    }
    return s;
}

LaurentPoly constant_term(const Split& s, int ell, int side) {
    if (s.finite.is_zero()) return {};
    int finite_min = min_degree(s.finite, ell, side);
    std::vector<int> mins;
    int rest = 0;
    for (const auto& [m, k] : s.poles) {
        int ue = degree(m, ell, side);
        mins.push_back(ue < 0 ? -k * ue : 0);
        rest += mins.back();
    }
    if (finite_min + rest > 0) return {};
    LaurentPoly cur = truncate(s.finite, ell, side, -rest);
    int cur_min = finite_min;
    for (std::size_t i = 0; i < s.poles.size(); ++i) {
        rest -= mins[i];
        int bound = -rest;
        const auto& [m, k] = s.poles[i];
        cur = mul_trunc(cur, geometric(m, k, ell, side, bound - cur_min), ell, side, bound);
        if (cur.is_zero()) return {};
        cur_min = min_degree(cur, ell, side);
    }
    LaurentPoly r;
    for (const auto& [m, c] : cur.terms())
        if (m.e[ell] == 0) r.add_term(m, c);
    return r;
}

KClass inv_l(int ell, const Monomial& m) { return FactoredRat(m) * FactoredRat(Monomial::var(ell, -1)); }

}  // namespace

ProjBundle tower_step(const std::vector<Monomial>& roots, int ell) {
    const Monomial li = Monomial::var(ell, -1);
    KClass k = FactoredRat::inv_one_minus(li);
    for (const Monomial& r : roots) {
        k *= FactoredRat::one_minus(qt(1, 1) * r * li) * FactoredRat::one_minus(r * li);
        k /= FactoredRat::one_minus(q_pow(1) * r * li) * FactoredRat::one_minus(t_pow(1) * r * li);
    }
    return {ell, k};
}

ProjBundle tower_step(int n) {
    if (n < 0 || n + 1 > kLines) fail(ErrorCode::UnsupportedN, "symbolic tower steps are available for n <= 3");
    std::vector<Monomial> roots;
    for (int i = 1; i <= n; ++i) roots.push_back(Monomial::var(slot_r(i)));
    return tower_step(roots, slot_l(n + 1));
}

ProjBundle split_bundle(const std::vector<Monomial>& classes, int ell) {
    KClass k(1);
    for (const Monomial& e : classes) k /= FactoredRat::one_minus(e * Monomial::var(ell, -1));
    return {ell, k};
}

KClass push(const KClass& f, const ProjBundle& p) {
    if (f.is_zero()) return {};
    Split s = split(f * p.kernel, p.ell);
    LaurentPoly c = constant_term(s, p.ell, -1) - constant_term(s, p.ell, 1);
    return s.prefactor * FactoredRat(c);
}

KClass push(const KClass& f, int n) { return push(f, tower_step(n)); }

KClass zn_class(int n) {
    if (n < 1 || n + 1 > kLines) fail(ErrorCode::UnsupportedN, "O_{Z_n} is available for 1 <= n <= 3");
    return FactoredRat::one_minus(q_pow(1)) /
           FactoredRat::one_minus(qt(1, 1) * Monomial::var(slot_r(n)) * Monomial::var(slot_l(n + 1), -1));
}

KClass periodic_class(int j) {
    if (j < 1 || j + 1 > kLines) fail(ErrorCode::UnsupportedN, "periodic classes are available for 1 <= j <= 3");
    return FactoredRat::one_minus(q_pow(1)) /
           FactoredRat::one_minus(qt(1, 1) * Monomial::var(slot_l(j)) * Monomial::var(slot_l(j + 1), -1));
}

MarkovFactors markov_factors(int n) {
    const int ell = slot_l(n + 1);
    const KClass ext = FactoredRat::one_minus(a_pow(1) * Monomial::var(ell, -1));
    const FactoredRat line = FactoredRat::inv_one_minus(q_pow(1));
    const KClass z = zn_class(n);
    MarkovFactors m;
    m.bare = push(ext, n) * line;
    m.positive = push(z * ext, n) * line;
    // sigma^-1 twists O_{Z_n} by L_n / L_{n+1}
    m.negative = push(z * inv_l(ell, Monomial::var(slot_r(n))) * ext, n) * line;
    return m;
}

FactoredRat tower_euler(int n, const std::vector<int>& exps, bool punctual, bool exterior) {
    if (n < 1 || n > 3) fail(ErrorCode::UnsupportedN, "tower_euler is implemented for n <= 3");
    if (n == 3 && !punctual) fail(ErrorCode::UnsupportedN, "no explicit bundle for FHilb_3(C)");
    if (static_cast<int>(exps.size()) != n) fail(ErrorCode::StrandMismatch, "need one exponent per line bundle");
    KClass f(1);
    for (int i = 2; i <= n; ++i) {
        f *= FactoredRat(Monomial::var(slot_l(i), exps[i - 1]));
        if (exterior) f *= FactoredRat::one_minus(a_pow(1) * Monomial::var(slot_l(i), -1));
    }
    if (exterior) f *= FactoredRat::one_minus(a_pow(1));
    const std::vector<Monomial> p1 = {q_pow(1), t_pow(1)};
    if (n == 3) {
        const Monomial l2 = Monomial::var(L2);
        f = push(f, split_bundle({l2.pow(2), qt(1, 1) * l2.inv()}, L3));
    }
    if (n >= 2) f = push(f, punctual ? split_bundle(p1, L2) : tower_step({Monomial::one()}, L2));
    if (!punctual) f /= FactoredRat::one_minus(q_pow(1)).pow(n);
    return f;
}

}  // namespace fh
