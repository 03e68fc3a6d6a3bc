#include <doctest.h>

#include <random>

#include "fhkit/calibration.hpp"
#include "fhkit/errors.hpp"
#include "fhkit/hecke.hpp"
#include "fhkit/ktheory.hpp"
#include "fhkit/sheafcoh.hpp"

using namespace fh;

namespace {

FactoredRat ell(int n, int k) { return FactoredRat(Monomial::var(slot_l(n + 1), k)); }
Monomial root(int i) { return Monomial::var(slot_r(i)); }

// Complete and elementary symmetric polynomials by direct recursion over the
// variable list.
LaurentPoly h(const std::vector<Monomial>& xs, int k, std::size_t from = 0) {
    if (k == 0) return LaurentPoly(1);
    if (k < 0 || from == xs.size()) return {};
    return LaurentPoly(xs[from]) * h(xs, k - 1, from) + h(xs, k, from + 1);
}

LaurentPoly e(const std::vector<Monomial>& xs, int k, std::size_t from = 0) {
    if (k == 0) return LaurentPoly(1);
    if (k < 0 || from == xs.size()) return {};
    return LaurentPoly(xs[from]) * e(xs, k - 1, from + 1) + e(xs, k, from + 1);
}

// S^k of E = (q T + t T + O) - (qt T + T), T with roots r_1..r_n.
LaurentPoly sym_power(int n, int k) {
    std::vector<Monomial> plus = {Monomial::one()}, minus;
    for (int i = 1; i <= n; ++i) {
        plus.push_back(q_pow(1) * root(i));
        plus.push_back(t_pow(1) * root(i));
        minus.push_back(qt(1, 1) * root(i));
        minus.push_back(root(i));
    }
    LaurentPoly r;
    for (int j = 0; j <= k; ++j) r += e(minus, j) * h(plus, k - j) * Rational(j % 2 ? -1 : 1);
    return r;
}

KClass random_laurent(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> ex(-2, 2), lx(-3, 3), co(-3, 3), len(1, 4);
    LaurentPoly p;
    for (int i = len(rng); i > 0; --i) {
        Monomial m = Monomial::qta(2 * ex(rng), 2 * ex(rng), ex(rng)) * Monomial::var(slot_l(n + 1), lx(rng));
        for (int j = 1; j <= n; ++j) m *= Monomial::var(slot_r(j), ex(rng));
        p.add_term(m, co(rng));
    }
    return FactoredRat(p);
}

BraidWord random_braid(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 5), gen(1, std::max(1, n - 1)), sign(0, 1);
    std::vector<int> w;
    if (n > 1)
        for (int i = len(rng); i > 0; --i) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return BraidWord(n, w);
}

}  // namespace

TEST_CASE("push of O and of L^-1") {
    for (int n = 0; n <= 3; ++n) {
        CHECK(push(FactoredRat(1), n) == FactoredRat(1));
        CHECK(push(ell(n, -1), n) == FactoredRat(1));
    }
}

TEST_CASE("push of L^k matches symmetric powers of E") {
    for (int n = 1; n <= 2; ++n)
        for (int k = 0; k <= 6; ++k) CHECK(push(ell(n, k), n) == FactoredRat(sym_power(n, k)));
    for (int k = 0; k <= 3; ++k) CHECK(push(ell(3, k), 3) == FactoredRat(sym_power(3, k)));
}

TEST_CASE("push of negative powers is the dual symmetric power") {
    for (int n = 1; n <= 2; ++n)
        for (int k = 0; k <= 4; ++k) CHECK(push(ell(n, -1 - k), n) == FactoredRat(sym_power(n, k)).dual());
}

TEST_CASE("push of O_Z twisted by L^0, L^-1, L^-2") {
    for (int n = 1; n <= 3; ++n) {
        KClass z = zn_class(n);
        CHECK(push(z, n) == FactoredRat::one_minus(q_pow(1)));
        CHECK(push(z * ell(n, -1), n).is_zero());
        FactoredRat expected = FactoredRat(q_pow(1)) - FactoredRat(1);
        expected /= FactoredRat(qt(1, 1) * root(n));
        CHECK(push(z * ell(n, -2), n) == expected);
    }
}

TEST_CASE("Serre duality on random classes") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + i % 3;
        KClass f = random_laurent(n, rng);
        CHECK(push(f, n).dual() == push(f.dual() * ell(n, -1), n));
    }
}

TEST_CASE("push is linear over classes without l") {
    std::mt19937 rng(99);
    for (int i = 0; i < 10; ++i) {
        KClass f = random_laurent(2, rng), g = random_laurent(2, rng);
        FactoredRat c = FactoredRat(LaurentPoly(1) + LaurentPoly(qt(1, -1) * root(1))) / FactoredRat::one_minus(t_pow(2));
        CHECK(push(c * f + g, 2) == c * push(f, 2) + push(g, 2));
    }
}

TEST_CASE("non-expandable denominator") {
    LaurentPoly den = LaurentPoly(1) + LaurentPoly(Monomial::var(L2)) + LaurentPoly(Monomial::var(L2, 2) * q_pow(1));
    KClass f = FactoredRat(1) / FactoredRat(den);
    try {
        push(f, 1);
        FAIL("expected KernelNotExpandable");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::KernelNotExpandable);
    }
}

TEST_CASE("Markov factors") {
    for (int n = 1; n <= 3; ++n) {
        MarkovFactors m = markov_factors(n);
        CHECK(m.bare == FactoredRat::one_minus(a_pow(1)) / FactoredRat::one_minus(q_pow(1)));
        CHECK(m.positive == FactoredRat(1));
        CHECK(m.negative == FactoredRat(a_pow(1) * qt(-1, -1)));
    }
}

TEST_CASE("Markov factors compose with the Hecke trace") {
    // t -> 1/q; the bare inclusion carries the per-strand (-v) of the trace
    const MarkovFactors m = markov_factors();
    const Subst dec = calibration::decategorify();
    const FactoredRat strand(Monomial::qta(1, 0), calibration::kStrandSign);
    std::mt19937 rng(31);
    for (int i = 0; i < 30; ++i) {
        int n = 1 + i % 3;
        HeckeElement x = from_braid(random_braid(n, rng));
        FactoredRat chi = markov_trace(x);
        HeckeElement up = x.include();
        CHECK(markov_trace(up) == strand * m.bare.specialize(dec) * chi);
        CHECK(markov_trace(up * HeckeElement::generator(n + 1, n)) == m.positive.specialize(dec) * chi);
        CHECK(markov_trace(up * HeckeElement::generator_inverse(n + 1, n)) == m.negative.specialize(dec) * chi);
    }
}

TEST_CASE("periodic class") {
    for (int j = 1; j <= 3; ++j) {
        KClass z = periodic_class(j);
        Monomial step = qt(1, 1) * Monomial::var(slot_l(j)) * Monomial::var(slot_l(j + 1), -1);
        CHECK(z * FactoredRat::one_minus(step) == FactoredRat::one_minus(q_pow(1)));
        CHECK_FALSE(z.involves(A));
        Subst s;
        s.map_var(slot_l(j + 1), 1, Monomial::var(slot_l(j)));
        s = s.then(Subst::t_to_inverse_q());
        try {
            z.specialize(s);
            FAIL("expected ZeroDenominator");
        } catch (const Error& err) {
            CHECK(err.code() == ErrorCode::ZeroDenominator);
        }
    }
}

TEST_CASE("tower Euler characteristics against sheaf cohomology") {
    CHECK(tower_euler(1, {5}, true) == FactoredRat(1));
    CHECK(tower_euler(1, {0}, false) == FactoredRat::inv_one_minus(q_pow(1)));
    for (int k = -6; k <= 6; ++k) {
        CHECK(tower_euler(2, {0, k}, true) == euler_characteristic(p1_cohomology(k)));
        CHECK(tower_euler(2, {0, k}, false) == euler_characteristic(fh2_cohomology(k, false)));
    }
    for (int k = 0; k <= 5; ++k) CHECK(tower_euler(2, {0, k}, true) == FactoredRat(h_qt(k)));
    for (int a = -3; a <= 3; ++a)
        for (int b = -4; b <= 3; ++b)
            CHECK(tower_euler(3, {0, a, b}, true) == euler_characteristic(fh3_point_bundle(a, b)));
    CHECK(tower_euler(3, {0, 1, 1}, true) == FactoredRat(h_qt(3)) + FactoredRat(qt(1, 1)));
    // exterior factor: (1 - a) times the a-graded torus series with a -> -a
    for (int k : {1, 2, 4, 5, 7, 8}) {
        auto [x, y] = torus_knot_bundle(k);
        FactoredRat hhh = torus_knot_hhh(3, k, {true, false}).specialize(calibration::a_calibration());
        CHECK(tower_euler(3, {0, x, y}, true, true) == FactoredRat::one_minus(a_pow(1)) * hhh);
    }
    for (int k = 0; k <= 5; ++k) {
        FactoredRat hhh = two_strand_knot_hhh(k) / FactoredRat(Monomial::qta(0, 1));
        CHECK(tower_euler(2, {0, k}, true, true) == FactoredRat::one_minus(a_pow(1)) * hhh.specialize(calibration::a_calibration()));
    }
    try {
        tower_euler(3, {0, 0, 0}, false);
        FAIL("expected UnsupportedN");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::UnsupportedN);
    }
}
