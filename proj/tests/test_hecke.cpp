#include <doctest.h>

#include <random>

#include "fhkit/errors.hpp"
#include "fhkit/hecke.hpp"
#include "fhkit/skein.hpp"

using namespace fh;

namespace {

LaurentPoly v_pow(int k) { return LaurentPoly(Monomial::qta(k, 0)); }

HeckeElement random_element(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 5), gen(1, n - 1), coin(0, 1), c(-2, 2);
    HeckeElement x(n);
    for (int r = 0; r < 3; ++r) {
        BraidWord w(n, {});
        int l = len(rng);
        for (int i = 0; i < l && n > 1; ++i) w.letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
        x += from_braid(w) * (LaurentPoly(c(rng)) + v_pow(c(rng)));
    }
    return x;
}

}  // namespace

TEST_CASE("permutation helpers") {
    PermCode p = perm_from_vector({2, 0, 3, 1});
    CHECK(perm_to_vector(p, 4) == std::vector<int>{2, 0, 3, 1});
    CHECK(perm_length(p, 4) == 3);
    auto w = reduced_word(p, 4);
    CHECK(w.size() == 3);
    PermCode x = perm_identity(4);
    for (int i : w) x = perm_swap_positions(x, i);
    CHECK(x == p);
}

TEST_CASE("Hecke relations") {
    for (int n = 2; n <= 5; ++n) {
        auto one = HeckeElement::identity(n);
        for (int i = 1; i < n; ++i) {
            auto s = HeckeElement::generator(n, i);
            CHECK(s * s == one + s * v_minus_inv());
            CHECK(s * HeckeElement::generator_inverse(n, i) == one);
            CHECK((s - HeckeElement::scalar(n, v_pow(1))) * (s + HeckeElement::scalar(n, v_pow(-1))) ==
                  HeckeElement(n));
            if (i + 1 < n) {
                auto t = HeckeElement::generator(n, i + 1);
                CHECK(s * t * s == t * s * t);
            }
            for (int j = i + 2; j < n; ++j) {
                auto t = HeckeElement::generator(n, j);
                CHECK(s * t == t * s);
            }
        }
    }
}

TEST_CASE("associativity and braid words") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 3;
        auto x = random_element(n, rng), y = random_element(n, rng), z = random_element(n, rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
    BraidWord a(4, {1, -3, 2}), b(4, {-2, 3, 3});
    CHECK(from_braid(a * b) == from_braid(a) * from_braid(b));
    CHECK(from_braid(a * a.inverse()) == HeckeElement::identity(4));
}

TEST_CASE("trace values on small braids") {
    FactoredRat d = trace_symbol_to_rat(trace_symbol_poly(1));
    CHECK(homfly(BraidWord(1, {})) == d);
    CHECK(homfly(BraidWord(2, {})) == d * d);
    CHECK(homfly(BraidWord(2, {1})) == d);
    CHECK(homfly(BraidWord(2, {-1})) == d * FactoredRat(a_pow(1)));
    CHECK(d == FactoredRat(Monomial::qta(1, 0), -1) * FactoredRat::one_minus(a_pow(1)) /
                   FactoredRat::one_minus(q_pow(1)));
}

TEST_CASE("Markov properties of the trace") {
    std::mt19937 rng(11);
    FactoredRat d = trace_symbol_to_rat(trace_symbol_poly(1));
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 4;
        HeckeElement x = n == 1 ? HeckeElement::scalar(1, LaurentPoly(3) + v_pow(1)) : random_element(n, rng);
        HeckeElement y = n == 1 ? HeckeElement::scalar(1, v_pow(-2)) : random_element(n, rng);
        FactoredRat cx = markov_trace(x);
        HeckeElement ix = x.include();
        CHECK(markov_trace(ix) == d * cx);
        CHECK(markov_trace(ix * HeckeElement::generator(n + 1, n)) == cx);
        CHECK(markov_trace(ix * HeckeElement::generator_inverse(n + 1, n)) == FactoredRat(a_pow(1)) * cx);
        CHECK(markov_trace(x * y) == markov_trace(y * x));
        // (v - v^-1)^n chi is a Laurent polynomial
        FactoredRat scaled = cx * FactoredRat(v_minus_inv()).pow(n);
        CHECK(scaled.is_laurent());
        CHECK(partial_trace(ix * y.include()) == x * y * trace_symbol_poly(1));
    }
}

TEST_CASE("two-strand torus links match the skein recursion") {
    std::vector<LaurentPoly> p = {trace_symbol_poly(2), trace_symbol_poly(1)};
    for (int k = 2; k <= 12; ++k) p.push_back(p[k - 2] + p[k - 1] * v_minus_inv());
    for (int k = 0; k <= 12; ++k) CHECK(homfly(torus_braid(2, k)) == trace_symbol_to_rat(p[k]));
}

TEST_CASE("closed braids match descending-diagram skein evaluation") {
    SkeinOracle three(3);
    for (int k = 0; k <= 7; ++k) {
        BraidWord w = torus_braid(3, k);
        CHECK(homfly(w) == trace_symbol_to_rat(three.eval(w.letters)));
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 3;
        SkeinOracle o(n);
        std::uniform_int_distribution<int> len(0, 7), gen(1, n - 1), coin(0, 1);
        BraidWord w(n, {});
        int l = len(rng);
        for (int i = 0; i < l; ++i) w.letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
        CHECK(homfly(w) == trace_symbol_to_rat(o.eval(w.letters)));
    }
}

TEST_CASE("projector trace formula examples") {
    FactoredRat one_minus_a = FactoredRat::one_minus(a_pow(1));
    CHECK(projector_trace_formula(Partition({1, 1})) ==
          one_minus_a * FactoredRat::one_minus(a_pow(1) * q_pow(-1)) /
              (FactoredRat::one_minus(q_pow(1)) * FactoredRat::one_minus(q_pow(2))));
    CHECK(projector_trace_formula(Partition({2})) ==
          one_minus_a * FactoredRat::one_minus(a_pow(1) * q_pow(1)) /
              (FactoredRat::one_minus(q_pow(1)) * FactoredRat::one_minus(q_pow(2))));
}

TEST_CASE("Young idempotents") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Idempotent> ps;
        for (const StandardTableau& t : all_syt(n)) ps.push_back(young_idempotent(t));
        HeckeElement total(n);
        LaurentPoly all_den(1);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const Idempotent& p = ps[i];
            CHECK(FactoredRat(p.denominator) == p.denominator_rat);
            CHECK(p.numerator * p.numerator == p.numerator * p.denominator);
            for (std::size_t j = 0; j < ps.size(); ++j)
                if (i != j) CHECK((p.numerator * ps[j].numerator).is_zero());
            for (int k = 2; k <= n; ++k) {
                HeckeElement lk = from_braid(jucys_murphy(k, n));
                CHECK(lk * p.numerator == p.numerator * LaurentPoly(q_pow(content(p.tableau.box(k)))));
            }
            int csum = 0;
            for (int k = 1; k <= n; ++k) {
                csum += content(p.tableau.box(k));
                HeckeElement ft = from_braid(full_twist(k, n));
                CHECK(ft * p.numerator == p.numerator * LaurentPoly(q_pow(csum)));
            }
            Partition shape = p.tableau.shape();
            CHECK(idempotent_trace(p) == projector_trace_normalization(shape) * projector_trace_formula(shape));
            LaurentPoly others(1);
            for (std::size_t j = 0; j < ps.size(); ++j)
                if (j != i) others *= ps[j].denominator;
            total += p.numerator * others;
            all_den *= p.denominator;
        }
        CHECK(total == HeckeElement::scalar(n, all_den));
    }
}

TEST_CASE("idempotents branch along addable boxes") {
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
            CHECK(p.numerator.include() * prod == rhs * p.denominator);
        }
}

TEST_CASE("idempotent size limit") {
    CHECK_THROWS_AS(young_idempotent(all_syt(7).front()), Error);
}
