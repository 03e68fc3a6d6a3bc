#include "fhkit/laurent.hpp"

#include <vector>

#include "fhkit/errors.hpp"

namespace fh {

namespace {

Rational rat_pow(const Rational& c, int k) {
    Rational r = 1;
    Rational b = k >= 0 ? c : Rational(1) / c;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) r *= b;
    return r;
}

bool exact_sqrt(const Rational& c, Rational& out) {
    if (c < 0) return false;
    mpz_class n = c.get_num(), d = c.get_den();
    mpz_class rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return false;
    out = Rational(rn, rd);
    return true;
}

}  // namespace

Subst::Subst() {
    for (int s = 0; s < kSlots; ++s) {
        coeff_[s] = 1;
        image_[s] = Monomial();
        image_[s].e[s] = 1;
    }
}

Subst& Subst::map_unit(int slot, const Rational& coeff, const Monomial& image) {
    coeff_[slot] = coeff;
    image_[slot] = image;
    return *this;
}

Subst& Subst::map_var(int slot, const Rational& coeff, const Monomial& image) {
    if (slot != Q && slot != T) return map_unit(slot, coeff, image);
    Monomial half;
    for (int s = 0; s < kSlots; ++s) {
        if (image.e[s] % 2 != 0) fail(ErrorCode::NonMonomialSubstitution, "substitution needs a square root of " + to_string(image));
        half.e[s] = image.e[s] / 2;
    }
    Rational c;
    if (!exact_sqrt(coeff, c)) fail(ErrorCode::NonMonomialSubstitution, "substitution needs a rational square root");
    return map_unit(slot, c, half);
}

std::pair<Rational, Monomial> Subst::apply(const Monomial& m) const {
    Rational c = 1;
    Monomial r;
    for (int s = 0; s < kSlots; ++s) {
        if (m.e[s] == 0) continue;
        if (coeff_[s] != 1) c *= rat_pow(coeff_[s], m.e[s]);
        r *= image_[s].pow(m.e[s]);
    }
    return {c, r};
}

Subst Subst::t_to_inverse_q() {
    Subst s;
    s.map_unit(T, 1, Monomial::qta(-1, 0, 0));
    return s;
}

Subst Subst::negate_a() {
    Subst s;
    s.map_unit(A, -1, Monomial::var(A));
    return s;
}

Subst Subst::then(const Subst& next) const {
    Subst r;
    for (int s = 0; s < kSlots; ++s) {
        auto [c, m] = next.apply(image_[s]);
        r.coeff_[s] = coeff_[s] * c;
        r.image_[s] = m;
    }
    return r;
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace(Monomial(), Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.emplace(m, c);
}

LaurentPoly LaurentPoly::one_minus(const Monomial& m) {
    LaurentPoly p(1);
    p.add_term(m, -1);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Monomial& m) const {
    LaurentPoly r;
    for (const auto& [m1, c1] : terms_) r.terms_.emplace_hint(r.terms_.end(), m1 * m, c1);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const Subst& s) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        auto [k, img] = s.apply(m);
        r.add_term(img, c * k);
    }
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_one_minus(const Monomial& m) const {
    if (m.is_one()) return std::nullopt;
    if (!m.lex_positive()) {
        // P/(1 - m) = -m^-1 P/(1 - m^-1)
        auto q = divide_one_minus(m.inv());
        if (!q) return std::nullopt;
        return -(*q * m.inv());
    }
    int i0 = 0;
    while (m.e[i0] == 0) ++i0;
    const int step = m.e[i0];
    auto floordiv = [](int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    std::map<Monomial, std::map<int, Rational>> chains;
    for (const auto& [e, c] : terms_) {
        int k = floordiv(e.e[i0], step);
        chains[e / m.pow(k)][k] = c;
    }
    LaurentPoly q;
    for (const auto& [rep, chain] : chains) {
        Rational acc = 0;
        int last = chain.rbegin()->first;
        for (int k = chain.begin()->first; k < last; ++k) {
            auto it = chain.find(k);
            if (it != chain.end()) acc += it->second;
            q.add_term(rep * m.pow(k), acc);
        }
        acc += chain.rbegin()->second;
        if (acc != 0) return std::nullopt;
    }
    return q;
}

std::map<int, LaurentPoly> LaurentPoly::split_by(int slot) const {
    std::map<int, LaurentPoly> out;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest.e[slot] = 0;
        out[m.e[slot]].add_term(rest, c);
    }
    return out;
}

bool LaurentPoly::involves(int slot) const {
    for (const auto& [m, c] : terms_)
        if (m.e[slot] != 0) return true;
    return false;
}

LaurentPoly LaurentPoly::dual() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m.inv(), c);
    return r;
}

}  // namespace fh
