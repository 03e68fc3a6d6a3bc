#include "fhkit/factored.hpp"

#include <algorithm>

#include "fhkit/errors.hpp"
#include "fhkit/io.hpp"

namespace fh {

namespace {

void add_factor(FactoredRat::Factors& f, const Monomial& m, int k) {
    if (k == 0) return;
    int& x = f[m];
    x += k;
    if (x == 0) f.erase(m);
}

LaurentPoly expand_factors(const FactoredRat::Factors& f) {
    LaurentPoly r(1);
    for (const auto& [m, k] : f) r *= LaurentPoly::one_minus(m).pow(k);
    return r;
}

// Recognize c * M * (1 - m) among two-term polynomials.
bool as_binomial_factor(const LaurentPoly& p, Rational& c, Monomial& mono, Monomial& m) {
    if (p.size() != 2) return false;
    auto it = p.terms().begin();
    auto [m1, c1] = *it++;
    auto [m2, c2] = *it;
    if (c1 != -c2) return false;
    c = c1;
    mono = m1;
    m = m2 / m1;
    return true;
}

}  // namespace

Rational Weights::degree(const Monomial& m) const {
    Rational hq(m.dq2(), 2), ht(m.dt2(), 2);
    hq.canonicalize();
    ht.canonicalize();
    return wq * hq + wt * ht + wa * m.da();
}

FactoredRat::FactoredRat() = default;
FactoredRat::FactoredRat(long c) : FactoredRat(Rational(c)) {}
FactoredRat::FactoredRat(const Rational& c) : coeff_(c) {}
FactoredRat::FactoredRat(const Monomial& m, const Rational& c) : coeff_(c), mono_(c == 0 ? Monomial() : m) {}
FactoredRat::FactoredRat(const LaurentPoly& p) {
    *this = raw(1, Monomial(), {}, {}, p).normalize();
}

FactoredRat FactoredRat::one_minus(const Monomial& m) { return raw(1, Monomial(), {{m, 1}}, {}).normalize(); }

FactoredRat FactoredRat::inv_one_minus(const Monomial& m) { return raw(1, Monomial(), {}, {{m, 1}}).normalize(); }

FactoredRat FactoredRat::raw(const Rational& c, const Monomial& mono, Factors num, Factors den, LaurentPoly rnum,
                             LaurentPoly rden) {
    FactoredRat x;
    x.coeff_ = c;
    x.mono_ = mono;
    x.num_ = std::move(num);
    x.den_ = std::move(den);
    x.rnum_ = std::move(rnum);
    x.rden_ = std::move(rden);
    return x;
}

FactoredRat FactoredRat::normalize() const {
    if (rden_.is_zero()) fail(ErrorCode::ZeroDenominator, "zero residual denominator");
    FactoredRat x;
    x.coeff_ = coeff_;
    x.mono_ = mono_;
    x.rnum_ = rnum_;
    x.rden_ = rden_;
    bool zero_num = coeff_ == 0 || rnum_.is_zero();
    for (const auto& [m, k] : den_) {
        if (m.is_one()) fail(ErrorCode::ZeroDenominator, "denominator factor (1 - 1)");
        if (m.lex_positive()) {
            add_factor(x.den_, m, k);
        } else {
            // 1/(1 - m) = -m^-1/(1 - m^-1)
            if (k % 2) x.coeff_ = -x.coeff_;
            x.mono_ = x.mono_ * m.pow(-k);
            add_factor(x.den_, m.inv(), k);
        }
    }
    for (const auto& [m, k] : num_) {
        if (m.is_one()) {
            zero_num = true;
            continue;
        }
        if (m.lex_positive()) {
            add_factor(x.num_, m, k);
        } else {
            // (1 - m) = -m (1 - m^-1)
            if (k % 2) x.coeff_ = -x.coeff_;
            x.mono_ = x.mono_ * m.pow(k);
            add_factor(x.num_, m.inv(), k);
        }
    }
    if (zero_num) return FactoredRat();

    // Cancel matching factors.
    for (auto it = x.num_.begin(); it != x.num_.end();) {
        auto jt = x.den_.find(it->first);
        if (jt == x.den_.end()) {
            ++it;
            continue;
        }
        int c = std::min(it->second, jt->second);
        it->second -= c;
        jt->second -= c;
        if (jt->second == 0) x.den_.erase(jt);
        if (it->second == 0)
            it = x.num_.erase(it);
        else
            ++it;
    }

    // (1 - m^j)/(1 - m) = 1 + m + ... + m^(j-1)
    for (auto dt = x.den_.begin(); dt != x.den_.end();) {
        bool erased = false;
        for (auto it = x.num_.begin(); it != x.num_.end(); ++it) {
            int j = 0;
            for (int s = 0; s < kSlots; ++s) {
                if (dt->first.e[s] == 0) {
                    if (it->first.e[s] != 0) { j = 0; break; }
                    continue;
                }
                if (it->first.e[s] % dt->first.e[s] != 0) { j = 0; break; }
                int r = it->first.e[s] / dt->first.e[s];
                if (r < 2 || (j != 0 && r != j)) { j = 0; break; }
                j = r;
            }
            if (j < 2) continue;
            LaurentPoly g;
            for (int i = 0; i < j; ++i) g.add_term(dt->first.pow(i), 1);
            x.rnum_ *= g;
            if (--it->second == 0) x.num_.erase(it);
            if (--dt->second == 0) {
                dt = x.den_.erase(dt);
                erased = true;
            }
            break;
        }
        if (!erased) ++dt;
    }

    // Residual denominator: absorb monomials, cancel against numerator factors.
    if (x.rden_.is_monomial()) {
        const auto& [m, c] = *x.rden_.terms().begin();
        x.coeff_ /= c;
        x.mono_ = x.mono_ / m;
        x.rden_ = LaurentPoly(1);
    }
    if (!x.rden_.is_constant()) {
        for (auto it = x.num_.begin(); it != x.num_.end();) {
            auto q = x.rden_.divide_one_minus(it->first);
            if (q) {
                x.rden_ = *q;
                if (--it->second == 0) {
                    it = x.num_.erase(it);
                    continue;
                }
            } else {
                ++it;
            }
        }
        if (x.rden_.is_monomial()) {
            const auto& [m, c] = *x.rden_.terms().begin();
            x.coeff_ /= c;
            x.mono_ = x.mono_ / m;
            x.rden_ = LaurentPoly(1);
        }
    }

    // Residual numerator: divide out denominator factors where exact.
    for (auto it = x.den_.begin(); it != x.den_.end() && !x.rnum_.is_constant();) {
        auto q = x.rnum_.divide_one_minus(it->first);
        if (q) {
            x.rnum_ = *q;
            if (--it->second == 0) it = x.den_.erase(it);
        } else {
            ++it;
        }
    }
    // A numerator factor times the residual may still divide a denominator
    // factor, e.g. (1 - q)(1 + q) over (1 - q^2).
    for (bool changed = !x.rnum_.is_constant(); changed;) {
        changed = false;
        for (auto dt = x.den_.begin(); dt != x.den_.end() && !changed; ++dt)
            for (auto it = x.num_.begin(); it != x.num_.end(); ++it) {
                auto q = (x.rnum_ * LaurentPoly::one_minus(it->first)).divide_one_minus(dt->first);
                if (!q) continue;
                x.rnum_ = *q;
                if (--it->second == 0) x.num_.erase(it);
                if (--dt->second == 0) x.den_.erase(dt);
                changed = true;
                break;
            }
    }
    if (x.rnum_.is_monomial()) {
        const auto& [m, c] = *x.rnum_.terms().begin();
        x.coeff_ *= c;
        x.mono_ *= m;
        x.rnum_ = LaurentPoly(1);
    } else {
        Rational c;
        Monomial mono, m;
        if (as_binomial_factor(x.rnum_, c, mono, m) && !m.is_one()) {
            x.rnum_ = LaurentPoly(1);
            FactoredRat f = raw(x.coeff_ * c, x.mono_ * mono, x.num_, x.den_, LaurentPoly(1), x.rden_);
            add_factor(f.num_, m, 1);
            return f.normalize();
        }
    }
    return x;
}

bool FactoredRat::is_monomial() const { return coeff_ != 0 && num_.empty() && den_.empty() && rnum_ == LaurentPoly(1) && rden_ == LaurentPoly(1); }

std::optional<std::pair<Rational, Monomial>> FactoredRat::as_monomial() const {
    if (is_zero()) return std::nullopt;
    LaurentPoly n = numerator(), d = denominator();
    const auto& [mn, cn] = *n.terms().begin();
    const auto& [md, cd] = *d.terms().begin();
    Rational c = cn / cd;
    c.canonicalize();
    Monomial m = mn / md;
    if (!(d * m * c == n)) return std::nullopt;
    return std::make_pair(c, m);
}

bool FactoredRat::is_laurent() const { return den_.empty() && rden_ == LaurentPoly(1); }

LaurentPoly FactoredRat::numerator() const {
    if (coeff_ == 0) return {};
    return LaurentPoly(mono_, coeff_) * expand_factors(num_) * rnum_;
}

LaurentPoly FactoredRat::denominator() const { return expand_factors(den_) * rden_; }

LaurentPoly FactoredRat::to_laurent() const {
    if (!is_laurent()) fail(ErrorCode::NotExpandable, "not a Laurent polynomial: " + render(*this));
    return numerator();
}

FactoredRat FactoredRat::operator*(const FactoredRat& o) const {
    if (is_zero() || o.is_zero()) return {};
    FactoredRat x = raw(coeff_ * o.coeff_, mono_ * o.mono_, num_, den_, rnum_ * o.rnum_, rden_ * o.rden_);
    for (const auto& [m, k] : o.num_) add_factor(x.num_, m, k);
    for (const auto& [m, k] : o.den_) add_factor(x.den_, m, k);
    return x.normalize();
}

FactoredRat FactoredRat::operator/(const FactoredRat& o) const {
    if (o.is_zero()) fail(ErrorCode::ZeroDenominator, "division by zero");
    if (is_zero()) return {};
    FactoredRat x = raw(coeff_ / o.coeff_, mono_ / o.mono_, num_, den_, rnum_ * o.rden_, rden_ * o.rnum_);
    for (const auto& [m, k] : o.num_) add_factor(x.den_, m, k);
    for (const auto& [m, k] : o.den_) add_factor(x.num_, m, k);
    return x.normalize();
}

FactoredRat FactoredRat::operator-() const {
    FactoredRat x = *this;
    x.coeff_ = -x.coeff_;
    return x;
}

FactoredRat FactoredRat::operator+(const FactoredRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Factors lcm = den_;
    for (const auto& [m, k] : o.den_) {
        int& x = lcm[m];
        x = std::max(x, k);
    }
    auto lifted = [&](const FactoredRat& y) {
        Factors extra;
        for (const auto& [m, k] : lcm) {
            auto it = y.den_.find(m);
            int have = it == y.den_.end() ? 0 : it->second;
            if (k > have) extra[m] = k - have;
        }
        return y.numerator() * expand_factors(extra);
    };
    LaurentPoly n1 = lifted(*this), n2 = lifted(o);
    LaurentPoly rden = rden_ * o.rden_;
    if (!(rden_ == o.rden_)) {
        n1 *= o.rden_;
        n2 *= rden_;
    } else {
        rden = rden_;
    }
    return raw(1, Monomial(), {}, lcm, n1 + n2, rden).normalize();
}

FactoredRat FactoredRat::operator-(const FactoredRat& o) const { return *this + (-o); }

FactoredRat FactoredRat::pow(int k) const {
    if (k < 0) return FactoredRat(1) / pow(-k);
    FactoredRat r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

bool FactoredRat::operator==(const FactoredRat& o) const {
    if (same_form(o)) return true;
    return (*this - o).is_zero();
}

bool FactoredRat::same_form(const FactoredRat& o) const {
    return coeff_ == o.coeff_ && mono_ == o.mono_ && num_ == o.num_ && den_ == o.den_ && rnum_ == o.rnum_ &&
           rden_ == o.rden_;
}

FactoredRat FactoredRat::specialize(const Subst& s) const {
    if (is_zero()) return {};
    auto [c0, m0] = s.apply(mono_);
    FactoredRat x = raw(coeff_ * c0, m0, {}, {}, rnum_.substitute(s), rden_.substitute(s));
    for (const auto& [m, k] : num_) {
        auto [c, img] = s.apply(m);
        if (c == 1)
            add_factor(x.num_, img, k);
        else
            x.rnum_ *= (LaurentPoly(1) - LaurentPoly(img, c)).pow(k);
    }
    for (const auto& [m, k] : den_) {
        auto [c, img] = s.apply(m);
        if (c == 1)
            add_factor(x.den_, img, k);
        else
            x.rden_ *= (LaurentPoly(1) - LaurentPoly(img, c)).pow(k);
    }
    return x.normalize();
}

FactoredRat FactoredRat::dual() const {
    if (is_zero()) return {};
    FactoredRat x = raw(coeff_, mono_.inv(), {}, {}, rnum_.dual(), rden_.dual());
    for (const auto& [m, k] : num_) add_factor(x.num_, m.inv(), k);
    for (const auto& [m, k] : den_) add_factor(x.den_, m.inv(), k);
    return x.normalize();
}

bool FactoredRat::involves(int slot) const {
    if (mono_.e[slot] != 0 || rnum_.involves(slot) || rden_.involves(slot)) return true;
    for (const auto& [m, k] : num_)
        if (m.e[slot]) return true;
    for (const auto& [m, k] : den_)
        if (m.e[slot]) return true;
    return false;
}

FactoredRat sum(const std::vector<FactoredRat>& xs) {
    FactoredRat r;
    for (const auto& x : xs) r += x;
    return r;
}

GradedSeries FactoredRat::expand(const Weights& w, int cutoff) const {
    GradedSeries out(w, cutoff);
    if (is_zero()) return out;
    if (!rden_.is_constant()) fail(ErrorCode::NotExpandable, "residual denominator is not a product of (1 - m) factors");
    std::vector<Monomial> geo;
    Rational sign = 1;
    Monomial shift;
    for (const auto& [m, k] : den_) {
        Rational d = w.degree(m);
        Monomial g = m;
        if (d == 0) fail(ErrorCode::NotExpandable, "denominator factor (1 - " + render_monomial(m) + ") has weight-degree 0");
        for (int s = D; s < kSlots; ++s)
            if (m.e[s] != 0) fail(ErrorCode::NotExpandable, "denominator involves a symbol with no grading");
        if (d < 0) {
            // 1/(1 - m) = -m^-1 / (1 - m^-1)
            g = m.inv();
            if (k % 2) sign = -sign;
            shift *= g.pow(k);
        }
        for (int i = 0; i < k; ++i) geo.push_back(g);
    }
    LaurentPoly acc = numerator() * shift * (sign / rden_.terms().begin()->second);
    auto trunc = [&](LaurentPoly& p) {
        LaurentPoly r;
        for (const auto& [m, c] : p.terms())
            if (w.degree(m) <= cutoff) r.add_term(m, c);
        p = r;
    };
    trunc(acc);
    for (const Monomial& g : geo) {
        if (acc.is_zero()) break;
        Rational lo = w.degree(acc.terms().begin()->first);
        for (const auto& [m, c] : acc.terms()) lo = std::min(lo, w.degree(m));
        Rational dg = w.degree(g);
        LaurentPoly next;
        LaurentPoly cur = acc;
        for (int j = 0; lo + dg * j <= cutoff; ++j) {
            next += cur;
            cur = cur * g;
            trunc(cur);
            if (cur.is_zero()) break;
        }
        acc = next;
    }
    out.set_poly(acc);
    return out;
}

void GradedSeries::set_poly(LaurentPoly p) {
    LaurentPoly r;
    for (const auto& [m, c] : p.terms())
        if (w_.degree(m) <= cutoff_) r.add_term(m, c);
    poly_ = std::move(r);
}

namespace {

Rational lower_bound(const GradedSeries& s) {
    if (s.poly().is_zero()) return Rational(s.cutoff());
    Rational lo = s.weights().degree(s.poly().terms().begin()->first);
    for (const auto& [m, c] : s.poly().terms()) lo = std::min(lo, s.weights().degree(m));
    return lo;
}

int floor_int(const Rational& r) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return static_cast<int>(f.get_si());
}

}  // namespace

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
    Rational lx = std::min(lower_bound(*this), Rational(0)), ly = std::min(lower_bound(o), Rational(0));
    int c = std::min(floor_int(cutoff_ + ly), floor_int(o.cutoff_ + lx));
    GradedSeries r(w_, c);
    r.set_poly(poly_ * o.poly_);
    return r;
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
    GradedSeries r(w_, std::min(cutoff_, o.cutoff_));
    r.set_poly(poly_ + o.poly_);
    return r;
}

bool GradedSeries::operator==(const GradedSeries& o) const {
    int c = std::min(cutoff_, o.cutoff_);
    GradedSeries a(w_, c), b(w_, c);
    a.set_poly(poly_);
    b.set_poly(o.poly_);
    return a.poly_ == b.poly_;
}

}  // namespace fh
