#include "fhkit/hecke.hpp"

#include <algorithm>
#include <cstdlib>

#include "fhkit/errors.hpp"

namespace fh {

PermCode perm_identity(int n) {
    PermCode p = 0;
    for (int i = 0; i < n; ++i) p |= static_cast<PermCode>(i) << (4 * i);
    return p;
}

int perm_at(PermCode p, int i) { return static_cast<int>((p >> (4 * i)) & 15u); }

PermCode perm_swap_positions(PermCode p, int i) {
    PermCode x = (p >> (4 * i)) & 15u, y = (p >> (4 * (i + 1))) & 15u;
    p &= ~(static_cast<PermCode>(255) << (4 * i));
    return p | (x << (4 * (i + 1))) | (y << (4 * i));
}

std::vector<int> perm_to_vector(PermCode p, int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = perm_at(p, i);
    return v;
}

PermCode perm_from_vector(const std::vector<int>& v) {
    PermCode p = 0;
    for (std::size_t i = 0; i < v.size(); ++i) p |= static_cast<PermCode>(v[i]) << (4 * i);
    return p;
}

int perm_length(PermCode p, int n) {
    int inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm_at(p, i) > perm_at(p, j)) ++inv;
    return inv;
}

std::vector<int> reduced_word(PermCode p, int n) {
    std::vector<int> w;
    for (;;) {
        int i = 0;
        while (i + 1 < n && perm_at(p, i) < perm_at(p, i + 1)) ++i;
        if (i + 1 >= n) break;
        w.push_back(i);
        p = perm_swap_positions(p, i);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

LaurentPoly v_minus_inv() {
    return LaurentPoly(Monomial::qta(1, 0)) - LaurentPoly(Monomial::qta(-1, 0));
}

LaurentPoly trace_symbol_poly(int j) { return LaurentPoly(Monomial::var(D, j)); }

HeckeElement HeckeElement::identity(int n) { return scalar(n, LaurentPoly(1)); }

HeckeElement HeckeElement::scalar(int n, const LaurentPoly& c) {
    HeckeElement x(n);
    x.add(perm_identity(n), c);
    return x;
}

HeckeElement HeckeElement::basis(int n, PermCode w) {
    HeckeElement x(n);
    x.add(w, LaurentPoly(1));
    return x;
}

HeckeElement HeckeElement::generator(int n, int i) {
    if (i < 1 || i >= n) fail(ErrorCode::StrandMismatch, "generator index out of range");
    return basis(n, perm_swap_positions(perm_identity(n), i - 1));
}

HeckeElement HeckeElement::generator_inverse(int n, int i) {
    return generator(n, i) - scalar(n, v_minus_inv());
}

LaurentPoly HeckeElement::coeff(PermCode w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(PermCode w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    HeckeElement r = *this;
    return r += o;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    HeckeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, -c);
    return r;
}

HeckeElement HeckeElement::operator*(const LaurentPoly& c) const {
    HeckeElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.add(w, x * c);
    return r;
}

HeckeElement HeckeElement::times_generator(int i) const {
    HeckeElement r(n_);
    const LaurentPoly g = v_minus_inv();
    for (const auto& [w, c] : terms_) {
        r.add(perm_swap_positions(w, i), c);
        if (perm_at(w, i) > perm_at(w, i + 1)) r.add(w, c * g);
    }
    return r;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
    if (n_ != o.n_) fail(ErrorCode::StrandMismatch, "Hecke algebras of different rank");
    HeckeElement r(n_);
    for (const auto& [u, c] : o.terms_) {
        HeckeElement x = *this;
        for (int i : reduced_word(u, n_)) x = x.times_generator(i);
        r += x * c;
    }
    return r;
}

HeckeElement HeckeElement::include() const {
    HeckeElement r(n_ + 1);
    for (const auto& [w, c] : terms_) r.add(w | (static_cast<PermCode>(n_) << (4 * n_)), c);
    return r;
}

HeckeElement from_braid(const BraidWord& w) {
    HeckeElement x = HeckeElement::identity(w.strands);
    const LaurentPoly g = v_minus_inv();
    for (int l : w.letters) {
        int i = std::abs(l) - 1;
        if (i < 0 || i + 1 >= w.strands) fail(ErrorCode::StrandMismatch, "letter out of range");
        HeckeElement y = x.times_generator(i);
        if (l < 0) y = y - x * g;
        x = std::move(y);
    }
    return x;
}

// T_w = T_u T_c with u fixing the last strand and c = s_n ... s_j; the
// trace of T_u T_c is T_u T_{s_{n-1} ... s_j}, or d T_u when c is trivial.
HeckeElement partial_trace(const HeckeElement& x) {
    const int n = x.n() - 1;
    if (n < 1) fail(ErrorCode::StrandMismatch, "partial trace needs at least two strands");
    const LaurentPoly d = trace_symbol_poly(1);
    HeckeElement r(n);
    for (const auto& [w, c] : x.terms()) {
        int p = 0;
        while (perm_at(w, p) != n) ++p;
        PermCode u = w;
        for (int i = p; i < n; ++i) u = perm_swap_positions(u, i);
        PermCode low = u & ~(static_cast<PermCode>(15) << (4 * n));
        if (p == n) {
            r.add(low, c * d);
            continue;
        }
        HeckeElement y = HeckeElement::basis(n, low);
        for (int i = n - 2; i >= p; --i) y = y.times_generator(i);
        r += y * c;
    }
    return r;
}

LaurentPoly markov_trace_poly(const HeckeElement& x) {
    HeckeElement y = x;
    while (y.n() > 1) y = partial_trace(y);
    return y.coeff(perm_identity(1)) * trace_symbol_poly(1);
}

FactoredRat trace_symbol_to_rat(const LaurentPoly& p) {
    // d = -v (1 - a)/(1 - q)
    const FactoredRat d = FactoredRat(Monomial::qta(1, 0), -1) * FactoredRat::one_minus(a_pow(1)) /
                          FactoredRat::one_minus(q_pow(1));
    std::vector<FactoredRat> parts;
    for (const auto& [j, c] : p.split_by(D)) parts.push_back(FactoredRat(c) * d.pow(j));
    return sum(parts);
}

FactoredRat markov_trace(const HeckeElement& x) { return trace_symbol_to_rat(markov_trace_poly(x)); }

FactoredRat homfly(const BraidWord& w) { return markov_trace(from_braid(w)); }

Idempotent young_idempotent(const StandardTableau& t) {
    const int n = t.size();
    if (n < 1 || n > kMaxIdempotentStrands)
        fail(ErrorCode::UnsupportedShape, "idempotents are available for 1 to 6 boxes");
    HeckeElement num = HeckeElement::identity(n);
    LaurentPoly den(1);
    FactoredRat den_rat(1);
    for (int k = 2; k <= n; ++k) {
        HeckeElement lk = from_braid(jucys_murphy(k, n));
        Partition sub = t.restrict(k - 1).shape();
        int ck = content(t.box(k));
        for (const Box& b : corners(sub).addable) {
            int c = content(b);
            if (c == ck) continue;
            num = num * (lk - HeckeElement::scalar(n, LaurentPoly(q_pow(c))));
            den *= LaurentPoly(q_pow(ck)) - LaurentPoly(q_pow(c));
            den_rat *= FactoredRat(q_pow(ck)) * FactoredRat::one_minus(q_pow(c - ck));
        }
    }
    return {t, num, den, den_rat};
}

FactoredRat idempotent_trace(const Idempotent& p) {
    return markov_trace(p.numerator) / p.denominator_rat;
}

FactoredRat projector_trace_formula(const Partition& p) {
    FactoredRat r(1);
    for (const Box& b : p.boxes()) {
        r *= FactoredRat::one_minus(a_pow(1) * q_pow(-content(b)));
        r /= FactoredRat::one_minus(q_pow(hook(p, b)));
    }
    return r;
}

FactoredRat projector_trace_normalization(const Partition& p) {
    int n = p.size();
    return FactoredRat(Monomial::qta(n + 2 * n_statistic(p), 0), n % 2 ? -1 : 1);
}

}  // namespace fh
