#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fhkit/laurent.hpp"

namespace fh {

struct Weights {
    Rational wq{1}, wt{1}, wa{1};
    Rational degree(const Monomial& m) const;
};

class GradedSeries;

// coeff * mono * prod (1 - m)^k over num / prod (1 - m)^k over den
// * rnum / rden. Public operations always return normalized values.
class FactoredRat {
public:
    using Factors = std::map<Monomial, int>;

    FactoredRat();  // zero
    FactoredRat(long c);  // NOLINT
    FactoredRat(const Rational& c);  // NOLINT
    FactoredRat(const Monomial& m, const Rational& c = 1);  // NOLINT
    FactoredRat(const LaurentPoly& p);  // NOLINT

    static FactoredRat one_minus(const Monomial& m);             // 1 - m
    static FactoredRat inv_one_minus(const Monomial& m);         // 1/(1 - m)
    // Unnormalized constructor; call normalize() to validate.
    static FactoredRat raw(const Rational& c, const Monomial& mono, Factors num, Factors den,
                           LaurentPoly rnum = LaurentPoly(1), LaurentPoly rden = LaurentPoly(1));

    FactoredRat normalize() const;

    const Rational& coeff() const { return coeff_; }
    const Monomial& mono() const { return mono_; }
    const Factors& num() const { return num_; }
    const Factors& den() const { return den_; }
    const LaurentPoly& rnum() const { return rnum_; }
    const LaurentPoly& rden() const { return rden_; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_monomial() const;  // nonzero rational times a monomial, in stored form
    // Value-level test: c * m with the expanded numerator and denominator
    // compared directly, independent of the stored form.
    std::optional<std::pair<Rational, Monomial>> as_monomial() const;
    bool is_laurent() const;   // trivial denominator
    LaurentPoly numerator() const;    // everything above the bar, expanded
    LaurentPoly denominator() const;  // everything below the bar, expanded
    LaurentPoly to_laurent() const;   // requires is_laurent()

    FactoredRat operator*(const FactoredRat& o) const;
    FactoredRat operator/(const FactoredRat& o) const;
    FactoredRat operator+(const FactoredRat& o) const;
    FactoredRat operator-(const FactoredRat& o) const;
    FactoredRat operator-() const;
    FactoredRat pow(int k) const;
    FactoredRat& operator*=(const FactoredRat& o) { return *this = *this * o; }
    FactoredRat& operator+=(const FactoredRat& o) { return *this = *this + o; }
    FactoredRat& operator-=(const FactoredRat& o) { return *this = *this - o; }
    FactoredRat& operator/=(const FactoredRat& o) { return *this = *this / o; }
    bool operator==(const FactoredRat& o) const;
    bool operator!=(const FactoredRat& o) const { return !(*this == o); }
    // Same stored form, not just the same value.
    bool same_form(const FactoredRat& o) const;

    FactoredRat specialize(const Subst& s) const;
    FactoredRat dual() const;
    bool involves(int slot) const;

    GradedSeries expand(const Weights& w, int cutoff) const;

private:
    Rational coeff_{0};
    Monomial mono_{};
    Factors num_, den_;
    LaurentPoly rnum_{1}, rden_{1};
};

FactoredRat sum(const std::vector<FactoredRat>& xs);

// Truncated expansion in the cone where every Weights-degree is >= a lower bound.
class GradedSeries {
public:
    GradedSeries(Weights w, int cutoff) : w_(w), cutoff_(cutoff) {}

    const Weights& weights() const { return w_; }
    int cutoff() const { return cutoff_; }
    const LaurentPoly& poly() const { return poly_; }
    void set_poly(LaurentPoly p);  // drops terms above the cutoff

    GradedSeries operator*(const GradedSeries& o) const;
    GradedSeries operator+(const GradedSeries& o) const;
    bool operator==(const GradedSeries& o) const;

private:
    Weights w_;
    int cutoff_;
    LaurentPoly poly_;
};

}  // namespace fh
