#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "fhkit/monomial.hpp"

namespace fh {

using Rational = mpq_class;

// Monomial-to-monomial change of variables. Each slot's stored unit maps
// to coeff * image; for q and t the stored unit is the square root.
class Subst {
public:
    Subst();

    // Map the full variable in `slot` to coeff * image. For q and t this
    // needs an exact square root of the image.
    Subst& map_var(int slot, const Rational& coeff, const Monomial& image);
    // Map the stored unit directly (q^(1/2) for q, t^(1/2) for t).
    Subst& map_unit(int slot, const Rational& coeff, const Monomial& image);

    std::pair<Rational, Monomial> apply(const Monomial& m) const;

    static Subst t_to_inverse_q();
    static Subst negate_a();
    Subst then(const Subst& next) const;  // apply *this, then next

private:
    std::array<Rational, kSlots> coeff_;
    std::array<Monomial, kSlots> image_;
};

class LaurentPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: constant polynomial
    LaurentPoly(const Rational& c);
    LaurentPoly(const Monomial& m, const Rational& c = 1);

    static LaurentPoly one_minus(const Monomial& m);  // 1 - m

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Monomial& m) const;
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly pow(unsigned k) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    LaurentPoly substitute(const Subst& s) const;
    // Quotient by (1 - m) if it divides exactly.
    std::optional<LaurentPoly> divide_one_minus(const Monomial& m) const;
    // Coefficient of slot^k, as a polynomial in the remaining slots.
    std::map<int, LaurentPoly> split_by(int slot) const;
    bool involves(int slot) const;
    // Invert every variable (Serre-duality involution).
    LaurentPoly dual() const;

private:
    Terms terms_;
};

}  // namespace fh
