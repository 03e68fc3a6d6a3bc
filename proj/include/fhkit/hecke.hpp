#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fhkit/braid.hpp"
#include "fhkit/factored.hpp"
#include "fhkit/tableaux.hpp"

namespace fh {

// Permutations of {0..n-1} packed four bits per entry.
using PermCode = std::uint64_t;
PermCode perm_identity(int n);
int perm_at(PermCode p, int i);
PermCode perm_swap_positions(PermCode p, int i);  // p * s_i
std::vector<int> perm_to_vector(PermCode p, int n);
PermCode perm_from_vector(const std::vector<int>& v);
int perm_length(PermCode p, int n);
std::vector<int> reduced_word(PermCode p, int n);  // 0-based generator indices

// Element of H_n in the basis T_w. Coefficients are Laurent polynomials in
// v = q^(1/2), a and the trace symbol d = (1 - a)/(v - v^-1).
class HeckeElement {
public:
    explicit HeckeElement(int n = 1) : n_(n) {}
    static HeckeElement identity(int n);
    static HeckeElement scalar(int n, const LaurentPoly& c);
    static HeckeElement basis(int n, PermCode w);
    static HeckeElement generator(int n, int i);  // sigma_i, 1-based
    static HeckeElement generator_inverse(int n, int i);

    int n() const { return n_; }
    const std::map<PermCode, LaurentPoly>& terms() const { return terms_; }
    LaurentPoly coeff(PermCode w) const;
    bool is_zero() const { return terms_.empty(); }
    void add(PermCode w, const LaurentPoly& c);

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator*(const HeckeElement& o) const;
    HeckeElement operator*(const LaurentPoly& c) const;
    HeckeElement& operator+=(const HeckeElement& o);
    bool operator==(const HeckeElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    HeckeElement times_generator(int i) const;  // right multiplication by T_{s_i}, 0-based
    HeckeElement include() const;               // H_n -> H_{n+1}

private:
    int n_;
    std::map<PermCode, LaurentPoly> terms_;
};

LaurentPoly v_minus_inv();  // v - v^-1
LaurentPoly trace_symbol_poly(int j);  // d^j

HeckeElement from_braid(const BraidWord& w);
HeckeElement partial_trace(const HeckeElement& x);  // H_{n+1} -> H_n
LaurentPoly markov_trace_poly(const HeckeElement& x);  // value in v, a, d
// Replace d by (1 - a)/(v - v^-1).
FactoredRat trace_symbol_to_rat(const LaurentPoly& p);
FactoredRat markov_trace(const HeckeElement& x);
FactoredRat homfly(const BraidWord& w);

// P_T = numerator / denominator with the denominator a scalar.
struct Idempotent {
    StandardTableau tableau;
    HeckeElement numerator;
    LaurentPoly denominator;
    FactoredRat denominator_rat;
};
inline constexpr int kMaxIdempotentStrands = 6;
Idempotent young_idempotent(const StandardTableau& t);
FactoredRat idempotent_trace(const Idempotent& p);

FactoredRat projector_trace_formula(const Partition& p);
// chi(P_T) / projector_trace_formula(shape) = (-v)^n q^{n(lambda)}.
FactoredRat projector_trace_normalization(const Partition& p);

}  // namespace fh
