#pragma once

#include <map>
#include <string>
#include <vector>

#include "fhkit/factored.hpp"
#include "fhkit/localization.hpp"
#include "fhkit/tableaux.hpp"

namespace fh {

// Polynomial in the coordinates of a chart; exponent vectors are indexed by
// the chart's generator list.
class ChartPoly {
public:
    using Exp = std::vector<int>;
    using Terms = std::map<Exp, Rational>;

    ChartPoly() = default;
    ChartPoly(std::size_t gens, const Rational& c);
    static ChartPoly gen(std::size_t gens, std::size_t i);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exp& e, const Rational& c);

    ChartPoly operator+(const ChartPoly& o) const;
    ChartPoly operator-(const ChartPoly& o) const;
    ChartPoly operator*(const ChartPoly& o) const;
    ChartPoly& operator+=(const ChartPoly& o) { return *this = *this + o; }
    bool operator==(const ChartPoly&) const = default;

private:
    Terms terms_;
};

using PolyMatrix = std::vector<std::vector<ChartPoly>>;

enum class ChartFamily { Toeplitz, Antisymmetric };
ChartFamily parse_family(const std::string& s);
StandardTableau family_tableau(ChartFamily f, int n);

// Affine chart of FHilb_n(C) around a tableau: coordinates with weights,
// relations, and lower-triangular X, Y acting on the basis e_1..e_n with
// cyclic vector e_1.
struct Chart {
    StandardTableau tableau;
    ChartKind kind;
    int n = 0;
    std::vector<std::string> names;
    std::vector<Monomial> weights;
    std::vector<ChartPoly> relations;
    PolyMatrix X, Y;
    Weights grading;  // positive on every coordinate

    std::size_t gens() const { return names.size(); }
    ChartPoly var(const std::string& name) const;
    ChartPoly constant(const Rational& c) const { return ChartPoly(gens(), c); }
    Monomial weight(const ChartPoly::Exp& e) const;
    bool contains_box(int N, int M) const;
};

// Throws UnsupportedShape when no chart is implemented. Construction checks
// that every entry of X and Y has the torus weight of its position and
// that [X, Y] vanishes modulo the relations.
Chart build_chart(const StandardTableau& t);
Chart build_chart(ChartFamily f, int n);

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

// Reduction modulo the relation ideal, degree by degree.
class ChartRing {
public:
    explicit ChartRing(const Chart& c);

    // Coordinates of p in the quotient basis of its (single) multidegree.
    std::vector<Rational> coords(const Monomial& degree, const ChartPoly& p);
    const std::vector<ChartPoly::Exp>& basis(const Monomial& degree);  // quotient monomials
    ChartPoly normal_form(const ChartPoly& p);
    bool is_zero(const ChartPoly& p) { return normal_form(p).is_zero(); }
    int dim(const Monomial& degree) { return static_cast<int>(basis(degree).size()); }

private:
    struct Piece {
        std::vector<ChartPoly::Exp> monomials;  // all of S_d
        std::vector<std::vector<Rational>> rows;  // reduced echelon basis of I_d
        std::vector<int> pivots;
        std::vector<ChartPoly::Exp> quotient;
        std::vector<int> quotient_index;  // column of each quotient monomial
    };
    const Piece& piece(const Monomial& degree);
    std::vector<ChartPoly::Exp> monomials_of(const Monomial& degree);

    const Chart& chart_;
    std::map<Monomial, Piece> pieces_;
};

// First column of X^N Y^M, in normal form.
std::vector<ChartPoly> section(const Chart& c, int N, int M);

struct KoszulEntry {
    int degree = 0;   // exterior degree
    Monomial weight;  // xi_i carries q^N t^M / z_i so that d preserves it
    int dim = 0;
};

// Homology of the Koszul complex of the section, i.e. the first page only:
// no claim is made about later differentials.
struct KoszulTable {
    int N = 0, M = 0, cutoff = 0;
    Weights grading;
    std::vector<KoszulEntry> chains, homology;  // nonzero entries only
    bool d_squared_zero = true;
    bool euler_matches = true;  // chains and homology agree degree by degree
};

// Every multidegree of grading-degree <= cutoff. CutoffTooSmall when none
// carries a chain.
KoszulTable koszul_homology(const Chart& c, int N, int M, int cutoff);

std::string render(const Chart& c, const ChartPoly& p);

}  // namespace fh
