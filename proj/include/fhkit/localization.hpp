#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fhkit/factored.hpp"
#include "fhkit/tableaux.hpp"

namespace fh {

// (1 - x)(1 - qtx)/((1 - qx)(1 - tx))
FactoredRat zeta(const Monomial& x);

// Product of zeta(z_i/z_j) over i < j with symbolic z_1..z_n (n <= 5).
FactoredRat zeta_product_symbolic(int n);

enum class MagicVariant { AsPrinted, DropFirstDenominator, ReducedByUnknot };
const char* variant_name(MagicVariant v);
MagicVariant parse_variant(const std::string& s);

struct MagicOptions {
    bool a_grading = true;
    MagicVariant variant = MagicVariant::AsPrinted;
    bool swap_zeta = false;  // use zeta(z_j/z_i) in place of zeta(z_i/z_j)
};

struct FixedPointTerm {
    StandardTableau tableau;
    FactoredRat value;
};

struct TermPole {
    StandardTableau tableau;
    std::string factor;
};

struct MagicSumReport {
    std::vector<FixedPointTerm> terms;  // terms that normalized
    std::vector<TermPole> poles;
    std::optional<FactoredRat> total;   // set only when there are no poles
};

MagicSumReport magic_sum(int n, const std::vector<int>& twists, const MagicOptions& opt = {});

enum class ChartFlavor { C2, C, Point };
const char* flavor_name(ChartFlavor f);
ChartFlavor parse_flavor(const std::string& s);

struct ChartGenerator {
    std::string name;
    Monomial weight;
    bool diagonal = false;  // set to zero on the punctual chart
};

struct ChartRelation {
    std::string name;
    Monomial weight;
    bool vanishes_at_point = false;
};

enum class ChartKind { Toeplitz, Antisymmetric, HookTQ, HookQT };
const char* chart_kind_name(ChartKind k);

struct ChartPresentation {
    ChartKind kind;
    int n = 0;
    std::vector<ChartGenerator> generators;
    std::vector<ChartRelation> relations;
};

// Toeplitz: boxes along t. Antisymmetric: boxes along q. The two hooks are
// told apart by their box weights (1, t, q) and (1, q, t).
ChartPresentation chart_presentation(const StandardTableau& t);
// Positive grading in which every generator weight has positive degree.
Weights chart_weights(const ChartPresentation& p);
FactoredRat presentation_series(const ChartPresentation& p, ChartFlavor f);
FactoredRat chart_series(const StandardTableau& t, ChartFlavor f);
FactoredRat exterior_factor(const StandardTableau& t);  // prod (1 + a z_i^-1)
FactoredRat endomorphism_series(const StandardTableau& t, ChartFlavor f);

struct HookSpecialization {
    FactoredRat specialized;
    Monomial discrepancy;  // mu(T)
};
HookSpecialization hook_length_specialization(const StandardTableau& t);

struct MarkovCalibration {
    int a_sign = 1;
    int a_power = 1;
    int q_half_shift = 0;  // a -> a_sign * q^(q_half_shift/2) * a^a_power
    Monomial nu;
};

struct MarkovCheckEntry {
    StandardTableau tableau;
    Monomial mu;
    FactoredRat lhs, rhs;
    bool ok = false;
};

struct MarkovCheckReport {
    std::optional<MarkovCalibration> calibration;
    std::vector<MarkovCheckEntry> entries;
    bool ok = false;
};

// Searches a -> +-q^(k/2) a^(+-1) with |k| <= 4 for a calibration under which
// endomorphism_series(T, C) at t = 1/q equals nu * mu(T) * hook-content
// product for every tableau given.
MarkovCheckReport markov_trace_identity_check(const std::vector<StandardTableau>& ts);

// Tableaux with implemented charts among all tableaux of size <= n.
std::vector<StandardTableau> implemented_tableaux(int max_n);

}  // namespace fh
