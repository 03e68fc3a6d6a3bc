#pragma once

#include <map>
#include <vector>

#include "fhkit/braid.hpp"
#include "fhkit/factored.hpp"

namespace fh {

// Cohomology by degree. Degrees with zero cohomology are omitted.
using EquivSeries = std::map<int, FactoredRat>;

FactoredRat euler_characteristic(const EquivSeries& s);  // sum of (-1)^i H^i

// Complete homogeneous polynomial t^d + q t^(d-1) + ... + q^d (zero for d < 0).
LaurentPoly h_qt(int d);

// P^1 with fixed-point weights q and t.
EquivSeries p1_cohomology(int d);

// Reduced FHilb_2(C); the unreduced version divides by (1 - q).
EquivSeries fh2_cohomology(int k, bool reduced = true);
// The same groups assembled from the components C and P^1 through
// 0 -> q O_C -> O -> O_{P^1} -> 0.
EquivSeries fh2_cohomology_from_components(int k, bool reduced = true);

// Hom(1, FT^k) for the reduced two-strand full twist, with the t^(1/2)
// shift of the H^1 piece for k < 0 stored explicitly.
FactoredRat two_strand_hom_series(int k);

// Reduced superpolynomial of the closure of sigma^(2k+1), k >= 0: the P^1
// component of O(k) tensored with the exterior algebra of O(-1), shifted by
// t^(1/2).
FactoredRat two_strand_knot_hhh(int k, bool a_graded = true);

// H^*(FHilb_3(point), L_2^a L_3^b) through the P^1 bundle tower.
EquivSeries fh3_point_bundle(int a, int b);

struct TorusOptions {
    bool a_graded = false;
    bool unreduced = false;
};

// Closure of (sigma_1 sigma_2)^k, k >= 0 and k not divisible by 3.
FactoredRat torus_knot_hhh(int n, int k, const TorusOptions& opt = {});
// Line-bundle exponents (a, b) attached to (sigma_1 sigma_2)^k.
std::pair<int, int> torus_knot_bundle(int k);

FactoredRat figure_eight_hhh();
BraidWord figure_eight_braid();

// (1 + a/q)(1 + a/t)(qt)^d3 chi(P^1, O(d2)).
FactoredRat twisted_square_integral(int d2, int d3);

// Decategorification: a series S for an n-strand braid w maps to
// homfly(w)/homfly(unknot) as framing(n) * S|_{t=1/q, a->-a}.
struct DecatInstance {
    int k = 0;
    FactoredRat specialized;  // S|_{t=1/q, a->-a}
    FactoredRat normalized_homfly;
    bool ok = false;
};

struct DecatReport {
    int strands = 0;
    std::optional<std::pair<Rational, Monomial>> framing;  // solved on the first two instances
    std::vector<DecatInstance> instances;
    bool ok = false;
};

// Two-strand knots sigma^(2k+1) for k in ks, or three-strand torus knots
// (sigma_1 sigma_2)^k for k in ks.
DecatReport decategorification_check(int strands, const std::vector<int>& ks);

}  // namespace fh
