#pragma once

#include <array>
#include <vector>

#include "fhkit/factored.hpp"

namespace fh {

// K-theory classes are FactoredRat values in a line-bundle symbol l (one of
// the slots l1..l4) with coefficients in q, t, a and the Chern roots r_i.
using KClass = FactoredRat;

// Projective bundle P(E) -> B with O(1) = l. The kernel is the generating
// function sum_k push(l^k) z^-k, written as a rational function of z = l.
struct ProjBundle {
    int ell = L2;
    KClass kernel;
};

// One step FHilb_{n+1}(C) -> FHilb_n(C) x C with Chern roots `roots` of T_n
// and l = L_{n+1}:
// (1 - 1/l)^-1 prod_i (1 - qt r_i/l)(1 - r_i/l) / ((1 - q r_i/l)(1 - t r_i/l)).
ProjBundle tower_step(const std::vector<Monomial>& roots, int ell);
// The same with symbolic roots r_1..r_n and l = l_{n+1} (n <= 3).
ProjBundle tower_step(int n);
// P(E) for a bundle E that splits into the given line classes.
ProjBundle split_bundle(const std::vector<Monomial>& classes, int ell);

// Coefficient of l^0 in f * kernel expanded at l ~ infinity, minus the same
// at l ~ 0. f may carry (1 - m)^-1 factors in l; any other l-dependence of
// the denominator reports KernelNotExpandable.
KClass push(const KClass& f, const ProjBundle& p);
KClass push(const KClass& f, int n);

// [O_{Z_n}] = (1 - q)/(1 - qt r_n/l_{n+1}) on FHilb_{n+1}.
KClass zn_class(int n);
// [O_{Z_j}] = (1 - q)/(1 - qt l_j/l_{j+1}), 1 <= j <= 3.
KClass periodic_class(int j);

// Euler-characteristic factors of the three Markov moves: bare inclusion,
// positive and negative stabilization. Each is the push of the relevant
// class times (1 - a/l), divided by (1 - q) for the extra copy of C.
struct MarkovFactors {
    FactoredRat bare, positive, negative;
};
MarkovFactors markov_factors(int n = 1);

// chi(FHilb_n, L_1^d_1 ... L_n^d_n), optionally times prod_i (1 - a/L_i),
// pushed down the explicit tower. L_1 is trivial. Punctual: n <= 3; over
// the line: n <= 2.
FactoredRat tower_euler(int n, const std::vector<int>& exps, bool punctual, bool exterior = false);

}  // namespace fh
