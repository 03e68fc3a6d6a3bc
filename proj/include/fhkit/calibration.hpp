#pragma once

// Frozen normalization constants relating the geometric series to the Hecke
// trace. Each value was solved on the smallest cases and is then checked,
// not assumed, by the test suites.

#include "fhkit/factored.hpp"

namespace fh::calibration {

// Decategorification sends t to q^-1.
inline Subst decategorify() { return Subst::t_to_inverse_q(); }

// The exterior factor (1 + a z^-1) becomes the trace factor (1 - a q^-c):
// a -> -a. Forced by the one-box case (1 + a)/(1 - q) vs (1 - a)/(1 - q).
inline constexpr int kASign = -1;
inline Subst a_calibration() { return Subst::negate_a(); }
inline Subst markov() { return decategorify().then(a_calibration()); }

// Overall factor once the chart monomial mu(T) is divided out.
inline Monomial nu() { return Monomial::one(); }

// The Hecke trace of an idempotent carries (-v) per strand and q^{n(lambda)}
// relative to the hook-content product.
inline constexpr int kStrandSign = -1;

// Framing monomial multiplying the specialized superpolynomial of a closed
// n-strand torus braid so that it equals homfly / homfly(unknot). Solved on
// T(2,1), T(2,3) and T(3,1), T(3,2); checked on every other implemented k.
inline Monomial framing(int strands) {
    return strands == 2 ? Monomial::qta(1, 0) : Monomial::one();
}

}  // namespace fh::calibration
