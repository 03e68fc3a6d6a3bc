#pragma once

#include <map>
#include <random>
#include <vector>

#include "fhkit/braid.hpp"
#include "fhkit/laurent.hpp"

namespace fh {

// Skein evaluation of closed braids by reduction to descending diagrams,
// independent of the Hecke algebra code. Components are traversed from the
// lowest unused top position; the first crossing met as an under-crossing is
// switched, using chi(w s w') - chi(w s^-1 w') = (v - v^-1) chi(w w').
// Values are polynomials in v, a and the trace symbol d.
class SkeinOracle {
public:
    explicit SkeinOracle(int strands) : n_(strands) {}
    LaurentPoly eval(const std::vector<int>& letters);
    LaurentPoly eval(const BraidWord& w) { return eval(w.letters); }

private:
    int n_;
    std::map<std::vector<int>, LaurentPoly> memo_;
};

// Uniform random word of length 0..max_len in the generators and inverses.
BraidWord random_braid(int n, int max_len, std::mt19937& rng);

}  // namespace fh
