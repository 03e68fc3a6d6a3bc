#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "fhkit/factored.hpp"

namespace fh {

// Text: terms by descending weight-degree, then descending lexicographic
// exponent order, e.g. "q^3 + q^2*t + q*t^2 + t^3 + q*t".
std::string render_monomial(const Monomial& m);
std::string render(const LaurentPoly& p, const Weights& w = {});
std::string render(const FactoredRat& x);
std::string render(const GradedSeries& s);
std::string render_rational(const Rational& r);

nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const FactoredRat& x);
nlohmann::json to_json(const GradedSeries& s);
Monomial monomial_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j);
FactoredRat factored_from_json(const nlohmann::json& j);

// Parses expressions such as "(1-t)/((1-q)^2*(1-t/q))", "q^(1/2)*a - 3/2",
// "l^2 + r1/l". Symbols: q, t, a, v (= q^(1/2)), d, l (= l1), l1..l4,
// r1..r5, z1..z5. Throws Error(ParseError).
FactoredRat parse_expr(const std::string& text);

// "t=1/q,a=-a" style substitutions; right-hand sides must be
// (signed) monomials.
Subst parse_subst(const std::string& text);

}  // namespace fh
