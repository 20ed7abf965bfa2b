#pragma once

// Text, LaTeX and JSON encodings of polynomials.
//
// Text format: terms in graded-lex descending order joined by " + " / " - ",
// each term written as coefficient and variable powers joined by '*'. Unit
// coefficients are omitted, exponent 1 is omitted, and negative exponents are
// written as "x^-2". The zero polynomial is "0". Example: "e1^2 - 2*e2".
//
// JSON format:
//   {"vars": [...], "invertible": [...],
//    "terms": [{"coeff": "<decimal>", "exp": [ints]}, ...]}
// with terms in the same order as the text format.

#include <string>
#include <string_view>

#include <json.hpp>

#include "powelem/poly.hpp"

namespace powelem {

std::string to_text(const Polynomial& p);

/// A single term in text form, with its sign attached ("-3*e1^2").
std::string term_to_text(const RingSignature& ring, const Term& term);

/// Parses the text format into `ring`. Accepts arbitrary whitespace and any
/// term order; repeated monomials are combined. Throws std::invalid_argument on
/// malformed input or unknown variables.
Polynomial parse_text(std::string_view text, const Ring& ring);

/// LaTeX math-mode rendering: "e_1^{6} - 6 e_1^{4} e_2". Trailing digits of a
/// variable name become its subscript; Greek names get a backslash.
std::string to_latex(const Polynomial& p);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace powelem
