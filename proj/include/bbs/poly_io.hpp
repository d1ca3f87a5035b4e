#pragma once

#include <string>

#include "bbs/polynomial.hpp"
#include "bbs/varset.hpp"

namespace bbs {

// Text format: a signed sum of <rational>*<var>^<exp>*... monomials with
// variables named x1..xn or c[i,j]. "0" is the zero polynomial. Printing and
// parsing round-trip exactly.
std::string term_to_string(const Term& t, const VarSet& vars);
std::string poly_to_string(const Polynomial& p, const VarSet& vars);

Term term_from_string(const std::string& s, const VarSet& vars);
Polynomial poly_from_string(const std::string& s, const VarSet& vars);

} // namespace bbs
