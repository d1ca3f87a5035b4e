#pragma once

#include <optional>
#include <vector>

#include "bbs/polynomial.hpp"
#include "bbs/rational.hpp"

namespace bbs {

// Exact rational LP in the form: maximize c.x subject to A.x <= b, x >= 0,
// with b >= 0 so the origin is feasible. Bland's rule keeps the pivoting
// finite under degeneracy. Returns nullopt when unbounded.
struct LPResult {
    Rational objective;
    std::vector<Rational> x;
};

std::optional<LPResult> simplex_maximize(const std::vector<std::vector<Rational>>& A,
                                         const std::vector<Rational>& b,
                                         const std::vector<Rational>& c);

// Strict weight separation: nonnegative rational weights w (scaled to
// integers) such that for every listed pair the variable z_i is the unique
// maximum-weight term of f_i. Solved as a phase-free LP maximizing a shared
// slack; feasible iff the optimum slack is positive.
std::optional<std::vector<long>> weight_feasibility_lp(
    const std::vector<std::pair<int, Polynomial>>& pairs, int nvars);

} // namespace bbs
