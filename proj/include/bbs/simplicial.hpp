#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbs/order_ideal.hpp"
#include "bbs/ordering.hpp"
#include "bbs/separating.hpp"

namespace bbs {

// Report for the order ideal of all terms of degree <= d: the two-row weight
// ordering whose strata follow the total arrow degree, the witness generators
// for the interior coefficients, and the induced optimal re-embedding.
struct SimplicialReport {
    int n = 0, d = 0;
    int mu = 0, nu = 0;
    int interior = 0, rim = 0;          // counts of order ideal terms
    int c_total = 0, c_interior = 0, c_rim = 0;
    TermOrdering ordering;
    std::vector<std::pair<int, Polynomial>> witnesses; // (interior flat c, generator)
    bool lin_is_interior_span = false;  // linear part spanned exactly by interior coefficients
    int cot_dim = 0;
    int principal_dim = 0;
    bool smooth = false;
    ReembeddingResult reembedding;      // Z = interior coefficients
};

SimplicialReport simplicial_report(int n, int d, int c_limit = 1000);

} // namespace bbs
