#pragma once

#include <vector>

#include "bbs/bbs_gens.hpp"
#include "bbs/ordering.hpp"
#include "bbs/polynomial.hpp"
#include "bbs/qmatrix.hpp"

namespace bbs {

// Row-reduced basis of a span of linear forms over the full variable set.
struct LinearSystem {
    int nvars = 0;
    QMatrix matrix;                 // rows = reduced basis, cols = variables
    std::vector<Polynomial> forms;  // same rows as polynomials

    int dim() const { return matrix.rows(); }
};

// Reduces the degree-one parts of the inputs to a row echelon basis; zero
// forms are dropped, non-linear input is rejected.
LinearSystem linear_span_reduce(const std::vector<Polynomial>& forms, int nvars);

// One marked reduced basis of a homogeneous linear ideal: the column set is
// invertible and the generators carry unit coefficients on their marks.
struct LinearFanEntry {
    std::vector<int> cols;          // 0-based mark variables, increasing
    std::vector<Polynomial> gens;   // gens[k] = x_{cols[k]} + tail in the complement
};

struct LinearFan {
    std::vector<LinearFanEntry> entries; // in lexicographic column-set order
};

// All invertible column subsets with their marked reduced bases, enumerated
// lexicographically with dependence pruning.
LinearFan linear_fan(const LinearSystem& sys);

// The sub-fan whose mark sets contain all variables of z.
LinearFan restricted_fan(const LinearSystem& sys, const std::vector<int>& z);

// Partition of the coefficient variables by their residues modulo the square
// of the maximal ideal at the monomial point.
struct CotangentClasses {
    int nvars = 0;
    std::vector<int> trivial;              // E_0, sorted flat indices
    std::vector<int> basic;                // singleton non-trivial classes
    std::vector<std::vector<int>> proper;  // E_1..E_q, each sorted; classes
                                           // ordered by (size, first element)
    int lin_dim() const {
        int d = static_cast<int>(trivial.size());
        for (auto& e : proper) d += static_cast<int>(e.size()) - 1;
        return d;
    }
};

// Union-find over the linear parts of the natural generators: a monomial
// linear part makes its component trivial, a binomial one joins two
// variables. Valid because every linear part is +-c or +-(c - c').
CotangentClasses cotangent_classes(const std::vector<NaturalGenerator>& gens, int nvars);

// Minimal monomial generators of the leading term ideal of the linear part
// under ord: trivial class plus each proper class minus its smallest member.
std::vector<int> s_sigma(const CotangentClasses& cls, const TermOrdering& ord);

// All sets E_0 union (E_i minus one element each); size = product of class
// sizes. Deterministic odometer order over deleted elements.
std::vector<std::vector<int>> ltgfan_via_classes(const CotangentClasses& cls);

struct CotangentReport {
    int cot_dim = 0;       // #C - dim Lin
    int principal_dim = 0; // n * mu
    bool smooth = false;   // equality of the two
};

CotangentReport cotangent_dimension(const OrderIdeal& o);

} // namespace bbs
