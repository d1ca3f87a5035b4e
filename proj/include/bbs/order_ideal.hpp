#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbs/term.hpp"
#include "bbs/varset.hpp"

namespace bbs {

// A finite divisor-closed set of terms together with its derived data. Terms
// and border are numbered canonically: ascending by total degree, ties by
// grevlex (x1 > x2 > ...), matching the 1-based indices used throughout.
struct OrderIdeal {
    int n = 0;                      // ambient variable count
    std::vector<Term> terms;        // t_1 .. t_mu
    std::vector<Term> border;       // b_1 .. b_nu
    std::vector<bool> in_rim;       // per term: has a border multiple
    VarSet xvars;                   // x1..xn
    VarSet cvars;                   // c[i,j], i<=mu, j<=nu

    int mu() const { return static_cast<int>(terms.size()); }
    int nu() const { return static_cast<int>(border.size()); }

    // 0-based index lookups; -1 when absent.
    int term_index(const Term& t) const;
    int border_index(const Term& t) const;

    std::vector<int> rim_indices() const;
    std::vector<int> interior_indices() const;
};

// Validates divisor-closedness and computes border, rim and interior.
OrderIdeal build_order_ideal(int n, const std::vector<std::vector<int>>& exponents);
OrderIdeal build_order_ideal(int n, std::vector<Term> terms);

// All terms of degree <= d in n variables.
OrderIdeal simplicial_order_ideal(int n, int d);

// Complement of <x^a, y^b> in two variables.
OrderIdeal planar_box(int a, int b);

enum class NeighborKind { ND, AR, AC };

// Border neighbor relation, 1-based indices as in the canonical numbering.
//  ND: b_j = x_l * b_j2                    (fields j, j2, l)
//  AR: b_j = x_l * t_m, b_j2 = x_k * t_m   (common rim term, k < l)
//  AC: b_j = x_k * b_m, b_j2 = x_l * b_m   (common border term, k < l)
struct NeighborPair {
    NeighborKind kind;
    int j = 0, j2 = 0;
    int k = 0, l = 0;
    int m = 0;
};

std::vector<NeighborPair> neighbor_pairs(const OrderIdeal& o);

// Exposed coefficient positions (i, j), 1-based: x_l t_i lies in the border
// for some direction l in which b_j is the multiplied member of an ND or AR
// lifting.
std::vector<std::pair<int, int>> exposed_indeterminates(const OrderIdeal& o);

// Plateau structure of a planar border: maximal chains of across-the-rim
// steps x*b_prev = y*b_next between border terms without up-neighbours, plus
// the descending x- and y-legs hanging off the chain ends.
struct Plateau {
    std::vector<int> chain; // 1-based border indices, left (y-most) to right
    std::vector<int> x_leg; // starting at b_chain_front / x, descending
    std::vector<int> y_leg; // starting at b_chain_back / y, descending
};

struct PlateauDecomposition {
    std::vector<Plateau> plateaus;
};

PlateauDecomposition plateau_decomposition(const OrderIdeal& o);

// Seeded random order ideals for property tests: grow from {1} by repeatedly
// absorbing a random border term whose divisors are all present.
OrderIdeal random_order_ideal(int n, int max_terms, unsigned long seed);

} // namespace bbs
