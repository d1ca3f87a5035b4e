#pragma once

#include <string>
#include <vector>

#include "bbs/order_ideal.hpp"
#include "bbs/polynomial.hpp"

namespace bbs {

// Generic border prebasis g_j = b_j - sum_i c[i,j] t_i, viewed through its
// coefficient columns; polynomials on this level live in the coefficient ring.
struct GenericPrebasis {
    const OrderIdeal* o;
    // column j: coefficient variables c[1,j] .. c[mu,j] as flat indices
    std::vector<std::vector<int>> columns;
};

GenericPrebasis generic_prebasis(const OrderIdeal& o);

// mu x mu matrix over the coefficient ring describing multiplication by x_r
// on the residue basis: column j holds the expansion of x_r t_j.
struct MultiplicationMatrix {
    int var = 0; // 0-based ambient variable
    std::vector<std::vector<Polynomial>> entry; // entry[i][j]
};

std::vector<MultiplicationMatrix> generic_multiplication_matrices(const OrderIdeal& o);

struct NaturalGenerator {
    NeighborKind kind;       // ND or AR
    int j = 0, j2 = 0;       // border pair, 1-based
    int k = 0, l = 0;        // directions, 1-based (ND uses l only)
    int mprime = 0;          // common rim index for AR, 1-based
    int entry = 0;           // tuple entry (row index), 1-based
    Polynomial poly;         // element of the defining ideal
    std::vector<int> arrow_degree;
    std::string label;       // e.g. "ND(3,1)_2"
};

// All entries of the ND and AR lifting tuples, in canonical pair order,
// computed by reducing x_l g_{j'} - g_j (resp. x_l g_{j'} - x_k g_j) against
// the prebasis and reading off the coefficients of t_1..t_mu.
std::vector<NaturalGenerator> natural_generators(const OrderIdeal& o);

// All entries of the commutators A_r A_s - A_s A_r, r < s, by matrix algebra;
// independent of the reduction route above.
std::vector<Polynomial> commutator_entries(const OrderIdeal& o);

// Arrow degree of c[i,j] (1-based): exponent vector of b_j minus that of t_i.
std::vector<int> arrow_degree(const OrderIdeal& o, int i, int j);

enum class ArrowClass { Standard, Positive };

// Standard: exactly one positive component; positive: at least two.
ArrowClass classify_arrow(const std::vector<int>& deg);

// Ideal generated by the natural generators, in the coefficient ring.
Ideal bbs_defining_ideal(const OrderIdeal& o);

} // namespace bbs
