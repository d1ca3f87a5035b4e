#pragma once

// Shared test fixtures: small ideals and order ideals with externally known
// invariants (reduced bases, class partitions, weight tables) used across the
// suites.

#include <string>
#include <vector>

#include "bbs/order_ideal.hpp"
#include "bbs/poly_io.hpp"
#include "bbs/polynomial.hpp"
#include "bbs/varset.hpp"

namespace fx {

using namespace bbs;

inline Ideal parse_all(const VarSet& vs, const std::vector<std::string>& strs) {
    Ideal out;
    for (auto& s : strs) out.push_back(poly_from_string(s, vs));
    return out;
}

// Ten dense generators in three variables whose reduced elimination basis
// collapses to two small elements; a stress case for the division loop.
inline Ideal hidden_parabola_ideal() {
    VarSet v3 = VarSet::ambient(3);
    return parse_all(
        v3,
        {"x1*x2^2 + 1/2*x2^3 - 1/2*x2^2*x3 - x1^2 - 1/2*x1*x2 - x2^2 + 1/2*x1*x3 + x1",
         "x2^2*x3^2 + 3*x2^3 - 4*x2^2*x3 - x1*x3^2 - 3*x1*x2 + 4*x1*x3",
         "x2^3*x3 - x1*x2*x3 - x2^2*x3 + x1*x3",
         "x2^4 - x1*x2^2 - x2^3 + x1*x2",
         "x1^2*x2^2 - x1^3",
         "x1^3 + 1/2*x1^2*x2 + x1*x2^2 + 1/2*x2^3 - 1/2*x1^2*x3 - 1/2*x2^2*x3 - x1^2 - x2^2",
         "x1^2*x3^2 + x2^2*x3^2 + 3*x1^2*x2 + 3*x2^3 - 4*x1^2*x3 - 4*x2^2*x3",
         "x1^2*x2*x3 + x2^3*x3 - x1^2*x3 - x2^2*x3",
         "x1^2*x2^2 + x2^4 - x1^2*x2 - x2^3",
         "x1^4 + x1^2*x2^2"});
}

// Three generators in (x,y,z,w) defining a line; the candidate tuple (x,y,z)
// fails while (x,y,w) gives a one-variable presentation.
inline Ideal curve_reembedding_ideal() {
    VarSet v4 = VarSet::ambient(4);
    return parse_all(v4, {"x1 - x2 - x4^2", "x1 + x2 - x3^2", "x3 + x4 + x3^3"});
}

// Six quadric-plus-linear generators in ten variables for the weight checker.
inline Ideal weight_checker_ideal() {
    VarSet v10 = VarSet::ambient(10);
    return parse_all(v10, {"x1^2 + x1*x5 + x4*x6 - x7 + x10",
                           "x3*x6 + 2*x6*x7 - x4*x9 - x5*x9 - x1",
                           "x4^2 - 2*x6*x7 + x5*x9 + x6*x9 - x5",
                           "x6*x7 + x9^2 - x10^2 + x6 - x8",
                           "-x6*x7 + x4*x9 + x5*x9 - x2 + x6",
                           "x6*x9 + x4*x10 + x2 - x8"});
}

// Complete intersection in four variables minimally generated by a
// sub-tuple; regular at the origin.
inline Ideal minimal_pair_ideal() {
    VarSet v4 = VarSet::ambient(4);
    return parse_all(v4, {"x4^2 + x1 - x2 + 3*x3", "x3*x4^2 + x4^3 + x2",
                          "x4^3 - x1*x3 + x2*x3 - 3*x3^2 + x2"});
}

// Two independent linear forms whose fan has five maximal bases.
inline Ideal two_form_fan_ideal() {
    VarSet v4 = VarSet::ambient(4);
    return parse_all(v4, {"x1 + x2 - x3 + 4*x4", "x1 - x2 - x3"});
}

// order ideals -------------------------------------------------------------

inline OrderIdeal oi_box22() { return planar_box(2, 2); }
inline OrderIdeal oi_box23() { return planar_box(2, 3); }

// {1, y, x, y^2, xy}
inline OrderIdeal oi_122() {
    return build_order_ideal(2, std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}});
}

// {1, y, x, y^2, x^2}
inline OrderIdeal oi_lshape() {
    return build_order_ideal(2, std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {2, 0}});
}

// {1, y, x, y^2, xy, x^2, y^3, xy^2}: eight terms, five border elements
inline OrderIdeal oi_eight() {
    return build_order_ideal(2, std::vector<std::vector<int>>{
                                    {0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 3}, {1, 2}});
}

// {1, z, z^2} in three variables
inline OrderIdeal oi_zline() {
    return build_order_ideal(3, std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
}

// {1, z, y, x, z^2}
inline OrderIdeal oi_zsquare() {
    return build_order_ideal(
        3, std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 2}});
}

// {1, z, y, x, xy}
inline OrderIdeal oi_xy() {
    return build_order_ideal(
        3, std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}});
}

// name helpers --------------------------------------------------------------

inline std::vector<int> cflats(const OrderIdeal& o, const std::vector<std::pair<int, int>>& ij) {
    std::vector<int> out;
    for (auto& [i, j] : ij) out.push_back(o.cvars.c_index(i, j));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fx
