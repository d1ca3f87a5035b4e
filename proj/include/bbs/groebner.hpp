#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bbs/ordering.hpp"
#include "bbs/polynomial.hpp"

namespace bbs {

// Reduced Groebner basis with each element tagged by its leading term. Marks
// are pairwise distinct, every element is monic, its mark is its leading term
// under `ord`, and no mark divides any other term appearing anywhere in the
// basis.
struct MarkedReducedGB {
    std::vector<std::pair<Term, Polynomial>> pairs;
    TermOrdering ord;

    bool has_mark(const Term& t) const {
        for (auto& [m, g] : pairs)
            if (m == t) return true;
        return false;
    }
    std::vector<Term> marks() const {
        std::vector<Term> out;
        out.reserve(pairs.size());
        for (auto& [m, g] : pairs) out.push_back(m);
        return out;
    }
};

// Remainder of f on division by G: no term of the result is divisible by any
// leading term of G, and f minus the result lies in <G>.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const TermOrdering& ord);

// Buchberger with normal pair selection, coprime and chain criteria. The
// optional budget caps the number of S-pair reductions; exceeding it yields
// nullopt instead of a basis.
std::optional<MarkedReducedGB> reduced_gb_budgeted(const Ideal& gens, const TermOrdering& ord,
                                                   std::optional<std::uint64_t> step_budget);

MarkedReducedGB reduced_gb(const Ideal& gens, const TermOrdering& ord);

// True iff every variable of z occurs as a mark of the reduced basis for the
// elimination ordering of z, i.e. iff the ideal is separating for z.
bool z_in_leading_terms(const Ideal& gens, const std::vector<int>& z, int nvars,
                        std::optional<std::uint64_t> step_budget = std::nullopt);

// Generators of the contraction to the subring on the variables `keep`.
Ideal elimination_ideal(const Ideal& gens, const std::vector<int>& keep, int nvars);

struct Reembedding {
    std::vector<int> z;                 // separated variables
    std::vector<int> y;                 // complement
    std::map<int, Polynomial> images;   // z variable -> polynomial in K[y]
    Ideal residual;                     // generators of the contraction in K[y]
};

// Splits the reduced basis for an elimination ordering of z into substitution
// images z_i -> h_i and the residual contraction; nullopt when some z is not a
// leading term (the ideal is not separating for z).
std::optional<Reembedding> assemble_reembedding(const Ideal& gens, const std::vector<int>& z,
                                                int nvars,
                                                std::optional<std::uint64_t> step_budget = std::nullopt);

} // namespace bbs
