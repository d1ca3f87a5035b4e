#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbs/bbs_gens.hpp"
#include "bbs/order_ideal.hpp"
#include "bbs/ordering.hpp"
#include "bbs/separating.hpp"

namespace bbs {

// Result of the planar weight assignment: nonnegative weights on the
// coefficient variables with the non-exposed ones strictly positive, each the
// unique highest-weight term of its witness generator.
struct WeightAssignment {
    std::vector<long> weights;        // per flat coefficient variable
    std::vector<int> witness;         // flat c -> index into natural_generators(), -1 if exposed
    std::vector<int> nonexposed;      // the elimination targets, sorted flat indices
    std::vector<std::pair<std::string, long>> symbols; // resolved deferred weights
};

// Assigns weights by walking borders from the outside in: up-neighbour steps,
// plateau traversals, and leg descents, with deferred symbolic weights
// resolved to their smallest feasible integers.
WeightAssignment assign_weights(const OrderIdeal& o);

struct EliminationResult {
    std::vector<int> z;                                   // non-exposed, sorted
    TermOrdering ordering;                                // weight row + tie-break
    std::vector<std::pair<int, Polynomial>> witnesses;    // (z, monic witness), weight order
    std::vector<std::pair<int, Polynomial>> reduced_gb;   // (z, z - h(C_exposed))
};

// Builds the elimination ordering from the assigned weights, checks the
// witness leading terms, and back-substitutes to the coherently separating
// reduced basis that eliminates every non-exposed coefficient.
EliminationResult eliminate_nonexposed(const OrderIdeal& o);

struct AuditEntry {
    int cvar;                 // flat index of the non-exposed target
    bool found;               // some natural generator has this exact leading term
    std::string witness;      // label of the first generator that works
    std::string miss_label;   // when absent: a generator containing the target ...
    std::string miss_lt;      // ... and its actual leading term
};

// For each non-exposed coefficient, reports whether some natural generator
// has it as the exact leading term under the given ordering.
std::vector<AuditEntry> leading_term_audit(const OrderIdeal& o, const TermOrdering& ord);

} // namespace bbs
