#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbs/groebner.hpp"
#include "bbs/linear.hpp"
#include "bbs/order_ideal.hpp"
#include "bbs/polynomial.hpp"

namespace bbs {

// Outcome of a separation check for a variable tuple z.
struct SeparatingVerdict {
    enum class Status { Weights, NoWeights, Certified, NotSeparating };
    enum class Method { Linear, Groebner, LP };

    Status status;
    Method method;
    bool inconclusive = false;           // heuristic failure, no certificate
    std::vector<long> weights;           // full weight vector (Weights / LP)
    std::vector<int> z;                  // the checked tuple
    // Separating tuple in substitution-ready order: pairs (z variable,
    // polynomial z - h) whose back-substitution eliminates z.
    std::vector<std::pair<int, Polynomial>> triangular;

    bool found() const { return status == Status::Weights || status == Status::Certified; }
};

enum class CheckVariant {
    Base,        // plain weight-assignment loop
    EarlyUnits,  // detect generators that are single variables up front
    ProductPool, // enlarge the quadric pool with y-multiples whose cubic terms cancel
};

// Linear-algebra separation check for ideals generated by polynomials with
// only degree-1 and degree-2 terms. On success the returned weights W make
// every W-compatible ordering an elimination ordering for z admitting a
// coherently separating tuple; `triangular` carries explicit ideal members
// realizing it, ordered by increasing weight.
SeparatingVerdict check_z_linear(const Ideal& gens, const std::vector<int>& z, int nvars,
                                 CheckVariant variant = CheckVariant::Base);

// Successive substitution z_i -> h_i through a triangular tuple
// f_i = z_i - h_i with h_i in K[Y][z_1..z_{i-1}]; the result is the reduced
// basis {z_i - h~_i} with h~_i free of all z's.
std::vector<std::pair<int, Polynomial>> z_triangular_backsubst(
    const std::vector<std::pair<int, Polynomial>>& fs);

// Random sampling of candidate generator tuples checked by the LP separation
// criterion. Failure is explicitly inconclusive.
SeparatingVerdict random_tuple_heuristic(const Ideal& gens, const std::vector<int>& z, int nvars,
                                         int tries, unsigned long seed);

struct ReembeddingResult {
    std::vector<int> z;
    std::vector<int> y;
    std::map<int, Polynomial> images; // z variable -> polynomial in K[y]
    Ideal residual;                   // generators of the contraction in K[y]
    bool optimal = false;             // #z equals dim of the linear part
    bool affine_cell = false;         // optimal and residual zero
    bool certified = false;           // separation certified, not heuristic
    std::string via;                  // "linear" | "groebner" | "lp"
    std::vector<long> weights;        // separating weight vector when one was found
};

// Re-embedding assembled from a coherently separating tuple: images come from
// back-substitution and the residual from substituting the images into every
// generator. I = <tuple> + <residual> holds by construction, which certifies
// the separation without a full basis computation.
ReembeddingResult assemble_from_triangular(const Ideal& gens, const std::vector<int>& z,
                                           int nvars, int lin_dim,
                                           const std::vector<std::pair<int, Polynomial>>& tri,
                                           const std::string& via);

// Candidate search over the fan of the linear part: tries s-subsets of mark
// sets in lexicographic order, returning the first tuple that checks out.
struct AlgEmbResult {
    std::vector<int> z;
    ReembeddingResult reembedding;
};

std::optional<AlgEmbResult> alg_emb(const Ideal& gens, int nvars, int s,
                                    SeparatingVerdict::Method method,
                                    std::optional<std::uint64_t> budget = std::nullopt,
                                    int lp_tries = 500, unsigned long lp_seed = 0);

struct CompEmbOptions {
    bool optimal_only = true;
    bool exposed_restricted = false; // planar only
    SeparatingVerdict::Method method = SeparatingVerdict::Method::Linear;
    std::optional<std::uint64_t> budget;
    int lp_tries = 500;
    unsigned long lp_seed = 0;
    size_t max_candidates = 100000;
};

struct CompEmbOutcome {
    std::vector<ReembeddingResult> results;    // successes, candidate order
    size_t candidates = 0;                     // tuples examined
    size_t inconclusive = 0;                   // candidates failed without certificate
};

// Candidate enumeration through cotangent equivalence classes; checks each
// tuple with the chosen method and assembles re-embeddings for successes.
CompEmbOutcome comp_emb(const OrderIdeal& o, const CompEmbOptions& opt);

} // namespace bbs
