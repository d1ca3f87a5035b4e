#include "bbs/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bbs {

namespace {

// Working representation during division and Buchberger: leading data cached.
struct GBElem {
    Polynomial poly;
    Term lt;
    Rational lc;
};

GBElem make_elem(const Polynomial& p, const TermOrdering& ord) {
    GBElem e;
    e.poly = p;
    e.lt = ord.leading_term(p);
    e.lc = p.coeff(e.lt);
    return e;
}

// Working polynomial ordered by the active term ordering so the current
// maximum is the last map entry.
struct OrdLess {
    const TermOrdering* ord;
    bool operator()(const Term& a, const Term& b) const { return ord->compare(a, b) == Cmp::LT; }
};
using OrdMap = std::map<Term, Rational, OrdLess>;

// Full reduction: every divisible term is rewritten, not just the leading one.
Polynomial reduce_full(const Polynomial& f, const std::vector<GBElem>& basis,
                       const TermOrdering& ord) {
    OrdMap work{OrdLess{&ord}};
    for (auto& [t, c] : f.monomials()) work.emplace(t, c);
    Polynomial out;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        const Term lt = it->first;
        const Rational lc = it->second;
        const GBElem* reducer = nullptr;
        for (const auto& g : basis)
            if (g.lt.divides(lt)) {
                reducer = &g;
                break;
            }
        if (!reducer) {
            out.add_term(lt, lc);
            work.erase(it);
            continue;
        }
        Term q = lt / reducer->lt;
        Rational factor = lc / reducer->lc;
        for (auto& [t, c] : reducer->poly.monomials()) {
            Term shifted = t * q;
            auto pos = work.find(shifted);
            if (pos == work.end()) {
                work.emplace(std::move(shifted), -factor * c);
            } else {
                pos->second -= factor * c;
                if (pos->second == 0) work.erase(pos);
            }
        }
    }
    return out;
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const TermOrdering& ord) {
    std::vector<GBElem> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("zero divisor polynomial in normal form");
        basis.push_back(make_elem(g, ord));
    }
    return reduce_full(f, basis, ord);
}

std::optional<MarkedReducedGB> reduced_gb_budgeted(const Ideal& gens, const TermOrdering& ord,
                                                   std::optional<std::uint64_t> step_budget) {
    std::vector<GBElem> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(make_elem(g, ord));

    struct PairKey {
        Term lcm;
        size_t i, j;
    };
    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        Cmp c = ord.compare(a.lcm, b.lcm);
        if (c != Cmp::EQ) return c == Cmp::LT;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<PairKey> queue;
    std::set<std::pair<size_t, size_t>> pending;
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            queue.push_back({basis[i].lt.lcm(basis[k].lt), i, k});
            pending.insert({i, k});
        }
    };
    for (size_t k = 0; k < basis.size(); ++k) push_pairs_for(k);

    std::uint64_t steps = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        PairKey pk = *it;
        queue.erase(it);
        pending.erase({pk.i, pk.j});

        const GBElem& fi = basis[pk.i];
        const GBElem& fj = basis[pk.j];
        if (fi.lt.coprime(fj.lt)) continue; // product criterion
        // chain criterion: some other element's leading term divides the lcm
        // and both companion pairs are already handled (not pending).
        {
            bool skip = false;
            for (size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pk.i || k == pk.j) continue;
                if (!basis[k].lt.divides(pk.lcm)) continue;
                if (!pending.count({std::min(pk.i, k), std::max(pk.i, k)}) &&
                    !pending.count({std::min(pk.j, k), std::max(pk.j, k)}))
                    skip = true;
            }
            if (skip) continue;
        }

        if (step_budget && ++steps > *step_budget) return std::nullopt;

        Polynomial s = fi.poly.mul_term(pk.lcm / fi.lt, Rational(1) / fi.lc) -
                       fj.poly.mul_term(pk.lcm / fj.lt, Rational(1) / fj.lc);
        Polynomial r = reduce_full(std::move(s), basis, ord);
        if (!r.is_zero()) {
            basis.push_back(make_elem(r, ord));
            push_pairs_for(basis.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<GBElem> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lt.divides(basis[i].lt)) {
                if (basis[j].lt != basis[i].lt || j < i) redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Reduce each element against the others and normalize monic.
    std::vector<GBElem> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GBElem> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce_full(minimal[i].poly, others, ord);
        if (r.is_zero()) continue;
        r *= Rational(1) / ord.leading_coeff(r);
        reduced.push_back(make_elem(r, ord));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const GBElem& a, const GBElem& b) { return ord.compare(a.lt, b.lt) == Cmp::LT; });

    MarkedReducedGB out;
    out.ord = ord;
    for (auto& e : reduced) out.pairs.push_back({e.lt, e.poly});
    return out;
}

MarkedReducedGB reduced_gb(const Ideal& gens, const TermOrdering& ord) {
    auto r = reduced_gb_budgeted(gens, ord, std::nullopt);
    return *r;
}

bool z_in_leading_terms(const Ideal& gens, const std::vector<int>& z, int nvars,
                        std::optional<std::uint64_t> step_budget) {
    if (z.empty()) return true;
    TermOrdering ord = TermOrdering::elimination(nvars, z);
    auto gb = reduced_gb_budgeted(gens, ord, step_budget);
    if (!gb) throw std::runtime_error("step budget exhausted in basis computation");
    for (int v : z)
        if (!gb->has_mark(Term::variable(v))) return false;
    return true;
}

Ideal elimination_ideal(const Ideal& gens, const std::vector<int>& keep, int nvars) {
    std::vector<bool> keep_mask(nvars, false);
    for (int v : keep) keep_mask[v] = true;
    std::vector<int> drop;
    for (int v = 0; v < nvars; ++v)
        if (!keep_mask[v]) drop.push_back(v);
    if (drop.empty()) return gens;
    TermOrdering ord = TermOrdering::elimination(nvars, drop);
    MarkedReducedGB gb = reduced_gb(gens, ord);
    Ideal out;
    for (auto& [m, g] : gb.pairs) {
        bool inside = true;
        for (int v : drop)
            if (g.contains_variable(v)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(g);
    }
    return out;
}

std::optional<Reembedding> assemble_reembedding(const Ideal& gens, const std::vector<int>& z,
                                                int nvars,
                                                std::optional<std::uint64_t> step_budget) {
    Reembedding re;
    re.z = z;
    std::vector<bool> in_z(nvars, false);
    for (int v : z) in_z[v] = true;
    for (int v = 0; v < nvars; ++v)
        if (!in_z[v]) re.y.push_back(v);

    if (z.empty()) {
        re.residual = gens;
        return re;
    }
    TermOrdering ord = TermOrdering::elimination(nvars, z);
    auto gb = reduced_gb_budgeted(gens, ord, step_budget);
    if (!gb) throw std::runtime_error("step budget exhausted in basis computation");
    for (int v : z)
        if (!gb->has_mark(Term::variable(v))) return std::nullopt;
    for (auto& [m, g] : gb->pairs) {
        bool is_var_mark = false;
        for (int v : z)
            if (m == Term::variable(v)) {
                // g = z_v - h with h in K[y]; image is h.
                Polynomial h = Polynomial::term(m) - g;
                re.images[v] = std::move(h);
                is_var_mark = true;
                break;
            }
        if (!is_var_mark) re.residual.push_back(g);
    }
    return re;
}

} // namespace bbs
