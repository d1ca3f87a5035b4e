#include "bbs/separating.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "bbs/qmatrix.hpp"
#include "bbs/simplex.hpp"

namespace bbs {

namespace {

struct Row {
    Polynomial work;   // terms kept by the deletion steps
    Polynomial shadow; // the same combination of the original generators
};

Polynomial delete_outside(const Polynomial& p, const std::vector<char>& keep_var) {
    Polynomial out;
    for (auto& [t, c] : p.monomials()) {
        bool keep = false;
        for (auto& [v, e] : t.entries())
            if (keep_var[v]) {
                keep = true;
                break;
            }
        if (keep) out.add_term(t, c);
    }
    return out;
}

// K-linear full interreduction of rows treated as vectors over their terms,
// pivoting on the cmp-maximal term of each row. Returns echelonized rows with
// pairwise distinct lead terms, each monic and reduced against the others.
template <typename Cmp>
void interreduce(std::vector<Row>& rows, Cmp cmp) {
    std::vector<Row> pivots;
    std::vector<Term> leads;
    for (auto& r : rows) {
        Polynomial w = r.work, s = r.shadow;
        bool again = true;
        while (again && !w.is_zero()) {
            again = false;
            // current lead
            const Term* lead = nullptr;
            for (auto& [t, c] : w.monomials())
                if (!lead || cmp(*lead, t)) lead = &t;
            for (size_t k = 0; k < pivots.size(); ++k)
                if (leads[k] == *lead) {
                    Rational f = w.coeff(*lead);
                    w -= pivots[k].work * f;
                    s -= pivots[k].shadow * f;
                    again = true;
                    break;
                }
        }
        if (w.is_zero()) continue;
        const Term* lead = nullptr;
        for (auto& [t, c] : w.monomials())
            if (!lead || cmp(*lead, t)) lead = &t;
        Rational inv = 1 / w.coeff(*lead);
        w *= inv;
        s *= inv;
        Term lt = *lead;
        for (size_t k = 0; k < pivots.size(); ++k) {
            Rational f = pivots[k].work.coeff(lt);
            if (f != 0) {
                pivots[k].work -= w * f;
                pivots[k].shadow -= s * f;
            }
        }
        pivots.push_back({std::move(w), std::move(s)});
        leads.push_back(lt);
    }
    rows = std::move(pivots);
}

bool lex_less(const Term& a, const Term& b) { return lex_cmp(a, b) < 0; }

} // namespace

SeparatingVerdict check_z_linear(const Ideal& gens, const std::vector<int>& z, int nvars,
                                 CheckVariant variant) {
    for (const auto& g : gens)
        for (auto& [t, c] : g.monomials())
            if (t.degree() < 1 || t.degree() > 2)
                throw std::invalid_argument(
                    "linear separation check needs generators with degree 1 and 2 terms only");

    SeparatingVerdict v;
    v.method = SeparatingVerdict::Method::Linear;
    v.z = z;

    std::vector<char> in_z(nvars, 0);
    for (int zv : z) {
        if (zv < 0 || zv >= nvars) throw std::out_of_range("variable index out of range");
        if (in_z[zv]) throw std::invalid_argument("duplicate variable in tuple");
        in_z[zv] = 1;
    }
    std::vector<int> yvars;
    for (int x = 0; x < nvars; ++x)
        if (!in_z[x]) yvars.push_back(x);

    std::vector<long> weights(nvars, 0);
    std::vector<char> zhat = in_z;
    auto zhat_list = [&]() {
        std::vector<int> out;
        for (int x = 0; x < nvars; ++x)
            if (zhat[x]) out.push_back(x);
        return out;
    };

    long d = 1;
    std::vector<Row> rows;
    for (const auto& g : gens)
        if (!g.is_zero()) rows.push_back({delete_outside(g, zhat), g});

    auto finish_no_weights = [&]() {
        v.status = SeparatingVerdict::Status::NoWeights;
        v.inconclusive = true;
        return v;
    };

    std::vector<std::pair<int, Polynomial>> found; // (z, shadow), in assignment order

    // early detection of generators that already are single z-variables
    if (variant == CheckVariant::EarlyUnits) {
        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<int> newly;
            for (auto& r : rows) {
                if (r.work.size() != 1) continue;
                auto& [t, c] = *r.work.monomials().begin();
                if (t.degree() == 1 && zhat[t.entries()[0].first]) {
                    int zv = t.entries()[0].first;
                    weights[zv] = d;
                    zhat[zv] = 0;
                    found.push_back({zv, r.shadow * (1 / c)});
                    newly.push_back(zv);
                    r.work = Polynomial();
                    progress = true;
                }
            }
            if (progress) {
                d = 2 * d + 1;
                std::vector<Row> keep;
                for (auto& r : rows) {
                    Polynomial w = delete_outside(r.shadow, zhat);
                    if (!w.is_zero()) keep.push_back({std::move(w), r.shadow});
                }
                rows = std::move(keep);
            }
        }
    }

    std::vector<int> zh = zhat_list();
    size_t s = zh.size();

    if (s > 0) {
        // rank of the deleted linear parts, spanned by the zhat variables
        {
            QMatrix m(static_cast<int>(rows.size()), static_cast<int>(s));
            for (size_t i = 0; i < rows.size(); ++i) {
                Polynomial lin = rows[i].work.linear_part();
                for (size_t j = 0; j < s; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) =
                    lin.coeff(Term::variable(zh[j]));
            }
            if (m.rank() < static_cast<int>(s)) return finish_no_weights();
        }

        // row reduce so that s rows carry unit linear parts, the rest are quadrics
        std::vector<Row> units;
        std::vector<int> unit_z;
        std::vector<Row> quads;
        {
            std::vector<Row> pool = rows;
            for (int zv : zh) {
                Term zt = Term::variable(zv);
                int pick = -1;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (pool[i].work.linear_part().coeff(zt) != 0) {
                        pick = static_cast<int>(i);
                        break;
                    }
                if (pick < 0) return finish_no_weights(); // cannot happen after rank check
                Row piv = pool[pick];
                pool.erase(pool.begin() + pick);
                Rational inv = 1 / piv.work.coeff(zt);
                piv.work *= inv;
                piv.shadow *= inv;
                for (auto& r : pool) {
                    Rational f = r.work.coeff(zt);
                    if (f != 0) {
                        r.work -= piv.work * f;
                        r.shadow -= piv.shadow * f;
                    }
                }
                for (size_t k = 0; k < units.size(); ++k) {
                    Rational f = units[k].work.coeff(zt);
                    if (f != 0) {
                        units[k].work -= piv.work * f;
                        units[k].shadow -= piv.shadow * f;
                    }
                }
                units.push_back(std::move(piv));
                unit_z.push_back(zv);
            }
            for (auto& r : pool)
                if (!r.work.is_zero()) quads.push_back(std::move(r));
        }

        while (true) {
            // enlarge the quadric pool with cancelling y-multiples
            if (variant == CheckVariant::ProductPool) {
                std::vector<Row> products;
                for (int y : yvars)
                    for (auto& u : units)
                        products.push_back(
                            {u.work * Polynomial::variable(y), u.shadow * Polynomial::variable(y)});
                std::set<Term, TermGrevlexLess> cubics;
                for (auto& p : products)
                    for (auto& [t, c] : p.work.monomials())
                        if (t.degree() == 3) cubics.insert(t);
                if (!products.empty() && !cubics.empty()) {
                    // product combinations killing every cubic term: the right
                    // kernel of the (cubic term) x (product) coefficient matrix
                    std::vector<Term> rows_t(cubics.begin(), cubics.end());
                    QMatrix m(static_cast<int>(rows_t.size()), static_cast<int>(products.size()));
                    for (size_t i = 0; i < rows_t.size(); ++i)
                        for (size_t j = 0; j < products.size(); ++j)
                            m.at(static_cast<int>(i), static_cast<int>(j)) =
                                products[j].work.coeff(rows_t[i]);
                    for (auto& vkernel : m.kernel()) {
                        Row combo;
                        for (size_t i = 0; i < products.size(); ++i)
                            if (vkernel[i] != 0) {
                                combo.work += products[i].work * vkernel[i];
                                combo.shadow += products[i].shadow * vkernel[i];
                            }
                        if (!combo.work.is_zero()) quads.push_back(std::move(combo));
                    }
                } else if (!products.empty() && cubics.empty()) {
                    for (auto& p : products) quads.push_back(std::move(p));
                }
            }

            // steps (4)+(5): echelonize the quadrics, reduce the unit rows
            interreduce(quads, lex_less);
            for (auto& u : units)
                for (auto& q : quads) {
                    const Term* lead = nullptr;
                    for (auto& [t, c] : q.work.monomials())
                        if (!lead || lex_less(*lead, t)) lead = &t;
                    Rational f = u.work.coeff(*lead);
                    if (f != 0) {
                        u.work -= q.work * f;
                        u.shadow -= q.shadow * f;
                    }
                }

            // step (6): harvest unit rows reduced to a bare variable
            std::vector<size_t> done;
            for (size_t i = 0; i < units.size(); ++i)
                if (units[i].work.is_unit_variable(unit_z[i])) done.push_back(i);
            if (done.empty()) return finish_no_weights();
            for (size_t idx : done) {
                weights[unit_z[idx]] = d;
                zhat[unit_z[idx]] = 0;
                found.push_back({unit_z[idx], units[idx].shadow});
            }
            for (size_t k = done.size(); k-- > 0;) {
                units.erase(units.begin() + done[k]);
                unit_z.erase(unit_z.begin() + done[k]);
            }
            d = 2 * d + 1;
            if (units.empty()) break;

            // step (8): prune terms no longer divisible by the open variables
            for (auto& u : units) u.work = delete_outside(u.work, zhat);
            std::vector<Row> keep;
            for (auto& q : quads) {
                q.work = delete_outside(q.work, zhat);
                if (!q.work.is_zero()) keep.push_back(std::move(q));
            }
            quads = std::move(keep);
        }
    }

    v.status = SeparatingVerdict::Status::Weights;
    v.weights = weights;
    std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
        if (weights[a.first] != weights[b.first]) return weights[a.first] < weights[b.first];
        return a.first < b.first;
    });
    v.triangular = std::move(found);
    return v;
}

std::vector<std::pair<int, Polynomial>> z_triangular_backsubst(
    const std::vector<std::pair<int, Polynomial>>& fs) {
    std::vector<char> pending;
    auto mark = [&](int v, char val) {
        if (static_cast<size_t>(v) >= pending.size()) pending.resize(v + 1, 0);
        pending[v] = val;
    };
    for (auto& [z, f] : fs) mark(z, 1);

    std::vector<std::pair<int, Polynomial>> work = fs;
    std::vector<std::pair<int, Polynomial>> out;
    for (size_t i = 0; i < work.size(); ++i) {
        int z = work[i].first;
        Polynomial& f = work[i].second;
        if (f.coeff(Term::variable(z)) != 1)
            throw std::invalid_argument("triangular entry must be monic in its variable");
        Polynomial h = Polynomial::variable(z) - f;
        for (auto& [t, c] : h.monomials())
            for (auto& [var, e] : t.entries())
                if (static_cast<size_t>(var) < pending.size() && pending[var])
                    throw std::invalid_argument("input tuple is not triangular");
        for (size_t j = i + 1; j < work.size(); ++j)
            work[j].second = work[j].second.substitute(z, h);
        mark(z, 0);
        out.push_back({z, Polynomial::variable(z) - h});
    }
    return out;
}

SeparatingVerdict random_tuple_heuristic(const Ideal& gens, const std::vector<int>& z, int nvars,
                                         int tries, unsigned long seed) {
    if (tries < 1) throw std::invalid_argument("tries must be positive");
    SeparatingVerdict v;
    v.method = SeparatingVerdict::Method::LP;
    v.z = z;

    std::vector<std::vector<int>> candidates(z.size());
    for (size_t j = 0; j < z.size(); ++j) {
        Term zt = Term::variable(z[j]);
        for (size_t g = 0; g < gens.size(); ++g)
            if (gens[g].coeff(zt) != 0) candidates[j].push_back(static_cast<int>(g));
        if (candidates[j].empty()) {
            v.status = SeparatingVerdict::Status::NoWeights;
            v.inconclusive = true;
            return v;
        }
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < tries; ++attempt) {
        std::vector<int> pick(z.size(), -1);
        std::set<int> used;
        bool ok = true;
        for (size_t j = 0; j < z.size() && ok; ++j) {
            std::vector<int> free;
            for (int g : candidates[j])
                if (!used.count(g)) free.push_back(g);
            if (free.empty()) {
                ok = false;
                break;
            }
            std::uniform_int_distribution<size_t> dist(0, free.size() - 1);
            pick[j] = free[dist(rng)];
            used.insert(pick[j]);
        }
        if (!ok) continue;
        std::vector<std::pair<int, Polynomial>> pairs;
        for (size_t j = 0; j < z.size(); ++j) pairs.push_back({z[j], gens[pick[j]]});
        auto w = weight_feasibility_lp(pairs, nvars);
        if (!w) continue;
        v.status = SeparatingVerdict::Status::Weights;
        v.weights = *w;
        std::vector<std::pair<int, Polynomial>> tri;
        for (size_t j = 0; j < z.size(); ++j) {
            Rational lc = gens[pick[j]].coeff(Term::variable(z[j]));
            tri.push_back({z[j], gens[pick[j]] * (1 / lc)});
        }
        std::sort(tri.begin(), tri.end(), [&](const auto& a, const auto& b) {
            if ((*w)[a.first] != (*w)[b.first]) return (*w)[a.first] < (*w)[b.first];
            return a.first < b.first;
        });
        v.triangular = std::move(tri);
        return v;
    }
    v.status = SeparatingVerdict::Status::NoWeights;
    v.inconclusive = true;
    return v;
}

ReembeddingResult assemble_from_triangular(const Ideal& gens, const std::vector<int>& z,
                                           int nvars, int lin_dim,
                                           const std::vector<std::pair<int, Polynomial>>& tri,
                                           const std::string& via) {
    ReembeddingResult r;
    r.z = z;
    std::vector<char> in_z(nvars, 0);
    for (int v : z) in_z[v] = 1;
    for (int v = 0; v < nvars; ++v)
        if (!in_z[v]) r.y.push_back(v);

    auto coherent = z_triangular_backsubst(tri);
    for (auto& [zv, g] : coherent) r.images[zv] = Polynomial::variable(zv) - g;

    for (const auto& f : gens) {
        Polynomial img = f;
        for (auto& [zv, h] : r.images)
            if (img.contains_variable(zv)) img = img.substitute(zv, h);
        if (!img.is_zero()) {
            bool dup = false;
            for (auto& existing : r.residual)
                if (existing == img) {
                    dup = true;
                    break;
                }
            if (!dup) r.residual.push_back(std::move(img));
        }
    }
    r.optimal = (static_cast<int>(z.size()) == lin_dim);
    r.affine_cell = r.optimal && r.residual.empty();
    r.certified = true;
    r.via = via;
    return r;
}

namespace {

std::optional<ReembeddingResult> check_one(const Ideal& gens, const std::vector<int>& z,
                                           int nvars, int lin_dim,
                                           SeparatingVerdict::Method method,
                                           std::optional<std::uint64_t> budget, int lp_tries,
                                           unsigned long lp_seed, bool& inconclusive) {
    inconclusive = false;
    switch (method) {
    case SeparatingVerdict::Method::Linear: {
        auto v = check_z_linear(gens, z, nvars);
        if (v.found()) {
            auto r = assemble_from_triangular(gens, z, nvars, lin_dim, v.triangular, "linear");
            r.weights = v.weights;
            return r;
        }
        inconclusive = true;
        return std::nullopt;
    }
    case SeparatingVerdict::Method::Groebner: {
        auto re = assemble_reembedding(gens, z, nvars, budget);
        if (!re) return std::nullopt; // certified not separating
        ReembeddingResult r;
        r.z = re->z;
        r.y = re->y;
        r.images = re->images;
        r.residual = re->residual;
        r.optimal = (static_cast<int>(z.size()) == lin_dim);
        r.affine_cell = r.optimal && r.residual.empty();
        r.certified = true;
        r.via = "groebner";
        return r;
    }
    case SeparatingVerdict::Method::LP: {
        auto v = random_tuple_heuristic(gens, z, nvars, lp_tries, lp_seed);
        if (v.found()) {
            auto r = assemble_from_triangular(gens, z, nvars, lin_dim, v.triangular, "lp");
            r.weights = v.weights;
            return r;
        }
        inconclusive = true;
        return std::nullopt;
    }
    }
    return std::nullopt;
}

} // namespace

std::optional<AlgEmbResult> alg_emb(const Ideal& gens, int nvars, int s,
                                    SeparatingVerdict::Method method,
                                    std::optional<std::uint64_t> budget, int lp_tries,
                                    unsigned long lp_seed) {
    std::vector<Polynomial> lins;
    for (auto& g : gens) lins.push_back(g.linear_part());
    LinearSystem sys = linear_span_reduce(lins, nvars);
    if (s > sys.dim())
        throw std::invalid_argument("requested tuple size exceeds the linear part dimension");

    LinearFan fan = linear_fan(sys);
    std::set<std::vector<int>> cand;
    for (const auto& e : fan.entries) {
        if (static_cast<int>(e.cols.size()) < s) continue;
        // all s-subsets of the mark set
        std::vector<int> idx(s);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == s) {
                std::vector<int> zsub;
                for (int k = 0; k < s; ++k) zsub.push_back(e.cols[idx[k]]);
                cand.insert(zsub);
                return;
            }
            for (int i = start; i <= static_cast<int>(e.cols.size()) - (s - depth); ++i) {
                idx[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    for (const auto& z : cand) {
        bool inconclusive = false;
        auto r = check_one(gens, z, nvars, sys.dim(), method, budget, lp_tries, lp_seed,
                           inconclusive);
        if (r) return AlgEmbResult{z, std::move(*r)};
    }
    return std::nullopt;
}

CompEmbOutcome comp_emb(const OrderIdeal& o, const CompEmbOptions& opt) {
    if (opt.exposed_restricted && o.n != 2)
        throw std::invalid_argument("exposed restriction applies to planar order ideals only");

    auto ngens = natural_generators(o);
    Ideal gens;
    for (auto& g : ngens) gens.push_back(g.poly);
    int nvars = o.cvars.size();
    auto cls = cotangent_classes(ngens, nvars);
    int lin_dim = cls.lin_dim();

    SeparatingVerdict::Method method = opt.method;
    bool degenerate = (o.n == 1 || o.mu() <= 2);
    if (degenerate) method = SeparatingVerdict::Method::Groebner;

    std::vector<std::vector<int>> candidates;
    if (opt.exposed_restricted) {
        auto exposed = exposed_indeterminates(o);
        std::vector<char> is_exposed(nvars, 0);
        for (auto& [i, j] : exposed) is_exposed[o.cvars.c_index(i, j)] = 1;
        std::vector<int> base = cls.trivial;
        for (int v = 0; v < nvars; ++v)
            if (!is_exposed[v]) base.push_back(v);
        std::sort(base.begin(), base.end());
        base.erase(std::unique(base.begin(), base.end()), base.end());
        std::vector<std::vector<int>> tilde;
        for (auto& e : cls.proper) {
            std::vector<int> te;
            for (int v : e)
                if (is_exposed[v]) te.push_back(v);
            if (!te.empty()) tilde.push_back(te);
        }
        std::vector<size_t> del(tilde.size(), 0);
        while (true) {
            std::vector<int> z = base;
            for (size_t q = 0; q < tilde.size(); ++q)
                for (size_t i = 0; i < tilde[q].size(); ++i)
                    if (i != del[q]) z.push_back(tilde[q][i]);
            std::sort(z.begin(), z.end());
            z.erase(std::unique(z.begin(), z.end()), z.end());
            candidates.push_back(std::move(z));
            size_t q = tilde.size();
            bool rolled = true;
            while (q > 0) {
                --q;
                if (++del[q] < tilde[q].size()) {
                    rolled = false;
                    break;
                }
                del[q] = 0;
            }
            if (tilde.empty() || rolled) break;
        }
    } else if (opt.optimal_only) {
        candidates = ltgfan_via_classes(cls);
    } else {
        // full enumeration: subsets of the trivial class, proper subsets of
        // each proper class
        std::vector<std::vector<int>> partial = {{}};
        auto extend_subsets = [&](const std::vector<int>& pool, bool strict) {
            std::vector<std::vector<int>> next;
            size_t total = size_t(1) << pool.size();
            for (auto& base : partial)
                for (size_t mask = 0; mask < total; ++mask) {
                    if (strict && mask == total - 1) continue;
                    std::vector<int> ext = base;
                    for (size_t b = 0; b < pool.size(); ++b)
                        if (mask & (size_t(1) << b)) ext.push_back(pool[b]);
                    next.push_back(std::move(ext));
                    if (next.size() > opt.max_candidates)
                        throw std::runtime_error("candidate enumeration exceeds the configured cap");
                }
            partial = std::move(next);
        };
        extend_subsets(cls.trivial, false);
        for (auto& e : cls.proper) extend_subsets(e, true);
        for (auto& z : partial) {
            std::sort(z.begin(), z.end());
            candidates.push_back(z);
        }
    }

    CompEmbOutcome out;
    for (const auto& z : candidates) {
        ++out.candidates;
        if (out.candidates > opt.max_candidates)
            throw std::runtime_error("candidate enumeration exceeds the configured cap");
        bool inconclusive = false;
        std::optional<ReembeddingResult> r;
        if (z.empty()) {
            // nothing to separate: the identity embedding, residual = ideal
            ReembeddingResult rr;
            for (int v = 0; v < nvars; ++v) rr.y.push_back(v);
            for (auto& g : gens)
                if (!g.is_zero()) rr.residual.push_back(g);
            rr.optimal = (lin_dim == 0);
            rr.affine_cell = rr.optimal && rr.residual.empty();
            rr.certified = true;
            rr.via = "trivial";
            r = rr;
        } else {
            r = check_one(gens, z, nvars, lin_dim, method, opt.budget, opt.lp_tries, opt.lp_seed,
                          inconclusive);
        }
        if (r) out.results.push_back(std::move(*r));
        else if (inconclusive) ++out.inconclusive;
    }
    return out;
}

} // namespace bbs
