#include "bbs/planar_weights.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bbs {

namespace {

constexpr int X = 0, Y = 1;

// Weight expression: constant plus a nonnegative combination of deferred
// symbols.
struct LinForm {
    long cst = 0;
    std::map<int, long> sym; // symbol id -> coefficient

    LinForm() = default;
    explicit LinForm(long c) : cst(c) {}

    LinForm& operator+=(const LinForm& o) {
        cst += o.cst;
        for (auto& [s, c] : o.sym) {
            sym[s] += c;
            if (sym[s] == 0) sym.erase(s);
        }
        return *this;
    }

    long eval(const std::vector<long>& pvals) const {
        long v = cst;
        for (auto& [s, c] : sym) v += c * pvals[s];
        return v;
    }
};

struct Assigner {
    const OrderIdeal& o;
    std::vector<NaturalGenerator> gens;
    std::vector<char> exposed;            // flat
    std::vector<std::optional<LinForm>> wt; // flat
    std::vector<int> witness;             // flat -> gen index or -1
    std::vector<int> psym_owner;          // symbol id -> flat owner index
    // deferred strict inequalities sym > wt(flat other)
    std::vector<std::pair<int, int>> gt_constraints;
    // symbol id -> minimum value (positivity of leg descents)
    std::vector<long> sym_min;

    // plateau lookup
    PlateauDecomposition pd;
    std::vector<int> plateau_of;  // border(0b) -> plateau index or -1
    std::vector<int> pos_of;      // border(0b) -> 1-based chain position
    std::vector<int> up_dir;      // border(0b) -> direction of an up-neighbour or -1
    std::vector<std::vector<std::pair<int, int>>> dir_exposed; // per direction: (border, term) 0-based

    explicit Assigner(const OrderIdeal& oi) : o(oi) {}

    int flat(int i, int j) const { return o.cvars.c_index(i, j); } // 1-based in

    int find_gen(NeighborKind kind, int j, int j2, int entry) const {
        for (size_t g = 0; g < gens.size(); ++g)
            if (gens[g].kind == kind && gens[g].j == j && gens[g].j2 == j2 &&
                gens[g].entry == entry)
                return static_cast<int>(g);
        return -1;
    }

    void setup() {
        gens = natural_generators(o);
        int nc = o.cvars.size();
        exposed.assign(nc, 0);
        for (auto& [i, j] : exposed_indeterminates(o)) exposed[flat(i, j)] = 1;
        wt.assign(nc, std::nullopt);
        witness.assign(nc, -1);
        for (int v = 0; v < nc; ++v)
            if (exposed[v]) wt[v] = LinForm(0);

        pd = plateau_decomposition(o);
        plateau_of.assign(o.nu(), -1);
        pos_of.assign(o.nu(), 0);
        for (size_t p = 0; p < pd.plateaus.size(); ++p)
            for (size_t q = 0; q < pd.plateaus[p].chain.size(); ++q) {
                plateau_of[pd.plateaus[p].chain[q] - 1] = static_cast<int>(p);
                pos_of[pd.plateaus[p].chain[q] - 1] = static_cast<int>(q) + 1;
            }
        up_dir.assign(o.nu(), -1);
        for (int j = 0; j < o.nu(); ++j)
            for (int v = 0; v < 2; ++v)
                if (o.border_index(o.border[j] * Term::variable(v)) >= 0) {
                    up_dir[j] = v;
                    break;
                }
        dir_exposed.assign(2, {});
        for (int v = 0; v < 2; ++v)
            for (int j = 0; j < o.nu(); ++j) {
                if (!o.border[j].divisible_by_var(v)) continue;
                int rho = o.term_index(o.border[j] / Term::variable(v));
                if (rho >= 0) dir_exposed[v].push_back({j, rho});
            }
    }

    // sum of weights over a whole coefficient row (1-based i); nullopt if some
    // entry is still unassigned
    std::optional<LinForm> row_sum(int i) const {
        LinForm f;
        for (int j = 1; j <= o.nu(); ++j) {
            int v = flat(i, j);
            if (!wt[v]) return std::nullopt;
            f += *wt[v];
        }
        return f;
    }

    std::optional<LinForm> dir_sum(int i, int dir) const {
        LinForm f;
        for (auto& [lam, rho] : dir_exposed[dir]) {
            int v = flat(i, lam + 1);
            if (!wt[v]) return std::nullopt;
            f += *wt[v];
        }
        return f;
    }

    // quotient t * b_num / b_den, exponentwise; nullopt if negative
    std::optional<Term> shift(const Term& t, const Term& num, const Term& den) const {
        std::vector<int> e = t.dense(o.n);
        std::vector<int> en = num.dense(o.n);
        std::vector<int> ed = den.dense(o.n);
        for (int v = 0; v < o.n; ++v) {
            e[v] += en[v] - ed[v];
            if (e[v] < 0) return std::nullopt;
        }
        return Term::from_dense(e);
    }

    int new_symbol(int owner_flat, long minimum) {
        psym_owner.push_back(owner_flat);
        sym_min.push_back(minimum);
        return static_cast<int>(psym_owner.size()) - 1;
    }

    // try to assign c[i,j] (1-based); true on progress
    bool try_assign(int i, int j) {
        int me = flat(i, j);
        if (wt[me]) return false;
        int jb = j - 1;

        if (up_dir[jb] >= 0) { // up-neighbour step
            int k = up_dir[jb];
            int u = o.border_index(o.border[jb] * Term::variable(k));
            Term ti_up = o.terms[i - 1] * Term::variable(k);
            int ip = o.term_index(ti_up);
            if (ip < 0)
                throw std::logic_error("up-neighbour step outside the order ideal for a non-exposed target");
            int cup = flat(ip + 1, u + 1);
            if (!wt[cup]) return false;
            auto dsum = dir_sum(ip + 1, k);
            if (!dsum) return false;
            LinForm f(1);
            f += *wt[cup];
            f += *dsum;
            wt[me] = f;
            witness[me] = find_gen(NeighborKind::ND, u + 1, j, ip + 1);
            return true;
        }

        int pidx = plateau_of[jb];
        if (pidx < 0)
            throw std::logic_error("border term neither has an up-neighbour nor lies on a plateau");
        const Plateau& pl = pd.plateaus[pidx];
        int pos = pos_of[jb];
        int klen = static_cast<int>(pl.chain.size());
        auto arrow = arrow_degree(o, i, j);
        bool family_x = arrow[X] > 0;

        const Term& ti = o.terms[i - 1];
        if (family_x) {
            if (pos >= 2) {
                Term tm = ti * Term::variable(Y);
                int m = o.term_index(tm);
                if (m < 0)
                    throw std::logic_error("plateau step outside the order ideal for a non-exposed target");
                int prev = pl.chain[pos - 2]; // 1-based border
                int wit = find_gen(NeighborKind::AR, prev, j, m + 1);
                if (!ti.divisible_by_var(X)) {
                    auto rs = row_sum(m + 1);
                    if (!rs) return false;
                    LinForm f(1);
                    f += *rs;
                    wt[me] = f;
                    witness[me] = wit;
                    return true;
                }
                auto t2 = shift(ti, o.border[prev - 1], o.border[jb]);
                if (!t2) throw std::logic_error("missing plateau companion term");
                int i2 = o.term_index(*t2);
                if (i2 < 0) throw std::logic_error("plateau companion outside the order ideal");
                int cprev = flat(i2 + 1, prev);
                if (!wt[cprev]) return false;
                auto rs = row_sum(m + 1);
                if (!rs) return false;
                LinForm f(1);
                f += *wt[cprev];
                f += *rs;
                wt[me] = f;
                witness[me] = wit;
                return true;
            }
            // left end: deferred symbol, optional x-leg descent
            assign_end(i, j, pl, /*xdir=*/true);
            return true;
        }

        if (arrow[Y] <= 0) throw std::logic_error("arrow degree without positive component");
        if (pos <= klen - 1) {
            Term tm = ti * Term::variable(X);
            int m = o.term_index(tm);
            if (m < 0)
                throw std::logic_error("plateau step outside the order ideal for a non-exposed target");
            int next = pl.chain[pos]; // 1-based
            int wit = find_gen(NeighborKind::AR, j, next, m + 1);
            if (!ti.divisible_by_var(Y)) {
                auto rs = row_sum(m + 1);
                if (!rs) return false;
                LinForm f(1);
                f += *rs;
                wt[me] = f;
                witness[me] = wit;
                return true;
            }
            auto t2 = shift(ti, o.border[next - 1], o.border[jb]);
            if (!t2) throw std::logic_error("missing plateau companion term");
            int i2 = o.term_index(*t2);
            if (i2 < 0) throw std::logic_error("plateau companion outside the order ideal");
            int cnext = flat(i2 + 1, next);
            if (!wt[cnext]) return false;
            auto rs = row_sum(m + 1);
            if (!rs) return false;
            LinForm f(1);
            f += *wt[cnext];
            f += *rs;
            wt[me] = f;
            witness[me] = wit;
            return true;
        }
        // right end: deferred symbol, optional y-leg descent
        assign_end(i, j, pl, /*xdir=*/false);
        return true;
    }

    void assign_end(int i, int j, const Plateau& pl, bool xdir) {
        int me = flat(i, j);
        const std::vector<int>& leg = xdir ? pl.x_leg : pl.y_leg;
        int dir = xdir ? X : Y;
        int sym = new_symbol(me, 1);
        LinForm f;
        f.sym[sym] = 1;
        wt[me] = f;
        if (!leg.empty()) {
            // the witness is the next-door lifting onto the leg; its quadratic
            // terms pair same-row entries at exposed borders with weight-zero
            // factors, so the symbol must dominate those entries strictly
            for (auto& [lam, rho] : dir_exposed[dir])
                gt_constraints.push_back({sym, flat(i, lam + 1)});
        }
        if (!leg.empty()) {
            int end_border = j - 1;
            witness[me] = find_gen(NeighborKind::ND, j, leg.front(), i);
            // descend the leg along arrow-equivalent positions
            for (size_t lam = 0; lam < leg.size(); ++lam) {
                auto t2 = shift(o.terms[i - 1], o.border[leg[lam] - 1], o.border[end_border]);
                if (!t2) break;
                int i2 = o.term_index(*t2);
                if (i2 < 0) break;
                int target = flat(i2 + 1, leg[lam]);
                if (wt[target]) break;
                LinForm g;
                g.sym[sym] = 1;
                g.cst = -static_cast<long>(lam) - 1;
                wt[target] = g;
                witness[target] = -1; // resolved generically later
                sym_min[sym] = std::max(sym_min[sym], static_cast<long>(lam) + 2);
            }
        }
    }
};

} // namespace

WeightAssignment assign_weights(const OrderIdeal& o) {
    if (o.n != 2) throw std::invalid_argument("weight assignment applies to planar order ideals");
    Assigner a(o);
    a.setup();

    int delta = 0;
    for (auto& t : o.terms) delta = std::max(delta, t.degree());

    for (int d = delta; d >= 0; --d) {
        std::vector<std::pair<int, int>> cd; // (i, j) 1-based
        for (int i = 1; i <= o.mu(); ++i) {
            if (o.terms[i - 1].degree() != d) continue;
            for (int j = 1; j <= o.nu(); ++j)
                if (!a.wt[a.flat(i, j)]) cd.push_back({i, j});
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& [i, j] : cd)
                if (a.try_assign(i, j)) progress = true;
        }
        for (auto& [i, j] : cd)
            if (!a.wt[a.flat(i, j)])
                throw std::logic_error("weight assignment incomplete at degree " + std::to_string(d));
    }

    // resolve deferred symbols to their smallest feasible values
    int ns = static_cast<int>(a.psym_owner.size());
    std::vector<long> pv(ns);
    for (int s = 0; s < ns; ++s) pv[s] = a.sym_min[s];

    auto eval_flat = [&](int v) { return a.wt[v]->eval(pv); };

    auto unique_max_ok = [&](int target, const Polynomial& g) {
        long mine = eval_flat(target);
        Term tt = Term::variable(target);
        for (auto& [t, c] : g.monomials()) {
            if (t == tt) continue;
            long w = 0;
            for (auto& [v, e] : t.entries()) w += e * eval_flat(v);
            if (w >= mine) return false;
        }
        return true;
    };

    for (int round = 0; round < 10000; ++round) {
        bool changed = false;
        for (auto& [sym, other] : a.gt_constraints) {
            long need = eval_flat(other) + 1;
            long have = pv[sym];
            // owner weight is exactly the bare symbol
            if (have < need) {
                pv[sym] = need;
                changed = true;
            }
        }
        // generically witnessed targets (leg members, endpoints without legs)
        for (int v = 0; v < o.cvars.size(); ++v) {
            if (a.exposed[v] || a.witness[v] >= 0) continue;
            if (!a.wt[v]) continue;
            // find a witness where v is the unique heaviest term
            int best_gen = -1;
            long best_need = 0;
            Term tv = Term::variable(v);
            for (size_t g = 0; g < a.gens.size(); ++g) {
                const Polynomial& poly = a.gens[g].poly;
                if (poly.coeff(tv) == 0) continue;
                if (unique_max_ok(v, poly)) {
                    best_gen = static_cast<int>(g);
                    best_need = -1;
                    break;
                }
                // feasibility: raising our symbol must not raise another term as much
                auto& form = *a.wt[v];
                if (form.sym.empty()) continue;
                int sym = form.sym.begin()->first;
                bool feasible = true;
                long maxo = 0;
                for (auto& [t, c] : poly.monomials()) {
                    if (t == tv) continue;
                    long w = 0;
                    long symcoef = 0;
                    for (auto& [var, e] : t.entries()) {
                        w += e * eval_flat(var);
                        auto it = a.wt[var]->sym.find(sym);
                        if (it != a.wt[var]->sym.end()) symcoef += e * it->second;
                    }
                    if (symcoef >= form.sym.begin()->second) {
                        feasible = false;
                        break;
                    }
                    maxo = std::max(maxo, w);
                }
                if (!feasible) continue;
                long need = maxo + 1 - form.cst; // required symbol value (coefficient 1)
                if (best_gen < 0 || best_need > need) {
                    best_gen = static_cast<int>(g);
                    best_need = need;
                }
            }
            if (best_gen >= 0 && best_need >= 0) {
                auto& form = *a.wt[v];
                int sym = form.sym.begin()->first;
                if (pv[sym] < best_need) {
                    pv[sym] = best_need;
                    changed = true;
                }
            }
        }
        if (!changed) break;
        if (round == 9999) throw std::logic_error("weight resolution did not stabilize");
    }

    // final witness selection for generic targets
    for (int v = 0; v < o.cvars.size(); ++v) {
        if (a.exposed[v] || a.witness[v] >= 0) continue;
        Term tv = Term::variable(v);
        for (size_t g = 0; g < a.gens.size(); ++g)
            if (a.gens[g].poly.coeff(tv) != 0 && unique_max_ok(v, a.gens[g].poly)) {
                a.witness[v] = static_cast<int>(g);
                break;
            }
    }

    WeightAssignment out;
    out.weights.resize(o.cvars.size());
    out.witness = a.witness;
    for (int v = 0; v < o.cvars.size(); ++v) {
        out.weights[v] = a.wt[v]->eval(pv);
        if (!a.exposed[v]) out.nonexposed.push_back(v);
    }
    for (int s = 0; s < ns; ++s) {
        auto [pi, pj] = o.cvars.c_pair(a.psym_owner[s]);
        out.symbols.push_back({"p[" + std::to_string(pi) + "," + std::to_string(pj) + "]", pv[s]});
    }

    // output contract: positive weights off the exposed set, zero on it, and a
    // witness with a strict unique maximum for every elimination target
    for (int v = 0; v < o.cvars.size(); ++v) {
        if (a.exposed[v]) {
            if (out.weights[v] != 0) throw std::logic_error("exposed weight must be zero");
            continue;
        }
        if (out.weights[v] <= 0) throw std::logic_error("non-exposed weight must be positive");
        if (a.witness[v] < 0) throw std::logic_error("missing witness generator");
        if (!unique_max_ok(v, a.gens[a.witness[v]].poly))
            throw std::logic_error("witness does not have the target as unique heaviest term");
    }
    return out;
}

EliminationResult eliminate_nonexposed(const OrderIdeal& o) {
    WeightAssignment wa = assign_weights(o);
    auto gens = natural_generators(o);

    EliminationResult res;
    res.z = wa.nonexposed;
    res.ordering = TermOrdering::weighted(wa.weights);

    std::vector<std::pair<int, Polynomial>> tri;
    for (int v : wa.nonexposed) {
        const Polynomial& g = gens[wa.witness[v]].poly;
        Term tv = Term::variable(v);
        if (res.ordering.leading_term(g) != tv)
            throw std::logic_error("witness leading term check failed");
        tri.push_back({v, g * (1 / g.coeff(tv))});
    }
    std::sort(tri.begin(), tri.end(), [&](const auto& x, const auto& y) {
        if (wa.weights[x.first] != wa.weights[y.first])
            return wa.weights[x.first] < wa.weights[y.first];
        return x.first < y.first;
    });
    res.witnesses = tri;
    res.reduced_gb = z_triangular_backsubst(tri);
    std::sort(res.reduced_gb.begin(), res.reduced_gb.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return res;
}

std::vector<AuditEntry> leading_term_audit(const OrderIdeal& o, const TermOrdering& ord) {
    if (o.n != 2) throw std::invalid_argument("leading term audit applies to planar order ideals");
    auto gens = natural_generators(o);
    std::vector<char> exposed(o.cvars.size(), 0);
    for (auto& [i, j] : exposed_indeterminates(o)) exposed[o.cvars.c_index(i, j)] = 1;

    std::vector<AuditEntry> out;
    for (int v = 0; v < o.cvars.size(); ++v) {
        if (exposed[v]) continue;
        AuditEntry e;
        e.cvar = v;
        e.found = false;
        Term tv = Term::variable(v);
        for (auto& g : gens) {
            if (ord.leading_term(g.poly) == tv) {
                e.found = true;
                e.witness = g.label;
                break;
            }
        }
        if (!e.found) {
            for (auto& g : gens)
                if (g.poly.coeff(tv) != 0) {
                    e.miss_label = g.label;
                    e.miss_lt = "";
                    const Term& lt = ord.leading_term(g.poly);
                    for (auto& [var, ee] : lt.entries()) {
                        if (!e.miss_lt.empty()) e.miss_lt += "*";
                        e.miss_lt += o.cvars.name(var);
                        if (ee > 1) e.miss_lt += "^" + std::to_string(ee);
                    }
                    break;
                }
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace bbs
