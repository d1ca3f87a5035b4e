#include "bbs/order_ideal.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace bbs {

namespace {

void canonical_sort(std::vector<Term>& v) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return grevlex_cmp(a, b) < 0; });
}

std::vector<Term> compute_border(int n, const std::vector<Term>& terms) {
    std::set<Term, TermGrevlexLess> in(terms.begin(), terms.end());
    std::set<Term, TermGrevlexLess> border;
    for (const Term& t : terms)
        for (int v = 0; v < n; ++v) {
            Term m = t * Term::variable(v);
            if (!in.count(m)) border.insert(m);
        }
    return {border.begin(), border.end()};
}

} // namespace

int OrderIdeal::term_index(const Term& t) const {
    for (size_t i = 0; i < terms.size(); ++i)
        if (terms[i] == t) return static_cast<int>(i);
    return -1;
}

int OrderIdeal::border_index(const Term& t) const {
    for (size_t i = 0; i < border.size(); ++i)
        if (border[i] == t) return static_cast<int>(i);
    return -1;
}

std::vector<int> OrderIdeal::rim_indices() const {
    std::vector<int> out;
    for (int i = 0; i < mu(); ++i)
        if (in_rim[i]) out.push_back(i);
    return out;
}

std::vector<int> OrderIdeal::interior_indices() const {
    std::vector<int> out;
    for (int i = 0; i < mu(); ++i)
        if (!in_rim[i]) out.push_back(i);
    return out;
}

OrderIdeal build_order_ideal(int n, std::vector<Term> terms) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
    if (terms.empty()) throw std::invalid_argument("order ideal must be nonempty");
    canonical_sort(terms);
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

    std::set<Term, TermGrevlexLess> in(terms.begin(), terms.end());
    for (const Term& t : terms) {
        if (t.max_var() >= n) throw std::invalid_argument("term uses variable outside ambient ring");
        for (auto& [v, e] : t.entries()) {
            Term q = t / Term::variable(v);
            if (!in.count(q))
                throw std::invalid_argument("not divisor-closed: missing a divisor of a listed term");
        }
    }

    OrderIdeal o;
    o.n = n;
    o.terms = std::move(terms);
    o.border = compute_border(n, o.terms);
    o.in_rim.assign(o.terms.size(), false);
    std::set<Term, TermGrevlexLess> bset(o.border.begin(), o.border.end());
    for (size_t i = 0; i < o.terms.size(); ++i)
        for (int v = 0; v < n && !o.in_rim[i]; ++v)
            if (bset.count(o.terms[i] * Term::variable(v))) o.in_rim[i] = true;
    o.xvars = VarSet::ambient(n);
    o.cvars = VarSet::coefficients(o.mu(), o.nu());
    return o;
}

OrderIdeal build_order_ideal(int n, const std::vector<std::vector<int>>& exponents) {
    std::vector<Term> ts;
    ts.reserve(exponents.size());
    for (auto& e : exponents) {
        if (static_cast<int>(e.size()) != n)
            throw std::invalid_argument("exponent vector length must equal the variable count");
        ts.push_back(Term::from_dense(e));
    }
    return build_order_ideal(n, std::move(ts));
}

OrderIdeal simplicial_order_ideal(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("simplicial order ideal needs n >= 1, d >= 1");
    std::vector<Term> ts;
    std::vector<int> exp(n, 0);
    // enumerate all exponent vectors with total degree <= d
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            ts.push_back(Term::from_dense(exp));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        exp[pos] = 0;
    };
    rec(rec, 0, d);
    return build_order_ideal(n, std::move(ts));
}

OrderIdeal planar_box(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("box sides must be positive");
    std::vector<Term> ts;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) ts.push_back(Term::from_dense({i, j}));
    return build_order_ideal(2, std::move(ts));
}

std::vector<NeighborPair> neighbor_pairs(const OrderIdeal& o) {
    std::vector<NeighborPair> out;
    // next-door: b_j = x_l b_j2
    for (int j = 0; j < o.nu(); ++j)
        for (int l = 0; l < o.n; ++l) {
            if (!o.border[j].divisible_by_var(l)) continue;
            int j2 = o.border_index(o.border[j] / Term::variable(l));
            if (j2 >= 0) out.push_back({NeighborKind::ND, j + 1, j2 + 1, 0, l + 1, 0});
        }
    // across-the-rim: common term t_m with b_j = x_l t_m and b_j2 = x_k t_m, k < l
    for (int m = 0; m < o.mu(); ++m)
        for (int k = 0; k < o.n; ++k) {
            int jk = o.border_index(o.terms[m] * Term::variable(k));
            if (jk < 0) continue;
            for (int l = k + 1; l < o.n; ++l) {
                int jl = o.border_index(o.terms[m] * Term::variable(l));
                if (jl < 0) continue;
                out.push_back({NeighborKind::AR, jl + 1, jk + 1, k + 1, l + 1, m + 1});
            }
        }
    // across-the-corner: common border term b_m with b_j = x_k b_m, b_j2 = x_l b_m
    for (int m = 0; m < o.nu(); ++m)
        for (int k = 0; k < o.n; ++k) {
            int jk = o.border_index(o.border[m] * Term::variable(k));
            if (jk < 0) continue;
            for (int l = k + 1; l < o.n; ++l) {
                int jl = o.border_index(o.border[m] * Term::variable(l));
                if (jl < 0) continue;
                out.push_back({NeighborKind::AC, jk + 1, jl + 1, k + 1, l + 1, m + 1});
            }
        }
    auto key = [](const NeighborPair& p) {
        return std::tuple<int, int, int, int, int, int>(static_cast<int>(p.kind), p.j, p.j2, p.k,
                                                        p.l, p.m);
    };
    std::sort(out.begin(), out.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    return out;
}

std::vector<std::pair<int, int>> exposed_indeterminates(const OrderIdeal& o) {
    // Directions in which a border position is multiplied inside an ND or AR
    // lifting: ND b_a = x_l b_j exposes (j, l); AR exposes (j, k) and (j2, l).
    std::vector<std::vector<bool>> lifted(o.nu(), std::vector<bool>(o.n, false));
    for (const auto& p : neighbor_pairs(o)) {
        if (p.kind == NeighborKind::ND) {
            lifted[p.j2 - 1][p.l - 1] = true;
        } else if (p.kind == NeighborKind::AR) {
            lifted[p.j - 1][p.k - 1] = true;  // b_j side is multiplied by x_k
            lifted[p.j2 - 1][p.l - 1] = true; // b_j2 side by x_l
        }
    }
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < o.mu(); ++i)
        for (int j = 0; j < o.nu(); ++j)
            for (int l = 0; l < o.n; ++l) {
                if (!lifted[j][l]) continue;
                if (o.border_index(o.terms[i] * Term::variable(l)) >= 0) {
                    out.push_back({i + 1, j + 1});
                    break;
                }
            }
    return out;
}

PlateauDecomposition plateau_decomposition(const OrderIdeal& o) {
    if (o.n != 2) throw std::invalid_argument("plateau decomposition is planar only");
    const int X = 0, Y = 1;
    auto has_up = [&](int j) {
        return o.border_index(o.border[j] * Term::variable(X)) >= 0 ||
               o.border_index(o.border[j] * Term::variable(Y)) >= 0;
    };
    // across-the-rim step to the lower right: x*b = y*b' with the common
    // quotient inside the order ideal
    auto ar_right = [&](int j) -> int {
        const Term& b = o.border[j];
        if (!b.divisible_by_var(Y)) return -1;
        Term common = b / Term::variable(Y);
        if (o.term_index(common) < 0) return -1;
        return o.border_index(common * Term::variable(X));
    };

    PlateauDecomposition out;
    std::vector<bool> used(o.nu(), false);
    for (int j = 0; j < o.nu(); ++j) {
        if (used[j] || has_up(j)) continue;
        // walk left
        int start = j;
        while (true) {
            int prev = -1;
            const Term& b = o.border[start];
            if (b.divisible_by_var(X)) {
                Term common = b / Term::variable(X);
                if (o.term_index(common) >= 0) prev = o.border_index(common * Term::variable(Y));
            }
            if (prev < 0 || has_up(prev)) break;
            start = prev;
        }
        if (used[start]) continue;
        Plateau p;
        int cur = start;
        while (cur >= 0 && !used[cur] && !has_up(cur)) {
            p.chain.push_back(cur + 1);
            used[cur] = true;
            cur = ar_right(cur);
        }
        // x-leg: descend from the left end via b = x * b'
        {
            const Term& front = o.border[p.chain.front() - 1];
            if (front.divisible_by_var(X)) {
                int leg = o.border_index(front / Term::variable(X));
                while (leg >= 0) {
                    p.x_leg.push_back(leg + 1);
                    const Term& cur_leg = o.border[leg];
                    int nd = cur_leg.divisible_by_var(X)
                                 ? o.border_index(cur_leg / Term::variable(X))
                                 : -1;
                    int ar = -1;
                    {
                        Term yb = cur_leg * Term::variable(Y);
                        if (yb.divisible_by_var(X)) ar = o.border_index(yb / Term::variable(X));
                    }
                    leg = nd >= 0 ? nd : ar;
                }
            }
        }
        // y-leg: descend from the right end via b = y * b'
        {
            const Term& back = o.border[p.chain.back() - 1];
            if (back.divisible_by_var(Y)) {
                int leg = o.border_index(back / Term::variable(Y));
                while (leg >= 0) {
                    p.y_leg.push_back(leg + 1);
                    const Term& cur_leg = o.border[leg];
                    int nd = cur_leg.divisible_by_var(Y)
                                 ? o.border_index(cur_leg / Term::variable(Y))
                                 : -1;
                    int ar = -1;
                    {
                        Term xb = cur_leg * Term::variable(X);
                        if (xb.divisible_by_var(Y)) ar = o.border_index(xb / Term::variable(Y));
                    }
                    leg = nd >= 0 ? nd : ar;
                }
            }
        }
        out.plateaus.push_back(std::move(p));
    }
    std::sort(out.plateaus.begin(), out.plateaus.end(),
              [](const Plateau& a, const Plateau& b) { return a.chain.front() < b.chain.front(); });
    return out;
}

OrderIdeal random_order_ideal(int n, int max_terms, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::set<Term, TermGrevlexLess> in;
    in.insert(Term::one());
    while (static_cast<int>(in.size()) < max_terms) {
        std::vector<Term> candidates;
        for (const Term& t : in)
            for (int v = 0; v < n; ++v) {
                Term m = t * Term::variable(v);
                if (in.count(m)) continue;
                bool closed = true;
                for (auto& [w, e] : m.entries())
                    if (!in.count(m / Term::variable(w))) {
                        closed = false;
                        break;
                    }
                if (closed) candidates.push_back(m);
            }
        if (candidates.empty()) break;
        canonical_sort(candidates);
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
        in.insert(candidates[pick(rng)]);
    }
    return build_order_ideal(n, std::vector<Term>(in.begin(), in.end()));
}

} // namespace bbs
