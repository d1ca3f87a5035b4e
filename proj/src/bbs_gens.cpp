#include "bbs/bbs_gens.hpp"

#include <stdexcept>

namespace bbs {

namespace {

int cvar(const OrderIdeal& o, int i, int j) { // 1-based in, flat 0-based out
    return o.cvars.c_index(i, j);
}

// Coefficient of t_i (1-based) in the reduction of x_l * g_col against the
// prebasis: -c[m,col] lands on t where x_l t_m stays inside, and
// -c[i,lam]*c[m,col] where x_l t_m crosses into border position lam.
void accumulate_shift(const OrderIdeal& o, int l0, int col, const Rational& sign,
                      std::vector<Polynomial>& coeff) {
    for (int m = 1; m <= o.mu(); ++m) {
        Term prod = o.terms[m - 1] * Term::variable(l0);
        int ti = o.term_index(prod);
        if (ti >= 0) {
            coeff[ti].add_term(Term::variable(cvar(o, m, col)), -sign);
            continue;
        }
        int lam = o.border_index(prod);
        if (lam < 0) throw std::logic_error("border closure violated");
        for (int i = 1; i <= o.mu(); ++i)
            coeff[i - 1].add_term(Term::variable(cvar(o, i, lam + 1)) *
                                      Term::variable(cvar(o, m, col)),
                                  -sign);
    }
}

} // namespace

GenericPrebasis generic_prebasis(const OrderIdeal& o) {
    GenericPrebasis pb;
    pb.o = &o;
    pb.columns.resize(o.nu());
    for (int j = 1; j <= o.nu(); ++j)
        for (int i = 1; i <= o.mu(); ++i) pb.columns[j - 1].push_back(cvar(o, i, j));
    return pb;
}

std::vector<MultiplicationMatrix> generic_multiplication_matrices(const OrderIdeal& o) {
    std::vector<MultiplicationMatrix> out;
    for (int r = 0; r < o.n; ++r) {
        MultiplicationMatrix m;
        m.var = r;
        m.entry.assign(o.mu(), std::vector<Polynomial>(o.mu()));
        for (int j = 0; j < o.mu(); ++j) {
            Term prod = o.terms[j] * Term::variable(r);
            int ti = o.term_index(prod);
            if (ti >= 0) {
                m.entry[ti][j] = Polynomial(Rational(1));
            } else {
                int b = o.border_index(prod);
                if (b < 0) throw std::logic_error("border closure violated");
                for (int i = 1; i <= o.mu(); ++i)
                    m.entry[i - 1][j] = Polynomial::variable(cvar(o, i, b + 1));
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<NaturalGenerator> natural_generators(const OrderIdeal& o) {
    std::vector<NaturalGenerator> out;
    for (const auto& p : neighbor_pairs(o)) {
        if (p.kind == NeighborKind::AC) continue;
        std::vector<Polynomial> coeff(o.mu());
        if (p.kind == NeighborKind::ND) {
            // b_j = x_l b_j2: reduce x_l g_j2 - g_j
            accumulate_shift(o, p.l - 1, p.j2, Rational(1), coeff);
            for (int i = 1; i <= o.mu(); ++i)
                coeff[i - 1].add_term(Term::variable(cvar(o, i, p.j)), Rational(1));
        } else {
            // b_j = x_l t_m, b_j2 = x_k t_m: reduce x_l g_j2 - x_k g_j
            accumulate_shift(o, p.l - 1, p.j2, Rational(1), coeff);
            accumulate_shift(o, p.k - 1, p.j, Rational(-1), coeff);
        }
        for (int i = 1; i <= o.mu(); ++i) {
            if (coeff[i - 1].is_zero()) continue;
            NaturalGenerator g;
            g.kind = p.kind;
            g.j = p.j;
            g.j2 = p.j2;
            g.k = p.k;
            g.l = p.l;
            g.mprime = p.m;
            g.entry = i;
            g.poly = std::move(coeff[i - 1]);
            if (p.kind == NeighborKind::ND) {
                g.arrow_degree = arrow_degree(o, i, p.j);
                g.label = "ND(" + std::to_string(p.j) + "," + std::to_string(p.j2) + ")_" +
                          std::to_string(i);
            } else {
                g.arrow_degree = arrow_degree(o, i, p.j);
                g.arrow_degree[p.k - 1] += 1;
                g.label = "AR(" + std::to_string(p.j) + "," + std::to_string(p.j2) + ")_" +
                          std::to_string(i);
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Polynomial> commutator_entries(const OrderIdeal& o) {
    auto mats = generic_multiplication_matrices(o);
    std::vector<Polynomial> out;
    int mu = o.mu();
    for (int r = 0; r < o.n; ++r)
        for (int s = r + 1; s < o.n; ++s) {
            for (int i = 0; i < mu; ++i)
                for (int j = 0; j < mu; ++j) {
                    Polynomial e;
                    for (int k = 0; k < mu; ++k) {
                        if (!mats[r].entry[i][k].is_zero() && !mats[s].entry[k][j].is_zero())
                            e += mats[r].entry[i][k] * mats[s].entry[k][j];
                        if (!mats[s].entry[i][k].is_zero() && !mats[r].entry[k][j].is_zero())
                            e -= mats[s].entry[i][k] * mats[r].entry[k][j];
                    }
                    out.push_back(std::move(e));
                }
        }
    return out;
}

std::vector<int> arrow_degree(const OrderIdeal& o, int i, int j) {
    if (i < 1 || i > o.mu() || j < 1 || j > o.nu())
        throw std::out_of_range("coefficient index out of range");
    std::vector<int> d = o.border[j - 1].dense(o.n);
    std::vector<int> t = o.terms[i - 1].dense(o.n);
    for (int v = 0; v < o.n; ++v) d[v] -= t[v];
    return d;
}

ArrowClass classify_arrow(const std::vector<int>& deg) {
    int pos = 0;
    for (int d : deg)
        if (d > 0) ++pos;
    if (pos == 0) throw std::invalid_argument("arrow degree without positive component");
    return pos == 1 ? ArrowClass::Standard : ArrowClass::Positive;
}

Ideal bbs_defining_ideal(const OrderIdeal& o) {
    Ideal out;
    for (auto& g : natural_generators(o)) out.push_back(g.poly);
    return out;
}

} // namespace bbs
