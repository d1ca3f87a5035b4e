#include "bbs/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

#include "bbs/bbs_gens.hpp"
#include "bbs/linear.hpp"

namespace bbs {

SimplicialReport simplicial_report(int n, int d, int c_limit) {
    OrderIdeal o = simplicial_order_ideal(n, d);
    if (o.cvars.size() > c_limit)
        throw std::invalid_argument("coefficient count exceeds the report limit");

    SimplicialReport rep;
    rep.n = n;
    rep.d = d;
    rep.mu = o.mu();
    rep.nu = o.nu();
    rep.interior = static_cast<int>(o.interior_indices().size());
    rep.rim = static_cast<int>(o.rim_indices().size());
    rep.c_total = o.cvars.size();
    rep.c_interior = rep.interior * rep.nu;
    rep.c_rim = rep.rim * rep.nu;

    // first weight row: 2*delta - 1 per coefficient, delta the total arrow
    // degree; second row: for interior coefficients the chosen-direction
    // exponent of t_i within each arrow-degree stratum, zero elsewhere
    std::vector<long> row1(o.cvars.size(), 0), row2(o.cvars.size(), 0);
    std::vector<char> interior_flag(o.mu(), 1);
    for (int idx : o.rim_indices()) interior_flag[idx] = 0;
    for (int i = 1; i <= o.mu(); ++i)
        for (int j = 1; j <= o.nu(); ++j) {
            int v = o.cvars.c_index(i, j);
            int delta = o.border[j - 1].degree() - o.terms[i - 1].degree();
            row1[v] = 2 * static_cast<long>(delta) - 1;
            if (interior_flag[i - 1]) {
                auto deg = arrow_degree(o, i, j);
                int k = -1;
                for (int v2 = 0; v2 < n; ++v2)
                    if (deg[v2] > 0) {
                        k = v2;
                        break;
                    }
                if (k < 0) throw std::logic_error("arrow degree without positive component");
                row2[v] = o.terms[i - 1].exponent(k);
            }
        }
    bool second_useless = std::all_of(row2.begin(), row2.end(), [](long x) { return x == 0; });
    if (second_useless)
        rep.ordering = TermOrdering::weighted_rows(o.cvars.size(), {row1});
    else
        rep.ordering = TermOrdering::weighted_rows(o.cvars.size(), {row1, row2});

    auto gens = natural_generators(o);

    // linear part: spanned exactly by the interior coefficients
    {
        auto cls = cotangent_classes(gens, o.cvars.size());
        std::vector<int> interior_cs;
        for (int i = 1; i <= o.mu(); ++i)
            if (interior_flag[i - 1])
                for (int j = 1; j <= o.nu(); ++j) interior_cs.push_back(o.cvars.c_index(i, j));
        std::sort(interior_cs.begin(), interior_cs.end());
        rep.lin_is_interior_span = cls.proper.empty() && cls.trivial == interior_cs;
        auto cot = cotangent_dimension(o);
        rep.cot_dim = cot.cot_dim;
        rep.principal_dim = cot.principal_dim;
        rep.smooth = cot.smooth;
    }

    // witnesses: first generator whose leading term is the interior coefficient
    std::vector<int> z;
    for (int i = 1; i <= o.mu(); ++i) {
        if (!interior_flag[i - 1]) continue;
        for (int j = 1; j <= o.nu(); ++j) {
            int v = o.cvars.c_index(i, j);
            z.push_back(v);
            Term tv = Term::variable(v);
            // prefer a witness whose linear part is the bare coefficient;
            // otherwise take the first generator with the right leading term
            const Polynomial* pure = nullptr;
            const Polynomial* any = nullptr;
            for (auto& g : gens) {
                if (rep.ordering.leading_term(g.poly) != tv) continue;
                if (!any) any = &g.poly;
                Polynomial lin = g.poly.linear_part();
                if (lin.size() == 1) {
                    pure = &g.poly;
                    break;
                }
            }
            if (!any) throw std::logic_error("no witness generator for an interior coefficient");
            rep.witnesses.push_back({v, pure ? *pure : *any});
        }
    }
    std::sort(z.begin(), z.end());

    // assemble the re-embedding from the witnesses: order by weight under the
    // report ordering, then back-substitute
    std::vector<std::pair<int, Polynomial>> tri;
    for (auto& [v, g] : rep.witnesses) tri.push_back({v, g * (1 / g.coeff(Term::variable(v)))});
    auto wt_of = [&](int v) {
        long w = row1[v] * 100000; // row-lex on the two weight rows
        if (!second_useless) w += row2[v];
        return w;
    };
    std::sort(tri.begin(), tri.end(), [&](const auto& a, const auto& b) {
        if (wt_of(a.first) != wt_of(b.first)) return wt_of(a.first) < wt_of(b.first);
        return a.first < b.first;
    });
    Ideal ideal;
    for (auto& g : gens) ideal.push_back(g.poly);
    rep.reembedding =
        assemble_from_triangular(ideal, z, o.cvars.size(), static_cast<int>(z.size()), tri,
                                 "simplicial-weights");
    return rep;
}

} // namespace bbs
