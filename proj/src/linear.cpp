#include "bbs/linear.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bbs {

LinearSystem linear_span_reduce(const std::vector<Polynomial>& forms, int nvars) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        if (f.total_degree() != 1 || !f.is_homogeneous())
            throw std::invalid_argument("linear span input must be homogeneous of degree one");
        std::vector<Rational> row(nvars, 0);
        for (auto& [t, c] : f.monomials()) row[t.entries()[0].first] = c;
        rows.push_back(std::move(row));
    }
    QMatrix m(std::move(rows));
    m.rref();
    LinearSystem sys;
    sys.nvars = nvars;
    std::vector<std::vector<Rational>> keep;
    for (int i = 0; i < m.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < nvars && zero; ++j)
            if (m.at(i, j) != 0) zero = false;
        if (!zero) keep.push_back(m.row(i));
    }
    sys.matrix = QMatrix(std::move(keep));
    for (int i = 0; i < sys.matrix.rows(); ++i) {
        Polynomial p;
        for (int j = 0; j < nvars; ++j)
            if (sys.matrix.at(i, j) != 0) p.add_term(Term::variable(j), sys.matrix.at(i, j));
        sys.forms.push_back(std::move(p));
    }
    return sys;
}

namespace {

// Recursive lexicographic enumeration of invertible column subsets with
// incremental elimination: `work` carries the system with already chosen
// columns pivoted away below row `depth`.
void enumerate_bases(const QMatrix& reduced, const std::vector<int>& require, int first_col,
                     QMatrix work, int depth, std::vector<int>& chosen, LinearFan& out) {
    int s = reduced.rows();
    int n = reduced.cols();
    if (depth == s) {
        for (int z : require)
            if (!std::binary_search(chosen.begin(), chosen.end(), z)) return;
        LinearFanEntry e;
        e.cols = chosen;
        // solve: marked basis = A_cols^{-1} * A
        QMatrix sub = reduced.select_columns(chosen);
        auto inv = sub.inverse();
        if (!inv) return; // cannot happen: chosen columns are independent
        QMatrix full = *inv * reduced;
        for (int i = 0; i < s; ++i) {
            Polynomial p;
            for (int j = 0; j < n; ++j)
                if (full.at(i, j) != 0) p.add_term(Term::variable(j), full.at(i, j));
            e.gens.push_back(std::move(p));
        }
        out.entries.push_back(std::move(e));
        return;
    }
    for (int col = first_col; col <= n - (s - depth); ++col) {
        // find a pivot for this column among rows >= depth
        int piv = -1;
        for (int i = depth; i < s; ++i)
            if (work.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue; // dependent on chosen columns: prune
        QMatrix next = work;
        for (int j = 0; j < n; ++j) std::swap(next.at(depth, j), next.at(piv, j));
        for (int i = depth + 1; i < s; ++i) {
            if (next.at(i, col) == 0) continue;
            Rational f = next.at(i, col) / next.at(depth, col);
            for (int j = 0; j < n; ++j) next.at(i, j) -= f * next.at(depth, j);
        }
        chosen.push_back(col);
        enumerate_bases(reduced, require, col + 1, std::move(next), depth + 1, chosen, out);
        chosen.pop_back();
    }
}

} // namespace

LinearFan linear_fan(const LinearSystem& sys) {
    LinearFan fan;
    if (sys.dim() == 0) {
        fan.entries.push_back({});
        return fan;
    }
    std::vector<int> chosen;
    enumerate_bases(sys.matrix, {}, 0, sys.matrix, 0, chosen, fan);
    return fan;
}

LinearFan restricted_fan(const LinearSystem& sys, const std::vector<int>& z) {
    std::vector<int> req = z;
    std::sort(req.begin(), req.end());
    if (std::adjacent_find(req.begin(), req.end()) != req.end())
        throw std::invalid_argument("duplicate variable in restriction");
    LinearFan fan;
    if (sys.dim() == 0) {
        if (req.empty()) fan.entries.push_back({});
        return fan;
    }
    std::vector<int> chosen;
    enumerate_bases(sys.matrix, req, 0, sys.matrix, 0, chosen, fan);
    return fan;
}

CotangentClasses cotangent_classes(const std::vector<NaturalGenerator>& gens, int nvars) {
    std::vector<int> parent(nvars);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> trivial_flag(nvars, 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        trivial_flag[a] = trivial_flag[a] || trivial_flag[b];
    };

    std::vector<char> seen(nvars, 0);
    for (const auto& g : gens) {
        Polynomial lin = g.poly.linear_part();
        if (lin.is_zero()) continue;
        std::vector<std::pair<int, Rational>> vars;
        for (auto& [t, c] : lin.monomials()) vars.push_back({t.entries()[0].first, c});
        for (auto& [v, c] : vars) seen[v] = 1;
        if (vars.size() == 1) {
            int r = find(vars[0].first);
            trivial_flag[r] = 1;
        } else if (vars.size() == 2 && vars[0].second + vars[1].second == 0) {
            unite(vars[0].first, vars[1].first);
        } else {
            throw std::invalid_argument(
                "linear part is neither a monomial nor a difference of two variables");
        }
    }

    std::vector<std::vector<int>> comps(nvars);
    for (int v = 0; v < nvars; ++v) comps[find(v)].push_back(v);

    CotangentClasses out;
    out.nvars = nvars;
    for (int r = 0; r < nvars; ++r) {
        if (comps[r].empty()) continue;
        bool touched = false;
        for (int v : comps[r]) touched = touched || seen[v];
        if (trivial_flag[find(r)]) {
            for (int v : comps[r]) out.trivial.push_back(v);
        } else if (!touched) {
            for (int v : comps[r]) out.basic.push_back(v); // never in any linear part
        } else if (comps[r].size() == 1) {
            out.basic.push_back(comps[r][0]);
        } else {
            out.proper.push_back(comps[r]);
        }
    }
    std::sort(out.trivial.begin(), out.trivial.end());
    std::sort(out.basic.begin(), out.basic.end());
    for (auto& e : out.proper) std::sort(e.begin(), e.end());
    std::sort(out.proper.begin(), out.proper.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<int> s_sigma(const CotangentClasses& cls, const TermOrdering& ord) {
    std::vector<int> out = cls.trivial;
    for (const auto& e : cls.proper) {
        int smallest = e[0];
        for (int v : e)
            if (ord.compare(Term::variable(v), Term::variable(smallest)) == Cmp::LT) smallest = v;
        for (int v : e)
            if (v != smallest) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> ltgfan_via_classes(const CotangentClasses& cls) {
    std::vector<std::vector<int>> out;
    std::vector<size_t> del(cls.proper.size(), 0);
    while (true) {
        std::vector<int> z = cls.trivial;
        for (size_t q = 0; q < cls.proper.size(); ++q)
            for (size_t i = 0; i < cls.proper[q].size(); ++i)
                if (i != del[q]) z.push_back(cls.proper[q][i]);
        std::sort(z.begin(), z.end());
        out.push_back(std::move(z));
        // odometer, last class fastest
        size_t q = cls.proper.size();
        while (q > 0) {
            --q;
            if (++del[q] < cls.proper[q].size()) break;
            del[q] = 0;
            if (q == 0) return out;
        }
        if (cls.proper.empty()) return out;
    }
}

CotangentReport cotangent_dimension(const OrderIdeal& o) {
    auto gens = natural_generators(o);
    auto cls = cotangent_classes(gens, o.cvars.size());
    CotangentReport r;
    r.cot_dim = o.cvars.size() - cls.lin_dim();
    r.principal_dim = o.n * o.mu();
    r.smooth = (r.cot_dim == r.principal_dim);
    return r;
}

} // namespace bbs
