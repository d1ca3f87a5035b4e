#include "bbs/simplex.hpp"

#include <stdexcept>

namespace bbs {

std::optional<LPResult> simplex_maximize(const std::vector<std::vector<Rational>>& A,
                                         const std::vector<Rational>& b,
                                         const std::vector<Rational>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    for (const auto& bi : b)
        if (bi < 0) throw std::invalid_argument("simplex requires b >= 0");

    // tableau: m rows of [A | I | b]; objective row carries reduced costs.
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(n + m + 1, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = b[i];
    }
    std::vector<Rational> obj(n + m + 1, 0);
    for (int j = 0; j < n; ++j) obj[j] = c[j];
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    while (true) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (obj[j] > 0) { // Bland: smallest index with positive reduced cost
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][n + m] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return std::nullopt; // unbounded
        // pivot
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        {
            Rational f = obj[enter];
            for (int j = 0; j <= n + m; ++j) obj[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LPResult res;
    res.objective = -obj[n + m];
    res.x.assign(n, 0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = t[i][n + m];
    return res;
}

std::optional<std::vector<long>> weight_feasibility_lp(
    const std::vector<std::pair<int, Polynomial>>& pairs, int nvars) {
    // variables: w_0..w_{nvars-1}, delta
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (const auto& [z, f] : pairs) {
        if (z < 0 || z >= nvars) throw std::out_of_range("variable index out of range");
        Term zt = Term::variable(z);
        if (f.coeff(zt) == 0)
            throw std::invalid_argument("target variable must occur in the polynomial's support");
        std::vector<int> zexp = zt.dense(nvars);
        for (auto& [t, cf] : f.monomials()) {
            if (t == zt) continue;
            // -(w . (log z - log t)) + delta <= 0
            std::vector<Rational> row(nvars + 1, 0);
            std::vector<int> te = t.dense(nvars);
            for (int v = 0; v < nvars; ++v) row[v] = Rational(te[v] - zexp[v]);
            row[nvars] = 1;
            A.push_back(std::move(row));
            b.push_back(0);
        }
    }
    // box constraints keep the optimum finite
    for (int v = 0; v <= nvars; ++v) {
        std::vector<Rational> row(nvars + 1, 0);
        row[v] = 1;
        A.push_back(std::move(row));
        b.push_back(1);
    }
    std::vector<Rational> c(nvars + 1, 0);
    c[nvars] = 1;
    auto res = simplex_maximize(A, b, c);
    if (!res || res->objective <= 0) return std::nullopt;

    mpz_class denlcm = 1;
    for (int v = 0; v < nvars; ++v)
        mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), res->x[v].get_den().get_mpz_t());
    std::vector<long> w(nvars);
    for (int v = 0; v < nvars; ++v) {
        mpq_class scaled = res->x[v] * Rational(denlcm);
        w[v] = static_cast<long>(scaled.get_num().get_si());
    }
    return w;
}

} // namespace bbs
