#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bbs/polynomial.hpp"
#include "bbs/term.hpp"

namespace bbs {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Matrix-defined term ordering. Two representations are supported and may be
// combined: a list of explicit integer weight rows (compared first, in order),
// followed by a block tail. Each block compares its variables by total degree
// within the block, then by reverse lexicographic on the block's variable
// list. A single block over all variables is plain degrevlex; the two-block
// split [Z | rest] is an elimination ordering for Z whose implied first matrix
// row is the indicator vector of Z.
class TermOrdering {
public:
    struct Block {
        std::vector<int> vars; // in decreasing significance for revlex ties
    };

    TermOrdering() = default;

    int nvars() const { return n_; }
    const std::vector<std::vector<long>>& weight_rows() const { return rows_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    static TermOrdering degrevlex(int n) {
        TermOrdering o;
        o.n_ = n;
        o.blocks_.push_back(all_block(n));
        return o;
    }

    // Block elimination ordering: terms are compared by their Z-part first
    // (graded revlex within Z), then by the complement part. Any term touching
    // Z exceeds every Z-free term.
    static TermOrdering elimination(int n, const std::vector<int>& z) {
        if (z.empty()) throw std::invalid_argument("elimination block must be nonempty");
        std::vector<bool> in_z(n, false);
        for (int v : z) {
            if (v < 0 || v >= n) throw std::out_of_range("variable index out of range");
            if (in_z[v]) throw std::invalid_argument("duplicate variable in elimination block");
            in_z[v] = true;
        }
        TermOrdering o;
        o.n_ = n;
        Block zb, yb;
        for (int v = 0; v < n; ++v) (in_z[v] ? zb.vars : yb.vars).push_back(v);
        o.blocks_.push_back(zb);
        if (!yb.vars.empty()) o.blocks_.push_back(yb);
        return o;
    }

    // Weight row first (entries >= 0), degrevlex tie-break.
    static TermOrdering weighted(std::vector<long> w) {
        for (long x : w)
            if (x < 0) throw std::invalid_argument("negative weight");
        TermOrdering o;
        o.n_ = static_cast<int>(w.size());
        o.rows_.push_back(std::move(w));
        o.blocks_.push_back(all_block(o.n_));
        return o;
    }

    // Several weight rows, then degrevlex.
    static TermOrdering weighted_rows(int n, std::vector<std::vector<long>> rows) {
        TermOrdering o;
        o.n_ = n;
        for (auto& r : rows)
            if (static_cast<int>(r.size()) != n)
                throw std::invalid_argument("weight row length mismatch");
        o.rows_ = std::move(rows);
        o.blocks_.push_back(all_block(n));
        return o;
    }

    // Fully explicit matrix ordering; rows are compared lexicographically.
    // The matrix must have full column rank so that every pair of distinct
    // terms is separated.
    static TermOrdering matrix(std::vector<std::vector<long>> rows) {
        if (rows.empty()) throw std::invalid_argument("empty ordering matrix");
        TermOrdering o;
        o.n_ = static_cast<int>(rows[0].size());
        for (auto& r : rows)
            if (static_cast<int>(r.size()) != o.n_)
                throw std::invalid_argument("ragged ordering matrix");
        o.rows_ = std::move(rows);
        if (!full_column_rank(o.rows_, o.n_))
            throw std::invalid_argument("ordering matrix does not have full column rank");
        return o;
    }

    // Custom factory for tests and completion variants.
    static TermOrdering custom(int n, std::vector<std::vector<long>> rows, std::vector<Block> blocks) {
        TermOrdering o;
        o.n_ = n;
        o.rows_ = std::move(rows);
        o.blocks_ = std::move(blocks);
        return o;
    }

    Cmp compare(const Term& a, const Term& b) const {
        if (a.max_var() >= n_ || b.max_var() >= n_)
            throw std::invalid_argument("term does not live in the ordering's variable set");
        if (a == b) return Cmp::EQ;
        for (const auto& row : rows_) {
            long long wa = dot(row, a), wb = dot(row, b);
            if (wa != wb) return wa > wb ? Cmp::GT : Cmp::LT;
        }
        for (const auto& blk : blocks_) {
            int da = 0, db = 0;
            for (int v : blk.vars) {
                da += a.exponent(v);
                db += b.exponent(v);
            }
            if (da != db) return da > db ? Cmp::GT : Cmp::LT;
            // revlex: scan block variables from least significant upward; the
            // term with the larger exponent at the first difference is smaller.
            for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
                int ea = a.exponent(*it), eb = b.exponent(*it);
                if (ea != eb) return ea > eb ? Cmp::LT : Cmp::GT;
            }
        }
        throw std::logic_error("ordering not total on given terms");
    }

    bool greater(const Term& a, const Term& b) const { return compare(a, b) == Cmp::GT; }

    const Term& leading_term(const Polynomial& f) const {
        if (f.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
        const Term* best = nullptr;
        for (auto& [t, c] : f.monomials())
            if (!best || greater(t, *best)) best = &t;
        return *best;
    }

    Rational leading_coeff(const Polynomial& f) const { return f.coeff(leading_term(f)); }

    // Dense matrix view (weight rows, then one indicator+revlex expansion per
    // block). Intended for small variable counts: inspection, JSON, oracles.
    std::vector<std::vector<long>> to_matrix() const {
        std::vector<std::vector<long>> m = rows_;
        for (const auto& blk : blocks_) {
            std::vector<long> ind(n_, 0);
            for (int v : blk.vars) ind[v] = 1;
            m.push_back(ind);
            for (size_t k = blk.vars.size(); k-- > 1;) {
                std::vector<long> row(n_, 0);
                row[blk.vars[k]] = -1;
                m.push_back(row);
            }
        }
        return m;
    }

private:
    static Block all_block(int n) {
        Block b;
        b.vars.resize(n);
        std::iota(b.vars.begin(), b.vars.end(), 0);
        return b;
    }

    static long long dot(const std::vector<long>& row, const Term& t) {
        long long s = 0;
        for (auto& [v, e] : t.entries()) {
            if (v >= static_cast<int>(row.size())) throw std::out_of_range("weight row too short");
            s += static_cast<long long>(row[v]) * e;
        }
        return s;
    }

    static bool full_column_rank(const std::vector<std::vector<long>>& rows, int n);

    int n_ = 0;
    std::vector<std::vector<long>> rows_;
    std::vector<Block> blocks_;
};

// Lexicographic comparison with respect to the canonical variable order
// (x1 > x2 > ...). Not degree compatible; used for interreduction bookkeeping.
inline int lex_cmp(const Term& a, const Term& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (i == ea.size()) return -1;
        if (j == eb.size()) return 1;
        if (ea[i].first != eb[j].first) return ea[i].first < eb[j].first ? 1 : -1;
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? 1 : -1;
        ++i, ++j;
    }
    return 0;
}

} // namespace bbs
