#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bbs {

// Power product, stored as a sparse sorted list of (variable index, exponent).
// The empty product is the term 1. Variable indices are 0-based positions in
// the owning VarSet; exponents are strictly positive in storage.
class Term {
public:
    using Entry = std::pair<int, int>; // (var, exp), exp > 0

    Term() = default;

    explicit Term(std::vector<Entry> entries) : e_(std::move(entries)) {
        std::sort(e_.begin(), e_.end());
        for (size_t i = 0; i < e_.size(); ++i) {
            if (e_[i].second <= 0) throw std::invalid_argument("non-positive exponent");
            if (i > 0 && e_[i - 1].first == e_[i].first)
                throw std::invalid_argument("duplicate variable in term");
        }
    }

    static Term one() { return Term(); }

    static Term variable(int var, int exp = 1) {
        if (exp == 0) return Term();
        return Term({{var, exp}});
    }

    static Term from_dense(const std::vector<int>& exps) {
        std::vector<Entry> es;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0) throw std::invalid_argument("negative exponent");
            if (exps[i] > 0) es.push_back({static_cast<int>(i), exps[i]});
        }
        return Term(std::move(es));
    }

    std::vector<int> dense(int n) const {
        std::vector<int> v(n, 0);
        for (auto& [var, exp] : e_) {
            if (var >= n) throw std::out_of_range("term variable outside variable set");
            v[var] = exp;
        }
        return v;
    }

    const std::vector<Entry>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : e_) d += e;
        return d;
    }

    int exponent(int var) const {
        for (auto& [v, e] : e_)
            if (v == var) return e;
        return 0;
    }

    int max_var() const { return e_.empty() ? -1 : e_.back().first; }

    Term operator*(const Term& o) const {
        std::vector<Entry> r;
        r.reserve(e_.size() + o.e_.size());
        size_t i = 0, j = 0;
        while (i < e_.size() || j < o.e_.size()) {
            if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
                r.push_back(e_[i++]);
            else if (i == e_.size() || o.e_[j].first < e_[i].first)
                r.push_back(o.e_[j++]);
            else {
                r.push_back({e_[i].first, e_[i].second + o.e_[j].second});
                ++i, ++j;
            }
        }
        Term t;
        t.e_ = std::move(r);
        return t;
    }

    bool divides(const Term& o) const {
        size_t j = 0;
        for (auto& [v, e] : e_) {
            while (j < o.e_.size() && o.e_[j].first < v) ++j;
            if (j == o.e_.size() || o.e_[j].first != v || o.e_[j].second < e) return false;
        }
        return true;
    }

    bool divisible_by_var(int var) const { return exponent(var) > 0; }

    // Quotient this / o; caller must ensure o divides this.
    Term operator/(const Term& o) const {
        std::vector<Entry> r;
        size_t j = 0;
        for (auto& [v, e] : e_) {
            int sub = 0;
            while (j < o.e_.size() && o.e_[j].first < v) ++j;
            if (j < o.e_.size() && o.e_[j].first == v) sub = o.e_[j].second;
            if (sub > e) throw std::invalid_argument("term quotient does not exist");
            if (e - sub > 0) r.push_back({v, e - sub});
        }
        Term t;
        t.e_ = std::move(r);
        return t;
    }

    Term lcm(const Term& o) const {
        std::vector<Entry> r;
        size_t i = 0, j = 0;
        while (i < e_.size() || j < o.e_.size()) {
            if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
                r.push_back(e_[i++]);
            else if (i == e_.size() || o.e_[j].first < e_[i].first)
                r.push_back(o.e_[j++]);
            else {
                r.push_back({e_[i].first, std::max(e_[i].second, o.e_[j].second)});
                ++i, ++j;
            }
        }
        Term t;
        t.e_ = std::move(r);
        return t;
    }

    bool coprime(const Term& o) const {
        size_t i = 0, j = 0;
        while (i < e_.size() && j < o.e_.size()) {
            if (e_[i].first < o.e_[j].first) ++i;
            else if (o.e_[j].first < e_[i].first) ++j;
            else return false;
        }
        return true;
    }

    bool operator==(const Term& o) const { return e_ == o.e_; }
    bool operator!=(const Term& o) const { return e_ != o.e_; }

private:
    std::vector<Entry> e_;
};

// Structural comparator: graded, ties by reverse lexicographic with respect to
// the canonical variable order (x1 > x2 > ...). Used as the container order of
// polynomial storage and as the canonical order for printing; semantic term
// orderings live in ordering.hpp.
inline int grevlex_cmp(const Term& a, const Term& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // a > b iff the last variable where exponents differ has smaller exponent in a.
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    auto ia = ea.rbegin();
    auto ib = eb.rbegin();
    while (ia != ea.rend() || ib != eb.rend()) {
        if (ib == eb.rend()) return 1;              // b exhausted: a has trailing variable -> a smaller? no:
        if (ia == ea.rend()) return -1;             // handled below by var comparison; unreachable with equal degrees
        if (ia->first != ib->first) {
            // the larger trailing variable index holds a positive exponent where
            // the other term has zero: that term is smaller
            return ia->first > ib->first ? -1 : 1;
        }
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    return 0;
}

struct TermGrevlexLess {
    bool operator()(const Term& a, const Term& b) const { return grevlex_cmp(a, b) < 0; }
};

} // namespace bbs
