#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bbs/rational.hpp"
#include "bbs/term.hpp"

namespace bbs {

// Sparse polynomial with exact rational coefficients. Storage order is the
// structural grevlex comparator only; semantic term orderings are applied at
// use sites. No zero coefficients are ever stored.
class Polynomial {
public:
    using Map = std::map<Term, Rational, TermGrevlexLess>;

    Polynomial() = default;

    explicit Polynomial(const Rational& c) {
        if (c != 0) m_[Term::one()] = c;
    }

    static Polynomial term(const Term& t, const Rational& c = 1) {
        Polynomial p;
        if (c != 0) p.m_[t] = c;
        return p;
    }

    static Polynomial variable(int var, const Rational& c = 1) {
        return term(Term::variable(var), c);
    }

    bool is_zero() const { return m_.empty(); }
    size_t size() const { return m_.size(); }
    const Map& monomials() const { return m_; }

    Rational coeff(const Term& t) const {
        auto it = m_.find(t);
        return it == m_.end() ? Rational(0) : it->second;
    }

    void add_term(const Term& t, const Rational& c) {
        if (c == 0) return;
        auto it = m_.find(t);
        if (it == m_.end()) {
            m_[t] = c;
        } else {
            it->second += c;
            if (it->second == 0) m_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [t, c] : o.m_) add_term(t, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [t, c] : o.m_) add_term(t, -c);
        return *this;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        r += o;
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        r -= o;
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [t, c] : r.m_) c = -c;
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r;
        for (auto& [t1, c1] : m_)
            for (auto& [t2, c2] : o.m_) r.add_term(t1 * t2, c1 * c2);
        return r;
    }

    Polynomial operator*(const Rational& c) const {
        Polynomial r;
        if (c == 0) return r;
        r.m_ = m_;
        for (auto& [t, cc] : r.m_) cc *= c;
        return r;
    }

    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            m_.clear();
        } else {
            for (auto& [t, cc] : m_) cc *= c;
        }
        return *this;
    }

    Polynomial mul_term(const Term& t, const Rational& c = 1) const {
        Polynomial r;
        if (c == 0) return r;
        for (auto& [u, cc] : m_) r.m_[u * t] = cc * c;
        return r;
    }

    bool operator==(const Polynomial& o) const { return m_ == o.m_; }
    bool operator!=(const Polynomial& o) const { return m_ != o.m_; }

    int total_degree() const {
        int d = -1;
        for (auto& [t, c] : m_) d = std::max(d, t.degree());
        return d; // -1 for the zero polynomial
    }

    bool is_homogeneous() const {
        int d = -1;
        for (auto& [t, c] : m_) {
            if (d == -1) d = t.degree();
            else if (t.degree() != d) return false;
        }
        return true;
    }

    // Homogeneous component of the given standard degree.
    Polynomial component(int degree) const {
        Polynomial r;
        for (auto& [t, c] : m_)
            if (t.degree() == degree) r.m_[t] = c;
        return r;
    }

    Polynomial linear_part() const { return component(1); }
    Polynomial quadratic_part() const { return component(2); }

    // True when the support is a single term with unit coefficient equal to
    // the given variable.
    bool is_unit_variable(int var) const {
        return m_.size() == 1 && m_.begin()->first == Term::variable(var) &&
               m_.begin()->second == 1;
    }

    int max_var() const {
        int mv = -1;
        for (auto& [t, c] : m_) mv = std::max(mv, t.max_var());
        return mv;
    }

    std::vector<int> support_variables() const {
        std::vector<bool> seen;
        std::vector<int> out;
        for (auto& [t, c] : m_)
            for (auto& [v, e] : t.entries()) {
                if (static_cast<size_t>(v) >= seen.size()) seen.resize(v + 1, false);
                if (!seen[v]) {
                    seen[v] = true;
                    out.push_back(v);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool contains_variable(int var) const {
        for (auto& [t, c] : m_)
            if (t.divisible_by_var(var)) return true;
        return false;
    }

    // Substitute variable -> replacement polynomial.
    Polynomial substitute(int var, const Polynomial& repl) const {
        Polynomial r;
        for (auto& [t, c] : m_) {
            int e = t.exponent(var);
            if (e == 0) {
                r.add_term(t, c);
                continue;
            }
            Term rest = t / Term::variable(var, e);
            Polynomial p = Polynomial::term(rest, c);
            for (int k = 0; k < e; ++k) p = p * repl;
            r += p;
        }
        return r;
    }

private:
    Map m_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

using Ideal = std::vector<Polynomial>; // empty list denotes the zero ideal

} // namespace bbs
