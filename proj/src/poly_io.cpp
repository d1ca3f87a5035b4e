#include "bbs/poly_io.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace bbs {

std::string term_to_string(const Term& t, const VarSet& vars) {
    if (t.is_one()) return "1";
    std::string s;
    bool first = true;
    for (auto& [v, e] : t.entries()) {
        if (!first) s += "*";
        first = false;
        s += vars.name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string poly_to_string(const Polynomial& p, const VarSet& vars) {
    if (p.is_zero()) return "0";
    // Descending canonical order for stable output.
    std::vector<std::pair<Term, Rational>> terms(p.monomials().begin(), p.monomials().end());
    std::string s;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Rational& c = it->second;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (it->first.is_one()) {
            s += rational_to_string(mag);
        } else {
            if (!unit) s += rational_to_string(mag) + "*";
            s += term_to_string(it->first, vars);
        }
    }
    return s;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + msg);
    }
};

Rational parse_number(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected number");
    std::string num = c.s.substr(start, c.i - start);
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        c.skip_ws();
        size_t ds = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == ds) c.fail("expected denominator");
        num += "/" + c.s.substr(ds, c.i - ds);
    }
    return rational_from_string(num);
}

bool at_variable(Cursor& c) {
    char ch = c.peek();
    return std::isalpha(static_cast<unsigned char>(ch)) != 0;
}

std::string parse_varname(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
        ++c.i;
    if (c.i == start) c.fail("expected variable name");
    std::string name = c.s.substr(start, c.i - start);
    if (c.i < c.s.size() && c.s[c.i] == '[') {
        size_t close = c.s.find(']', c.i);
        if (close == std::string::npos) c.fail("unterminated bracket in variable name");
        // normalize away interior whitespace so "c[1, 2]" parses too
        for (size_t k = c.i; k <= close; ++k)
            if (!std::isspace(static_cast<unsigned char>(c.s[k]))) name += c.s[k];
        c.i = close + 1;
    }
    return name;
}

int parse_exponent(Cursor& c) {
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        Rational e = parse_number(c);
        if (e.get_den() != 1 || e <= 0) c.fail("bad exponent");
        return static_cast<int>(e.get_num().get_si());
    }
    return 1;
}

// One signed monomial: [rational] [* var[^exp]]*  (either part may be absent,
// but not both).
std::pair<Term, Rational> parse_monomial(Cursor& c, const VarSet& vars) {
    Rational coeff = 1;
    bool have_num = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_number(c);
        have_num = true;
    }
    std::vector<Term::Entry> entries;
    bool expect_factor = !have_num;
    while (true) {
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == '*') {
            ++c.i;
            expect_factor = true;
            continue;
        }
        if (!expect_factor) break;
        if (at_variable(c)) {
            std::string name = parse_varname(c);
            int idx = vars.index_of(name);
            int exp = parse_exponent(c);
            bool merged = false;
            for (auto& [v, e] : entries)
                if (v == idx) {
                    e += exp;
                    merged = true;
                    break;
                }
            if (!merged) entries.push_back({idx, exp});
            expect_factor = false;
        } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff *= parse_number(c);
            expect_factor = false;
        } else {
            c.fail("expected monomial factor");
        }
    }
    return {Term(std::move(entries)), coeff};
}

} // namespace

Polynomial poly_from_string(const std::string& s, const VarSet& vars) {
    Cursor c{s};
    Polynomial p;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        c.skip_ws();
        if (c.s[c.i] == '+' || c.s[c.i] == '-') {
            sign = c.s[c.i] == '-' ? -1 : 1;
            ++c.i;
            // allow chains like "+ -" only via explicit sign on the number
        } else if (!first) {
            c.fail("expected '+' or '-' between monomials");
        }
        auto [t, coeff] = parse_monomial(c, vars);
        p.add_term(t, sign * coeff);
        first = false;
    }
    if (first) throw std::invalid_argument("empty polynomial literal");
    return p;
}

Term term_from_string(const std::string& s, const VarSet& vars) {
    Polynomial p = poly_from_string(s, vars);
    if (p.size() != 1 || p.monomials().begin()->second != 1)
        throw std::invalid_argument("not a term: " + s);
    return p.monomials().begin()->first;
}

} // namespace bbs
