#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bbs/linear.hpp"
#include "bbs/poly_io.hpp"
#include "support/fixtures.hpp"

using namespace bbs;

namespace {

// oracle: enumerate every column subset and test the minor determinant
std::set<std::vector<int>> brute_force_bases(const QMatrix& A) {
    int r = A.rows(), n = A.cols();
    std::set<std::vector<int>> out;
    std::vector<int> idx(r);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r) {
            QMatrix sub = A.select_columns(idx);
            if (sub.det() != 0) out.insert(idx);
            return;
        }
        for (int c = start; c <= n - (r - depth); ++c) {
            idx[depth] = c;
            rec(c + 1, depth + 1);
        }
    };
    if (r > 0) rec(0, 0);
    return out;
}

// oracle: membership of a vector in the row span
bool in_span(const QMatrix& A, const std::vector<Rational>& v) {
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < A.rows(); ++i) rows.push_back(A.row(i));
    int base = QMatrix(rows).rank();
    rows.push_back(v);
    return QMatrix(rows).rank() == base;
}

} // namespace

TEST_CASE("span reduction dimensions") {
    VarSet v10 = VarSet::ambient(10);
    std::vector<Polynomial> lins;
    for (auto& f : fx::weight_checker_ideal()) lins.push_back(f.linear_part());
    CHECK(linear_span_reduce(lins, 10).dim() == 5);

    VarSet v2 = VarSet::ambient(2);
    Polynomial l = poly_from_string("x1 + x2", v2);
    CHECK(linear_span_reduce({l, l}, 2).dim() == 1);

    // linear parts of the eight-term fixture's generators span 24 dimensions
    OrderIdeal o = fx::oi_eight();
    std::vector<Polynomial> parts;
    for (auto& g : natural_generators(o)) parts.push_back(g.poly.linear_part());
    CHECK(linear_span_reduce(parts, o.cvars.size()).dim() == 24);
    CHECK_THROWS_AS(linear_span_reduce({poly_from_string("x1*x2", v2)}, 2),
                    std::invalid_argument);
}

TEST_CASE("fan of the printed two-form system") {
    VarSet v4 = VarSet::ambient(4);
    auto sys = linear_span_reduce(fx::two_form_fan_ideal(), 4);
    auto fan = linear_fan(sys);
    REQUIRE(fan.entries.size() == 5);
    auto gb_at = [&](size_t k) {
        std::vector<std::string> out;
        for (auto& g : fan.entries[k].gens) out.push_back(poly_to_string(g, v4));
        return out;
    };
    CHECK(fan.entries[0].cols == std::vector<int>{0, 1});
    CHECK(gb_at(0) == std::vector<std::string>{"x1 - x3 + 2*x4", "x2 + 2*x4"});
    CHECK(fan.entries[1].cols == std::vector<int>{0, 3});
    CHECK(gb_at(1) == std::vector<std::string>{"x1 - x2 - x3", "1/2*x2 + x4"});
    CHECK(fan.entries[2].cols == std::vector<int>{1, 2});
    CHECK(gb_at(2) == std::vector<std::string>{"x2 + 2*x4", "-x1 + x3 - 2*x4"});
    CHECK(fan.entries[3].cols == std::vector<int>{1, 3});
    CHECK(gb_at(3) == std::vector<std::string>{"-x1 + x2 + x3", "1/2*x1 - 1/2*x3 + x4"});
    CHECK(fan.entries[4].cols == std::vector<int>{2, 3});
    CHECK(gb_at(4) == std::vector<std::string>{"-x1 + x2 + x3", "1/2*x2 + x4"});

    auto rfan = restricted_fan(sys, {2});
    REQUIRE(rfan.entries.size() == 2);
    CHECK(rfan.entries[0].cols == std::vector<int>{1, 2});
    CHECK(rfan.entries[1].cols == std::vector<int>{2, 3});

    CHECK(restricted_fan(sys, {}).entries.size() == 5);
    // a variable missing from every form can never be a mark
    auto sys1 = linear_span_reduce({poly_from_string("x1 - x2", v4)}, 4);
    CHECK(restricted_fan(sys1, {3}).entries.empty());
    auto fan1 = linear_fan(sys1);
    REQUIRE(fan1.entries.size() == 2);
    CHECK(poly_to_string(fan1.entries[0].gens[0], v4) == "x1 - x2");
    CHECK(poly_to_string(fan1.entries[1].gens[0], v4) == "-x1 + x2");
}

TEST_CASE("fan agrees with the determinant oracle on random systems") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(rng() % 4);
        int n = r + 1 + static_cast<int>(rng() % (7 - r));
        std::vector<Polynomial> forms;
        for (int i = 0; i < r; ++i) {
            Polynomial f;
            for (int j = 0; j < n; ++j) {
                long c = static_cast<long>(rng() % 5) - 2;
                if (c != 0) f.add_term(Term::variable(j), Rational(c));
            }
            if (!f.is_zero()) forms.push_back(f);
        }
        auto sys = linear_span_reduce(forms, n);
        auto fan = linear_fan(sys);
        auto oracle = brute_force_bases(sys.matrix);
        std::set<std::vector<int>> got;
        for (auto& e : fan.entries) got.insert(e.cols);
        CHECK(got == oracle);
        // each emitted basis is marked, monic and reduced
        for (auto& e : fan.entries) {
            for (size_t k = 0; k < e.cols.size(); ++k) {
                CHECK(e.gens[k].coeff(Term::variable(e.cols[k])) == 1);
                for (size_t k2 = 0; k2 < e.cols.size(); ++k2)
                    if (k2 != k) CHECK(e.gens[k].coeff(Term::variable(e.cols[k2])) == 0);
                CHECK(in_span(sys.matrix, [&] {
                    std::vector<Rational> v(n, 0);
                    for (auto& [t, c] : e.gens[k].monomials()) v[t.entries()[0].first] = c;
                    return v;
                }()));
            }
        }
    }
}

TEST_CASE("cotangent classes of the three-term line fixture") {
    OrderIdeal o = fx::oi_zline();
    auto cls = cotangent_classes(natural_generators(o), o.cvars.size());
    CHECK(cls.trivial ==
          fx::cflats(o, {{1, 3}, {1, 4}, {1, 6}, {1, 7}, {2, 6}, {2, 7}}));
    REQUIRE(cls.proper.size() == 4);
    CHECK(cls.proper[0] == fx::cflats(o, {{2, 1}, {3, 3}}));
    CHECK(cls.proper[1] == fx::cflats(o, {{2, 2}, {3, 4}}));
    CHECK(cls.proper[2] == fx::cflats(o, {{1, 1}, {2, 3}, {3, 6}}));
    CHECK(cls.proper[3] == fx::cflats(o, {{1, 2}, {2, 4}, {3, 7}}));
    CHECK(ltgfan_via_classes(cls).size() == 36);
}

TEST_CASE("cotangent classes of the eight-term fixture") {
    OrderIdeal o = fx::oi_eight();
    auto cls = cotangent_classes(natural_generators(o), o.cvars.size());
    CHECK(cls.trivial.size() == 20);
    CHECK(cls.basic.size() == 13);
    std::set<std::vector<int>> proper(cls.proper.begin(), cls.proper.end());
    CHECK(proper == std::set<std::vector<int>>{fx::cflats(o, {{5, 1}, {8, 5}}),
                                               fx::cflats(o, {{4, 3}, {5, 4}}),
                                               fx::cflats(o, {{4, 1}, {5, 2}, {7, 5}})});
    auto fan = ltgfan_via_classes(cls);
    CHECK(fan.size() == 12);
    for (auto& z : fan) CHECK(z.size() == 24);
    // minimal generators of the leading term ideal for the canonical ordering
    auto s = s_sigma(cls, TermOrdering::degrevlex(o.cvars.size()));
    CHECK(s.size() == 24);
    std::vector<int> keep = fx::cflats(o, {{5, 1}, {4, 3}, {4, 1}, {5, 2}});
    for (int v : keep) CHECK(std::count(s.begin(), s.end(), v) == 1);
    CHECK(std::count(s.begin(), s.end(), o.cvars.c_index(8, 5)) == 0);
    CHECK(std::count(s.begin(), s.end(), o.cvars.c_index(5, 4)) == 0);
    CHECK(std::count(s.begin(), s.end(), o.cvars.c_index(7, 5)) == 0);
}

TEST_CASE("classes agree with the span membership oracle") {
    for (auto o : {fx::oi_122(), fx::oi_box22(), fx::oi_lshape(), fx::oi_eight(), fx::oi_zline(),
                   fx::oi_zsquare(), fx::oi_xy(), planar_box(2, 1),
                   build_order_ideal(2, std::vector<std::vector<int>>{{0, 0}})}) {
        REQUIRE(o.cvars.size() <= 40);
        auto gens = natural_generators(o);
        std::vector<Polynomial> parts;
        for (auto& g : gens) parts.push_back(g.poly.linear_part());
        auto sys = linear_span_reduce(parts, o.cvars.size());
        auto cls = cotangent_classes(gens, o.cvars.size());
        std::vector<int> cls_of(o.cvars.size(), 0); // 1 trivial, 2 basic, 3+ proper id
        for (int v : cls.trivial) cls_of[v] = 1;
        for (int v : cls.basic) cls_of[v] = 2;
        for (size_t q = 0; q < cls.proper.size(); ++q)
            for (int v : cls.proper[q]) cls_of[v] = 3 + static_cast<int>(q);
        auto unit = [&](int v) {
            std::vector<Rational> e(o.cvars.size(), 0);
            e[v] = 1;
            return e;
        };
        for (int v = 0; v < o.cvars.size(); ++v) {
            CHECK((cls_of[v] == 1) == in_span(sys.matrix, unit(v)));
            for (int w = v + 1; w < o.cvars.size(); ++w) {
                if (cls_of[v] == 1 || cls_of[w] == 1) continue;
                auto diff = unit(v);
                diff[w] = -1;
                bool equivalent = in_span(sys.matrix, diff);
                CHECK(equivalent == (cls_of[v] >= 3 && cls_of[v] == cls_of[w]));
            }
        }
        CHECK(cls.lin_dim() == sys.dim());
    }
}

TEST_CASE("class-driven fan equals the mark sets of the generic fan") {
    for (auto o : {fx::oi_122(), fx::oi_box22(), fx::oi_zline(), planar_box(2, 1),
                   fx::oi_lshape()}) {
        REQUIRE(o.cvars.size() <= 25);
        auto gens = natural_generators(o);
        std::vector<Polynomial> parts;
        for (auto& g : gens) parts.push_back(g.poly.linear_part());
        auto sys = linear_span_reduce(parts, o.cvars.size());
        auto cls = cotangent_classes(gens, o.cvars.size());
        std::set<std::vector<int>> via_classes;
        for (auto& z : ltgfan_via_classes(cls)) via_classes.insert(z);
        std::set<std::vector<int>> via_fan;
        for (auto& e : linear_fan(sys).entries) via_fan.insert(e.cols);
        CHECK(via_classes == via_fan);
    }
}

TEST_CASE("no proper classes collapses the fan to the trivial set") {
    OrderIdeal o = simplicial_order_ideal(2, 2);
    auto cls = cotangent_classes(natural_generators(o), o.cvars.size());
    CHECK(cls.proper.empty());
    auto fan = ltgfan_via_classes(cls);
    REQUIRE(fan.size() == 1);
    CHECK(fan[0] == cls.trivial);
}

TEST_CASE("cotangent dimension reports") {
    auto r1 = cotangent_dimension(simplicial_order_ideal(3, 1));
    CHECK(r1.cot_dim == 18);
    CHECK(r1.principal_dim == 12);
    CHECK_FALSE(r1.smooth);
    auto r2 = cotangent_dimension(simplicial_order_ideal(2, 2));
    CHECK(r2.cot_dim == 12);
    CHECK(r2.smooth);
    auto r3 = cotangent_dimension(fx::oi_xy());
    CHECK(r3.cot_dim == 15);
    CHECK(r3.principal_dim == 15);
    CHECK(r3.smooth);
    auto r4 = cotangent_dimension(fx::oi_zsquare());
    CHECK(r4.cot_dim == 21);
    CHECK(r4.principal_dim == 15);
    CHECK_FALSE(r4.smooth);
}

TEST_CASE("planar corpus: basic coefficients sit on the rim, proper classes touch it") {
    for (unsigned long seed = 100; seed < 120; ++seed) {
        int n = 2 + static_cast<int>(seed % 2);
        OrderIdeal o = random_order_ideal(n, 4 + static_cast<int>(seed % 5), seed);
        REQUIRE(o.mu() <= 8);
        auto cls = cotangent_classes(natural_generators(o), o.cvars.size());
        for (int v : cls.basic) CHECK(o.in_rim[o.cvars.c_pair(v).first - 1]);
        for (auto& e : cls.proper) {
            bool touches_rim = false;
            for (int v : e) touches_rim = touches_rim || o.in_rim[o.cvars.c_pair(v).first - 1];
            CHECK(touches_rim);
        }
    }
}
