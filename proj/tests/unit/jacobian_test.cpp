#include "doctest.h"

#include "lgkit/classify.hpp"
#include "lgkit/error.hpp"
#include "lgkit/jacobian.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace lgkit;

namespace {

std::vector<Rational> q_of(const Polynomial& f) {
    return weights(check_invertible(f).matrix).q;
}

std::vector<Rational> rv(std::initializer_list<std::pair<long, long>> v) {
    std::vector<Rational> out;
    for (auto [n, d] : v) out.push_back(make_rational(n, d));
    return out;
}

std::set<Exponents> as_set(const std::vector<Exponents>& v) {
    return {v.begin(), v.end()};
}

std::set<Exponents> basis_set(const GradedBasis& b) {
    std::set<Exponents> out;
    for (const auto& e : b.elements) out.insert(e.exponents);
    return out;
}

} // namespace

TEST_CASE("graded monomials") {
    CHECK(as_set(graded_monomials(rv({{1, 3}, {1, 3}, {1, 3}}), Rational(1, 3))) ==
          std::set<Exponents>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(as_set(graded_monomials(rv({{1, 3}, {1, 3}}), Rational(2, 3))) ==
          std::set<Exponents>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(as_set(graded_monomials(rv({{1, 3}, {2, 9}}), Rational(8, 9))) == std::set<Exponents>{{2, 1}, {0, 4}});
    CHECK(graded_monomials(rv({{1, 3}}), Rational(-1, 3)).empty());
}

TEST_CASE("jacobian bases") {
    auto x3 = parse_polynomial("x^3");
    CHECK(basis_set(jacobian_basis(x3, q_of(x3))) == std::set<Exponents>{{0}, {1}});

    auto d4 = parse_polynomial("x^2*y + y^3");
    auto b = jacobian_basis(d4, q_of(d4));
    CHECK(basis_set(b) == std::set<Exponents>{{0, 0}, {1, 0}, {0, 1}, {0, 2}});
    CHECK(b.socle_degree == Rational(2, 3));

    auto cubic = parse_polynomial("x^3+y^3+z^3");
    std::set<Exponents> box;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) box.insert({i, j, k});
    CHECK(basis_set(jacobian_basis(cubic, q_of(cubic))) == box);
}

TEST_CASE("basis degrees are nondecreasing and palindromic") {
    for (const char* text : {"x1^2*x3 + x2^3 + x3^5", "x1^2*x2 + x2^2*x3 + x1*x3^3", "x1^3 + x1*x2^5",
                             "x1^4*x2 + x2^2*x3 + x3^5"}) {
        auto f = parse_polynomial(text);
        auto b = jacobian_basis(f, q_of(f));
        std::vector<Rational> deg;
        for (const auto& e : b.elements) deg.push_back(e.degree);
        CHECK(std::is_sorted(deg.begin(), deg.end()));
        std::vector<Rational> mirrored;
        for (auto it = deg.rbegin(); it != deg.rend(); ++it) mirrored.push_back(b.socle_degree - *it);
        CHECK(mirrored == deg);
    }
}

TEST_CASE("graded dimensions agree with the Poincare series and dense elimination") {
    for (const char* text : {"x^2*y + y^3", "x^3 + x*y^3", "x1^2*x3 + x2^3 + x3^4", "x1^2*x2 + x2^2*x3 + x1*x3^3",
                             "x1^3 + x2^3 + x3^4", "3*x1^2*x2 + -1/2*x2^4"}) {
        auto f = parse_polynomial(text);
        auto q = q_of(f);
        auto s = oracle::scale_weights(q);
        GradedJacobian jac(f, q);
        const long window = jac.top_degree() + jac.max_weight();
        auto series = oracle::poincare_series(s.w, s.scale, window);
        auto dense = oracle::dense_graded_dimensions(f, s.w, s.scale, window);
        for (long d = 0; d <= window; ++d) {
            const auto dim = jac.slice(d).quotient_dimension();
            CHECK(Integer(static_cast<unsigned long>(dim)) == series[d]);
            CHECK(static_cast<long>(dim) == dense[d]);
        }
    }
}

TEST_CASE("binomial solver agrees with sparse elimination") {
    for (const char* text : {"x^2*y + y^3", "x1^2*x2 + x2^2*x3 + x1*x3^3", "x1^3*x2 + x2^4*x3 + x1*x3^3",
                             "2*x1^3*x2 + -7*x1*x2^4", "x1^2*x2 + x2^3*x3 + x3^2*x4 + x4^3", "x1^2*x3 + x2^3 + x3^5"}) {
        auto f = parse_polynomial(text);
        auto q = q_of(f);
        GradedJacobian jac(f, q);
        REQUIRE(jac.binomial());
        for (long d = 0; d <= jac.top_degree() + jac.max_weight(); ++d)
            CHECK(jac.standard_monomials(d) == jac.slice(d).standard_monomials());
    }
    // a filter that keeps monomials with an even x1 exponent
    auto f = parse_polynomial("x1^2*x2 + x2^2*x3 + x1*x3^3");
    GradedJacobian jac(f, q_of(f));
    auto even = [](const Exponents& m) { return m[0] % 2 == 0; };
    for (long d = 0; d <= jac.top_degree(); ++d) {
        std::vector<Exponents> fast, slow;
        bool fast_threw = false, slow_threw = false;
        try {
            fast = jac.standard_monomials(d, even);
        } catch (const Error&) {
            fast_threw = true;
        }
        try {
            slow = jac.slice(d, even).standard_monomials();
        } catch (const Error&) {
            slow_threw = true;
        }
        CHECK(fast_threw == slow_threw);
        CHECK(fast == slow);
    }
}

TEST_CASE("non binomial ideals use elimination") {
    auto f = parse_polynomial("x^3 + x^2*y + x*y^2 + y^3");
    GradedJacobian jac(f, rv({{1, 3}, {1, 3}}));
    CHECK_FALSE(jac.binomial());
    std::size_t total = 0;
    for (long d = 0; d <= jac.top_degree(); ++d) total += jac.standard_monomials(d).size();
    CHECK(total == 4);
}

TEST_CASE("reduction to the socle") {
    auto x3 = parse_polynomial("x^3");
    CHECK(reduce_top_degree(parse_polynomial("x"), x3, q_of(x3)) == 1);
    CHECK_THROWS_AS(reduce_top_degree(parse_polynomial("x^2"), x3, q_of(x3)), Error);

    auto d4 = parse_polynomial("x^2*y + y^3");
    CHECK(reduce_top_degree(parse_polynomial("x^2", 2), d4, q_of(d4)) == -3);
    CHECK(reduce_top_degree(parse_polynomial("y^2"), d4, q_of(d4)) == 1);
}

TEST_CASE("hessian") {
    CHECK(format_polynomial(hessian(parse_polynomial("x^3"))) == "6*x1");
    CHECK(format_polynomial(hessian(parse_polynomial("x^3+y^3"))) == "36*x1*x2");
    CHECK(format_polynomial(hessian(parse_polynomial("x^2*y + y^3"))) == "-4*x1^2 + 12*x2^2");
    auto f = parse_polynomial("x1^2*x3 + x2^3 + x3^5");
    auto q = q_of(f);
    const auto h = hessian(f);
    for (const auto& t : h.terms()) CHECK(weighted_degree(t.exponents, q) == central_charge(q));
}

TEST_CASE("Fermat residue pairing") {
    for (long a = 3; a <= 9; ++a) {
        auto f = Polynomial::monomial({static_cast<int>(a)});
        auto q = q_of(f);
        auto b = jacobian_basis(f, q);
        auto g = residue_pairing(f, q, b);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                CHECK(g.matrix(i, j) ==
                      oracle::fermat_residue(a, b.elements[i].exponents[0] + b.elements[j].exponents[0]));
    }
    auto x3 = parse_polynomial("x^3");
    auto g = residue_pairing(x3, q_of(x3), jacobian_basis(x3, q_of(x3)));
    CHECK(g.matrix == RationalMatrix{{0, Rational(1, 3)}, {Rational(1, 3), 0}});
}

TEST_CASE("residue pairing multiplies over disjoint sums") {
    auto f = parse_polynomial("x^3+y^3");
    auto q = q_of(f);
    auto b = jacobian_basis(f, q);
    auto g = residue_pairing(f, q, b);
    std::size_t unit = 0, socle = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b.elements[i].exponents == Exponents{0, 0}) unit = i;
        if (b.elements[i].exponents == Exponents{1, 1}) socle = i;
    }
    CHECK(g.matrix(unit, socle) == Rational(1, 9));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto& ei = b.elements[i].exponents;
            const auto& ej = b.elements[j].exponents;
            CHECK(g.matrix(i, j) == oracle::fermat_residue(3, ei[0] + ej[0]) * oracle::fermat_residue(3, ei[1] + ej[1]));
        }
}

TEST_CASE("pairing is symmetric, graded and nondegenerate") {
    for (const char* text : {"x^2*y + y^3", "x^3 + x*y^3", "x1^2*x2 + x2^2*x3 + x1*x3^3", "2*x1^3 + 5*x1*x2^4"}) {
        auto f = parse_polynomial(text);
        auto q = q_of(f);
        auto b = jacobian_basis(f, q);
        auto g = residue_pairing(f, q, b);
        CHECK(g.matrix == g.matrix.transposed());
        CHECK(determinant(g.matrix) != 0);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                if (g.matrix(i, j) != 0) CHECK(b.elements[i].degree + b.elements[j].degree == b.socle_degree);
    }
}

TEST_CASE("isolatedness") {
    auto cubic = parse_polynomial("x^3+y^3+z^3");
    CHECK(isolatedness_check(cubic, q_of(cubic)).isolated);
    auto x2 = parse_polynomial("x^2");
    CHECK(isolatedness_check(x2, q_of(x2)).isolated);

    auto bad = parse_polynomial("x^2*y^2");
    auto r = isolatedness_check(bad, rv({{1, 4}, {1, 4}}));
    CHECK_FALSE(r.isolated);
    CHECK(r.offending_degree.has_value());
    CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("non quasihomogeneous input is rejected") {
    CHECK_THROWS_AS(GradedJacobian(parse_polynomial("x^3 + x^2"), rv({{1, 3}})), Error);
}
