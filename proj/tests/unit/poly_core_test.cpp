#include "doctest.h"

#include "lgkit/error.hpp"
#include "lgkit/polynomial.hpp"

using namespace lgkit;

namespace {

std::vector<std::vector<long>> rows(const Polynomial& p) {
    const auto m = exponent_matrix(p);
    std::vector<std::vector<long>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

ErrorKind kind_of(const std::string& text) {
    try {
        parse_polynomial(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error for " << text);
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("parse fermat cubic") {
    auto p = parse_polynomial("x1^3 + x2^3 + x3^3");
    CHECK(p.size() == 3);
    CHECK(rows(p) == std::vector<std::vector<long>>{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
}

TEST_CASE("parse single alias term") {
    auto p = parse_polynomial("x^2");
    CHECK(p.size() == 1);
    CHECK(rows(p) == std::vector<std::vector<long>>{{2}});
}

TEST_CASE("parse chain with unit coefficients") {
    auto p = parse_polynomial("x1^2*x2 + x2^3");
    CHECK(rows(p) == std::vector<std::vector<long>>{{2, 1}, {0, 3}});
    for (const auto& t : p.terms()) CHECK(t.coefficient == 1);
}

TEST_CASE("exponent matrices of aliased input") {
    CHECK(rows(parse_polynomial("x^3+y^3+z^3")) == std::vector<std::vector<long>>{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
    CHECK(rows(parse_polynomial("x^2*y + y^2*x")) == std::vector<std::vector<long>>{{2, 1}, {1, 2}});
    CHECK(rows(parse_polynomial("x^3 + x*y^3")) == std::vector<std::vector<long>>{{3, 0}, {1, 3}});
}

TEST_CASE("canonical formatting") {
    CHECK(format_polynomial(parse_polynomial("x3^3+x1^3+x2^3")) == "x1^3 + x2^3 + x3^3");
    CHECK(format_polynomial(parse_polynomial("x1^2")) == "x1^2");
    CHECK(format_polynomial(parse_polynomial("x2^3 + x1^2*x2")) == "x1^2*x2 + x2^3");
    CHECK(format_polynomial(parse_polynomial("-3/2*x2^3 + x1^2")) == "x1^2 + -3/2*x2^3");
}

TEST_CASE("rational coefficients and merging") {
    auto p = parse_polynomial("2*x1^3 + 1/2*x1^3 + 4/6*x2^2");
    CHECK(p.size() == 2);
    CHECK(p.coefficient({3, 0}) == Rational(5, 2));
    CHECK(p.coefficient({0, 2}) == Rational(2, 3));
    CHECK(p.coefficient({1, 1}) == 0);
}

TEST_CASE("format parse round trip") {
    for (const char* text : {"x1^5", "x1^2*x2 + x2^3", "x1^3*x2 + x2^4*x3 + x1*x3^3", "7*x1^2 + -1/3*x2^4",
                             "x1*x2*x3^2 + x4^5"}) {
        auto p = parse_polynomial(text);
        CHECK(parse_polynomial(format_polynomial(p)) == p);
    }
}

TEST_CASE("parse errors") {
    CHECK(kind_of("") == ErrorKind::Parse);
    CHECK(kind_of("x1^") == ErrorKind::Parse);
    CHECK(kind_of("x1^2 +") == ErrorKind::Parse);
    CHECK(kind_of("x0^2") == ErrorKind::Parse);
    CHECK(kind_of("x^2 + x2^3") == ErrorKind::Parse);
    CHECK(kind_of("3") == ErrorKind::Parse);
    CHECK(kind_of("x^2 + 1") == ErrorKind::Parse);
    CHECK(kind_of("x^2 - x^2") == ErrorKind::Parse);
    CHECK(kind_of("1/0*x^2") == ErrorKind::Parse);
    CHECK(kind_of("x^2 $ y") == ErrorKind::Parse);
    CHECK_THROWS_AS(parse_polynomial("x3^2", 2), ParseError);
}

TEST_CASE("parse error reports a position") {
    try {
        parse_polynomial("x1^2 + x2^");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 10);
    }
}

TEST_CASE("polynomial arithmetic") {
    auto x = Polynomial::monomial({1, 0});
    auto y = Polynomial::monomial({0, 1});
    auto p = x * x * y + y * y * y;
    CHECK(format_polynomial(p) == "x1^2*x2 + x2^3");
    CHECK(format_polynomial(p.derivative(0)) == "2*x1*x2");
    CHECK(format_polynomial(p.derivative(1)) == "x1^2 + 3*x2^2");
    CHECK((p - p).is_zero());
    CHECK(format_polynomial(Polynomial(2)) == "0");
    CHECK(format_polynomial(p.shifted({1, 0})) == "x1^3*x2 + x1*x2^3");
    CHECK(format_monomial({0, 0}) == "1");
}

TEST_CASE("restriction and compression") {
    auto p = parse_polynomial("x1^2*x2 + x2^3 + x3^4");
    auto r = p.restricted_to({1, 2});
    CHECK(format_polynomial(r) == "x2^3 + x3^4");
    CHECK(format_polynomial(r.compressed({1, 2})) == "x1^3 + x2^4");
}

TEST_CASE("weighted degree") {
    std::vector<Rational> q{Rational(1, 3), Rational(2, 9)};
    CHECK(weighted_degree({2, 1}, q) == Rational(8, 9));
    CHECK(weighted_degree({0, 0}, q) == 0);
}
