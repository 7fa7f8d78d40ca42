#include <doctest.h>

#include "conlab/series.hpp"

using conlab::Rational;
using conlab::SeriesTuple;
using conlab::TruncatedSeries;

TEST_CASE("products truncate at the smaller window") {
    const auto a = TruncatedSeries::monomial(8, 3);
    const auto b = TruncatedSeries::monomial(6, 4);
    const auto p = a * b;
    CHECK(p.truncation() == 6);
    CHECK(p.is_zero()); // t^7 falls outside [0,6)
    CHECK((a * TruncatedSeries::monomial(8, 2)).coeff(5) == Rational(1));
}

TEST_CASE("arithmetic on mixed terms") {
    TruncatedSeries f(10);
    f.set_coeff(1, Rational(1));
    f.set_coeff(2, Rational(-1, 2));
    const auto g = f * f;
    CHECK(g.coeff(2) == Rational(1));
    CHECK(g.coeff(3) == Rational(-1));
    CHECK(g.coeff(4) == Rational(1, 4));
    CHECK(g.valuation() == 2);
    CHECK((f - f).is_zero());
    CHECK((f - f).valuation() == 10);
    CHECK(f.scaled(Rational(2)).coeff(2) == Rational(-1));
}

TEST_CASE("retruncation keeps only known coefficients") {
    TruncatedSeries f(6);
    f.set_coeff(5, Rational(7));
    CHECK(f.retruncated(5).is_zero());
    CHECK(f.retruncated(9).coeff(5) == Rational(7));
}

TEST_CASE("tuples are componentwise with shared truncation") {
    SeriesTuple x(2, 6);
    x.branch(0).set_coeff(1, Rational(1));
    x.branch(1).set_coeff(1, Rational(1));
    SeriesTuple y(2, 6);
    y.branch(0).set_coeff(2, Rational(1));
    y.branch(1).set_coeff(2, Rational(-1));
    const auto p = x * y;
    CHECK(p.branch(0).coeff(3) == Rational(1));
    CHECK(p.branch(1).coeff(3) == Rational(-1));
    CHECK(p.min_valuation() == 3);

    const auto v = p.to_vector();
    REQUIRE(v.size() == 12);
    CHECK(v[3] == Rational(1));   // branch 0, exponent 3
    CHECK(v[9] == Rational(-1));  // branch 1, exponent 3
}
