#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecount/degree_poly.hpp"

using namespace curvecount;

namespace {
const DegreePoly d = DegreePoly::symbol();
DegreePoly c(long v) { return DegreePoly::constant(v); }
}  // namespace

TEST_CASE("constants and zero") {
    DegreePoly z;
    CHECK(z.is_zero());
    CHECK(z.is_constant());
    CHECK(z.as_constant() == 0);
    CHECK(c(7).as_constant() == 7);
    CHECK(c(0).is_zero());
    CHECK_FALSE(d.is_constant());
    CHECK_THROWS_AS(d.as_constant(), std::domain_error);
}

TEST_CASE("arithmetic and degree") {
    DegreePoly p = d * d * c(9) - d * c(27) + c(30);
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rat(4)) == Rat(9 * 16 - 27 * 4 + 30));
    CHECK(p.eval_int(Int(4)) == 66);
    CHECK((p - p).is_zero());
    CHECK(p * c(0) == DegreePoly());
    // (d-1)(d+1) = d^2 - 1
    CHECK((d - c(1)) * (d + c(1)) == d * d - c(1));
}

TEST_CASE("division and integer-valuedness") {
    // d(d-1)/2 is integer-valued but not integer-coefficient
    DegreePoly p = (d * (d - c(1))) / Rat(2);
    CHECK_FALSE(p.integer_coefficients());
    CHECK(p.integer_valued(0, 40));
    CHECK(p.eval_int(Int(5)) == 10);
    // d/3 is not integer-valued
    CHECK_FALSE((d / Rat(3)).integer_valued(1, 9));
    CHECK_THROWS_AS((d / Rat(3)).eval_int(Int(2)), std::domain_error);
}

TEST_CASE("canonical string form") {
    CHECK(DegreePoly().str() == "0");
    CHECK(c(5).str() == "5");
    CHECK(c(-5).str() == "-5");
    CHECK(d.str() == "d");
    CHECK((-d).str() == "-d");
    CHECK((d * d * d * c(9) - d * d * c(27) - d + c(30)).str() ==
          "9*d^3 - 27*d^2 - d + 30");
    CHECK((d * c(3) - c(3)).str() == "3*d - 3");
    // rational coefficients render over a common denominator
    CHECK(((d * d - d) / Rat(2)).str() == "(d^2 - d)/2");
}

TEST_CASE("eval_int on big inputs stays exact") {
    DegreePoly p = d * d * d;
    Int big("1000000000000");
    CHECK(p.eval_int(big) == Int("1000000000000000000000000000000000000"));
}
