#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecount/chern.hpp"

using namespace curvecount;

namespace {
DegreePoly c(long v) { return DegreePoly::constant(v); }
const DegreePoly d = DegreePoly::symbol();
}  // namespace

TEST_CASE("line bundles, duals, twists") {
    Ring r = Ring::make({{"y", 3}, {"a", 3}});
    CohClass y = r.gen("y"), a = r.gen("a");
    FormalBundle l = FormalBundle::line(y + a * c(2));
    CHECK(l.rank() == 1);
    CHECK(l.euler() == y + a * c(2));
    CHECK(l.dual().euler() == -(y + a * c(2)));
    // tensoring lines adds first Chern classes
    CHECK(l.twist(FormalBundle::line(a)).euler() == y + a * c(3));
    CHECK_THROWS_AS(FormalBundle::line(y * a), std::invalid_argument);
}

TEST_CASE("twist matches the splitting principle") {
    // (L1 (+) L2) (x) M = L1 M (+) L2 M, checked through total Chern classes
    Ring r = Ring::make({{"y", 4}, {"a", 3}});
    CohClass y = r.gen("y"), a = r.gen("a");
    FormalBundle l1 = FormalBundle::line(y);
    FormalBundle l2 = FormalBundle::line(a * c(2));
    FormalBundle m = FormalBundle::line(y + a);
    FormalBundle lhs = l1.sum(l2).twist(m);
    FormalBundle rhs = l1.twist(m).sum(l2.twist(m));
    CHECK(lhs.rank() == rhs.rank());
    CHECK(lhs.chern() == rhs.chern());
}

TEST_CASE("Whitney sum and Euler class") {
    Ring r = Ring::make({{"y", 3}, {"a", 3}});
    CohClass y = r.gen("y"), a = r.gen("a");
    FormalBundle s = FormalBundle::line(y).sum(FormalBundle::line(a));
    CHECK(s.rank() == 2);
    CHECK(s.euler() == y * a);
    CHECK(s.chern().graded_part(1) == y + a);
    CHECK(FormalBundle::trivial(r, 3).euler().is_zero());
}

TEST_CASE("chern_inverse is a true inverse") {
    Ring r = Ring::make({{"y", 4}, {"a", 3}});
    CohClass y = r.gen("y"), a = r.gen("a");
    FormalBundle e(2, r.one() + (y + a * c(3)) + y * a * c(2));
    CHECK(e.chern() * e.chern_inverse() == r.one());
}

TEST_CASE("bundle validation") {
    Ring r = Ring::make({{"y", 3}});
    CohClass y = r.gen("y");
    CHECK_THROWS_AS(FormalBundle(1, r.one() + y + y * y), std::invalid_argument);
    CHECK_THROWS_AS(FormalBundle(1, y), std::invalid_argument);  // no constant term
    FormalBundle e = FormalBundle::line(y);
    CHECK_THROWS_AS(e.twist(FormalBundle::trivial(r, 2)), std::invalid_argument);
}

TEST_CASE("cycle functional basics") {
    Ring r = Ring::make({{"y", 3}, {"a", 3}});
    CohClass y = r.gen("y"), a = r.gen("a");
    CycleFunctional f(r, {{{1, 0}, c(5)}, {{0, 1}, c(7)}});
    CHECK(f.degree() == 1);
    CHECK(f.pair(y * c(2) + a) == c(17));
    CHECK(f.pair(r.one()).is_zero());          // lower degree pairs to zero
    CHECK(f.pair(y + r.one() * c(9)) == c(5)); // mixed: constant part dropped
    CHECK_THROWS_AS(f.pair(y * a), std::domain_error);  // degree too high
    CHECK_THROWS_AS(CycleFunctional(r, {{{1, 0}, c(1)}, {{0, 2}, c(1)}}),
                    std::invalid_argument);  // unequal weight degrees
    Ring other = Ring::make({{"z", 2}});
    CHECK_THROWS_AS(f.pair(other.gen("z")), std::invalid_argument);
}

// Transversality cross-check: for the one-node cycles the functional
// weights must reproduce integration against the Euler-class dual,
// identically in d, monomial by monomial.
TEST_CASE("functional pairing equals Poincare-dual integration") {
    auto tangent = [](const CohClass& a) {
        return FormalBundle(2, a.ring().one() + a * c(3) + a.pow(2) * c(3));
    };
    auto dual_class = [&](const Ring& r) {
        CohClass y = r.gen("y"), a = r.gen("a");
        FormalBundle l = FormalBundle::line(y + a * d);
        return l.sum(tangent(a).dual().twist(l)).euler();
    };

    DegreePoly n1 = c(3) * (d - c(1)) * (d - c(1));
    DegreePoly n11 = c(3) * d - c(3);

    SUBCASE("one-node cycle in P^2 x P^2") {
        Ring r = Ring::make({{"y", 3}, {"a", 3}});
        CohClass e = dual_class(r);
        CycleFunctional f(r, {{{1, 0}, n1}, {{0, 1}, n11}});
        for (Exponents mu : {Exponents{1, 0}, Exponents{0, 1}}) {
            CohClass m = r.monomial(mu, c(1));
            CHECK(f.pair(m) == (e * m).integrate());
        }
    }
    SUBCASE("one-node cycle in P^3 x P^2") {
        Ring r = Ring::make({{"y", 4}, {"a", 3}});
        CohClass e = dual_class(r);
        CycleFunctional f(r, {{{2, 0}, n1}, {{1, 1}, n11}, {{0, 2}, c(1)}});
        for (Exponents mu : {Exponents{2, 0}, Exponents{1, 1}, Exponents{0, 2}}) {
            CohClass m = r.monomial(mu, c(1));
            CHECK(f.pair(m) == (e * m).integrate());
        }
    }
}
