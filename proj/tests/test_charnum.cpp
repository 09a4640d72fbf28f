#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecount/charnum.hpp"

using namespace curvecount;

namespace {
DegreePoly c(long v) { return DegreePoly::constant(v); }
const DegreePoly d = DegreePoly::symbol();

// Closed forms, expanded by hand from the published table.
DegreePoly closed_form(CharName n) {
    switch (n) {
        case CharName::N1: return c(3) * d * d - c(6) * d + c(3);
        case CharName::N11: return c(3) * d - c(3);
        case CharName::K1: return c(12) * d * d - c(36) * d + c(24);
        case CharName::K11: return c(8) * d - c(12);
        case CharName::T1: return c(50) * d * d - c(192) * d + c(168);
        case CharName::N2:
            return (c(9) * d.pow(4) - c(36) * d.pow(3) + c(12) * d * d + c(81) * d -
                    c(66)) / Rat(2);
        case CharName::N21:
            return c(9) * d.pow(3) - c(27) * d * d - d + c(30);
        case CharName::K2:
            return c(36) * d.pow(4) - c(180) * d.pow(3) + c(84) * d * d + c(612) * d -
                   c(648);
        case CharName::N3:
            return (c(9) * d.pow(6) - c(54) * d.pow(5) + c(9) * d.pow(4) +
                    c(423) * d.pow(3) - c(458) * d * d - c(829) * d + c(1050)) / Rat(2);
    }
    throw std::logic_error("unreachable");
}

long quartic_value(CharName n) {
    switch (n) {
        case CharName::N1: return 27;
        case CharName::N11: return 9;
        case CharName::K1: return 72;
        case CharName::K11: return 20;
        case CharName::T1: return 200;
        case CharName::N2: return 225;
        case CharName::N21: return 170;
        case CharName::K2: return 840;
        case CharName::N3: return 675;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("quartic characteristic numbers") {
    for (CharName n : all_char_names()) {
        CAPTURE(to_string(n));
        CHECK(charnum(n, 4).value == c(quartic_value(n)));
    }
}

TEST_CASE("closed forms, symbolic") {
    for (CharName n : all_char_names()) {
        CAPTURE(to_string(n));
        CHECK(charnum_symbolic(n).value == closed_form(n));
    }
}

TEST_CASE("symbolic evaluation commutes with numeric runs") {
    for (CharName n : all_char_names()) {
        DegreePoly sym = charnum_symbolic(n).value;
        for (long dd = min_degree(n); dd <= 8; ++dd) {
            CAPTURE(to_string(n));
            CAPTURE(dd);
            CHECK(charnum(n, dd).value.as_constant() == sym.eval(Rat(dd)));
        }
    }
}

TEST_CASE("spot values at low degree") {
    CHECK(charnum(CharName::N1, 1).value == c(0));   // lines are smooth
    CHECK(charnum(CharName::N1, 3).value == c(12));
    CHECK(charnum(CharName::N2, 3).value == c(21));
    CHECK(charnum(CharName::N21, 3).value == c(27));
    CHECK(charnum(CharName::K2, 3).value == c(0));   // cuspidal cubics have one node max
    CHECK(charnum(CharName::N3, 3).value == c(15));
}

TEST_CASE("minimum degree enforcement") {
    CHECK_THROWS_AS(charnum(CharName::K11, 2), std::domain_error);
    CHECK_THROWS_AS(charnum(CharName::N3, 2), std::domain_error);
    CHECK_THROWS_AS(charnum(CharName::N1, 0), std::domain_error);
    CHECK_NOTHROW(charnum(CharName::N2, 1));
    CHECK_THROWS_AS(excess(ExcessName::Cusp2, 2), std::domain_error);
}

TEST_CASE("excess contributions at d = 4") {
    CHECK(excess(ExcessName::Node2, 4) == c(63));
    CHECK(excess(ExcessName::Node2Line, 4) == c(13));
    CHECK(excess(ExcessName::Cusp2, 4) == c(152));
    CHECK(excess(ExcessName::Node3, 4) == c(1130));
}

TEST_CASE("excess node2 closed form") {
    // 3 N1 + 3(d-2) N11 - K1, identically in d
    CharNumbers ev = CharNumbers::symbolic();
    DegreePoly expect = c(3) * closed_form(CharName::N1) +
                        c(3) * (d - c(2)) * closed_form(CharName::N11) -
                        closed_form(CharName::K1);
    CHECK(ev.excess(ExcessName::Node2) == expect);
}

TEST_CASE("pipeline audits carry the printed intermediates") {
    CharNumbers ev = CharNumbers::numeric(4);
    const PipelineAudit& n2 = ev.audit(CharName::N2);
    CHECK(n2.main_term == c(729));              // 27 * 27
    CHECK(n2.boundary_total() == c(279));       // 63 + 3*72
    CHECK(n2.pre_quotient == c(450));
    CHECK(n2.quotient == 2);

    const PipelineAudit& n21 = ev.audit(CharName::N21);
    CHECK(n21.main_term == c(243));             // 27 * 9
    CHECK(n21.boundary_total() == c(73));       // 13 + 3*20
    CHECK(n21.pre_quotient == c(170));

    const PipelineAudit& k2 = ev.audit(CharName::K2);
    CHECK(k2.main_term == c(1944));             // 27 * 72
    CHECK(k2.boundary_total() == c(1104));      // 2*152 + 4*200
    CHECK(k2.pre_quotient == c(840));

    const PipelineAudit& n3 = ev.audit(CharName::N3);
    CHECK(n3.main_term == c(12150));            // 27 * 450
    CHECK(n3.boundary_total() == c(8100));      // 2*1130 + 6*840 + 4*200
    CHECK(n3.pre_quotient == c(4050));
    CHECK(n3.quotient == 6);
}

TEST_CASE("symmetry quotients divide exactly over d = 3..50") {
    CharNumbers ev = CharNumbers::symbolic();
    const DegreePoly& n2 = ev.audit(CharName::N2).pre_quotient;
    const DegreePoly& n3 = ev.audit(CharName::N3).pre_quotient;
    CHECK((n2 / Rat(2)).integer_valued(3, 50));
    CHECK((n3 / Rat(6)).integer_valued(3, 50));
}

TEST_CASE("name round-trip") {
    for (CharName n : all_char_names())
        CHECK(char_name_from_string(to_string(n)) == n);
    CHECK_THROWS_AS(char_name_from_string("Q7"), std::invalid_argument);
}

TEST_CASE("genus of smooth curves") {
    long expect[] = {0, 0, 1, 3, 6, 10, 15, 21, 28, 36};
    for (long dd = 1; dd <= 10; ++dd) CHECK(genus_smooth(dd) == expect[dd - 1]);
    CHECK_THROWS_AS(genus_smooth(0), std::domain_error);
}

TEST_CASE("classical rational-curve counts") {
    CHECK(nd_classical(1) == 1);
    CHECK(nd_classical(2) == 1);
    CHECK(nd_classical(3) == 12);
    CHECK(nd_classical(4) == 620);
    CHECK_THROWS_AS(nd_classical(5), std::domain_error);
    CHECK_THROWS_AS(nd_classical(0), std::domain_error);
}
