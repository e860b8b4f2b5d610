#include <doctest.h>

#include "ringlab/constructions.hpp"
#include "ringlab/parser.hpp"

using namespace ringlab;

TEST_CASE("basic specs") {
    CHECK(parse_ring_spec("Z6")->size() == 6);
    CHECK(parse_ring_spec("Z2 x Z4")->size() == 8);
    CHECK(parse_ring_spec("Z2 x Z2 x Z2")->size() == 8);
    CHECK(parse_ring_spec("T2(Z3)")->size() == 27);
    CHECK(parse_ring_spec("T3(Z2)")->size() == 64);
    CHECK(parse_ring_spec("Quot(Z12; 4)")->size() == 4);
    CHECK(parse_ring_spec("Corner(Z6; 3)")->size() == 2);
    CHECK(parse_ring_spec("Idealization(Z4, Z2)")->size() == 8);
    CHECK(parse_ring_spec("Morita(Z2, Z2, Z2, Z2, mul)")->size() == 16);
    CHECK(parse_ring_spec("Morita(Z2, Z2, Z2, Z2)")->size() == 16); // zero pairing default
}

TEST_CASE("whitespace insensitivity") {
    CHECK(parse_ring_spec("  Z2x Z4 ")->spec_string() == parse_ring_spec("Z2 x Z4")->spec_string());
    CHECK(parse_ring_spec("T2( Z3 )")->spec_string() == parse_ring_spec("T2(Z3)")->spec_string());
}

TEST_CASE("spec strings rebuild the same ring") {
    for (const char* spec :
         {"Z6", "Z2 x Z4", "T2(Z3)", "Quot(Z12; 4)", "Corner(Z6; 4)", "Idealization(Z6, Z3)",
          "Morita(Z2, Z2, Z2, Z2, mul)", "Morita(Z3, Z3, Z3, Z3, zero)"}) {
        CAPTURE(spec);
        auto r = parse_ring_spec(spec);
        auto r2 = parse_ring_spec(r->spec_string());
        REQUIRE(r2->size() == r->size());
        CHECK(r2->spec_string() == r->spec_string());
        for (ElemIdx a = 0; a < r->size(); ++a)
            for (ElemIdx b = 0; b < r->size(); ++b) {
                CHECK(r2->add(a, b) == r->add(a, b));
                CHECK(r2->mul(a, b) == r->mul(a, b));
            }
    }
}

TEST_CASE("quotient specs use coset representatives") {
    auto q = parse_ring_spec("Quot(Z12; 4)");
    CHECK(q->display(q->one()) == "1");
    CHECK(q->parse_element("2").has_value());
    CHECK_FALSE(q->parse_element("7").has_value());
}

TEST_CASE("product element display parses back") {
    auto r = parse_ring_spec("Z2 x Z4");
    CHECK(r->parse_element("(1,2)") == 6);
    CHECK(r->display(6) == "(1,2)");
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_ring_spec("Z"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("T2(Z3"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Z6 x"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Frob(Z2)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec(""), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Z6 junk"), ParseError);
    try {
        parse_ring_spec("Z6 x");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.position == 3); // positions refer to the whitespace-stripped text
    }
}

TEST_CASE("semantic errors") {
    CHECK_THROWS_AS(parse_ring_spec("Corner(Z6; 2)"), ValidationError);   // not idempotent
    CHECK_THROWS_AS(parse_ring_spec("Idealization(T2(Z2), Z2)"), ValidationError);
    CHECK_THROWS_AS(parse_ring_spec("Z0"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Quot(Z6; 7)"), ValidationError); // 7 not an element
}

TEST_CASE("module table override from config") {
    // trivial right action override for the Z2 module over Z2: same shape as
    // the canonical table, exercised through the config path
    BuildConfig cfg;
    cfg.module_tables_json = R"({"modules": {"Z2": {"carrier": [2],
        "left_action": [[0,0],[0,1]], "right_action": [[0,0],[0,1]]}}})";
    auto r = parse_ring_spec("Morita(Z2, Z2, Z2, Z2, zero)", cfg);
    CHECK(r->size() == 16);
    CHECK_NOTHROW(r->check_axioms());
}
