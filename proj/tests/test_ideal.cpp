#include <doctest.h>

#include <numeric>

#include "ringlab/constructions.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/parser.hpp"

using namespace ringlab;

namespace {

unsigned divisor_count(unsigned n) {
    unsigned c = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

// all idempotents e with e - a in i
std::vector<ElemIdx> brute_force_lifts(const RingPtr& r, const Ideal& i, ElemIdx a) {
    std::vector<ElemIdx> out;
    for (ElemIdx e : r->idempotents())
        if (i.contains(r->sub(e, a))) out.push_back(e);
    return out;
}

} // namespace

TEST_CASE("principal ideal of Z6") {
    auto r = make_zn(6);
    Ideal i = ideal_generated_by(r, {2});
    CHECK(i.elements == std::vector<ElemIdx>{0, 2, 4});
    CHECK(i.contains(4));
    CHECK_FALSE(i.contains(3));
    CHECK(i.is_proper());
    CHECK(i.display_gens() == "2");
}

TEST_CASE("ideals of Z_n are the divisor lattice") {
    for (unsigned n = 1; n <= 30; ++n) {
        auto r = make_zn(n);
        auto ideals = all_ideals(r);
        CHECK(ideals.size() == divisor_count(n));
        for (const auto& i : ideals) {
            // every ideal of Z_n is the set of multiples of some divisor
            ElemIdx g = i.size() == 1 ? 0 : i.elements[1];
            CHECK(n % (i.size()) == 0);
            for (ElemIdx x : i.elements) CHECK((g == 0 ? x == 0 : x % g == 0));
        }
    }
}

TEST_CASE("every reported ideal set is closed") {
    for (const auto& spec : {"T2(Z2)", "Z2 x Z4", "Morita(Z2,Z2,Z2,Z2,mul)"}) {
        auto r = parse_ring_spec(spec);
        CAPTURE(spec);
        for (const auto& i : all_ideals(r)) CHECK(is_ideal_set(*r, i.mask));
    }
}

TEST_CASE("matrix ring over a field has no proper nonzero ideals") {
    auto m2 = parse_ring_spec("Morita(Z2,Z2,Z2,Z2,mul)");
    auto ideals = all_ideals(m2);
    REQUIRE(ideals.size() == 2);
    CHECK(ideals[0].size() == 1);
    CHECK(ideals[1].size() == m2->size());
}

TEST_CASE("ideal sum") {
    auto r = make_zn(6);
    Ideal s = ideal_sum(ideal_generated_by(r, {2}), ideal_generated_by(r, {3}));
    CHECK(s.size() == 6);
}

TEST_CASE("ideal_from_elements validates closure") {
    auto r = make_zn(6);
    CHECK_THROWS_AS(ideal_from_elements(r, {0, 2}), ValidationError);
    CHECK(ideal_from_elements(r, {0, 2, 4}).size() == 3);
}

TEST_CASE("quotient ring is a ring homomorphism image") {
    auto r = make_zn(12);
    QuotientRing q = quotient_ring(r, ideal_generated_by(r, {4}));
    CHECK(q.ring->size() == 4);
    CHECK_NOTHROW(q.ring->check_axioms());
    for (ElemIdx a = 0; a < r->size(); ++a)
        for (ElemIdx b = 0; b < r->size(); ++b) {
            CHECK(q.project(r->add(a, b)) == q.ring->add(q.project(a), q.project(b)));
            CHECK(q.project(r->mul(a, b)) == q.ring->mul(q.project(a), q.project(b)));
        }
    CHECK(q.project(r->one()) == q.ring->one());
    // minimal coset representatives
    for (ElemIdx y = 0; y < q.ring->size(); ++y) CHECK(q.project(q.reps[y]) == y);
}

TEST_CASE("quotient of a noncommutative ring") {
    auto t = parse_ring_spec("T2(Z2)");
    auto ideals = all_ideals(t);
    for (const auto& i : ideals) {
        QuotientRing q = quotient_ring(t, i);
        CHECK(q.ring->size() * i.size() == t->size());
        CHECK_NOTHROW(q.ring->check_axioms());
    }
}

TEST_CASE("image and preimage ideals") {
    auto r = make_zn(12);
    QuotientRing q = quotient_ring(r, ideal_generated_by(r, {6}));
    Ideal img = image_ideal(q, ideal_generated_by(r, {2}));
    CHECK(img.size() == 3);
    Ideal back = preimage_ideal(q, img);
    CHECK(back.elements == ideal_generated_by(r, {2}).elements);
}

TEST_CASE("idempotent lifting modulo a nil ideal") {
    SUBCASE("Z4 mod <2>") {
        auto r = make_zn(4);
        Ideal i = ideal_generated_by(r, {2});
        CHECK(lift_idempotent_mod_nil(r, i, 3) == 1);
    }
    SUBCASE("Z8 mod <2>") {
        auto r = make_zn(8);
        Ideal i = ideal_generated_by(r, {2});
        CHECK(lift_idempotent_mod_nil(r, i, 3) == 1);
    }
    SUBCASE("agrees with brute force over small residue rings") {
        for (unsigned n = 2; n <= 16; ++n) {
            auto r = make_zn(n);
            for (const auto& i : all_ideals(r)) {
                if (!is_nil_ideal(i)) continue;
                for (ElemIdx a = 0; a < r->size(); ++a) {
                    if (!i.contains(r->sub(r->mul(a, a), a))) continue;
                    ElemIdx e = lift_idempotent_mod_nil(r, i, a);
                    auto brute = brute_force_lifts(r, i, a);
                    CAPTURE(n);
                    CAPTURE(a);
                    CHECK(r->mul(e, e) == e);
                    CHECK(i.contains(r->sub(e, a)));
                    // commutative case: the lift is unique
                    REQUIRE(brute.size() == 1);
                    CHECK(e == brute[0]);
                }
            }
        }
    }
    SUBCASE("precondition violations throw") {
        auto r = make_zn(6);
        CHECK_THROWS_AS(lift_idempotent_mod_nil(r, ideal_generated_by(r, {0}), 2),
                        ValidationError);
        CHECK_THROWS_AS(lift_idempotent_mod_nil(r, ideal_generated_by(r, {2}), 1),
                        ValidationError);
    }
}

TEST_CASE("nil ideal detection") {
    auto r = make_zn(8);
    CHECK(is_nil_ideal(ideal_generated_by(r, {2})));
    CHECK_FALSE(is_nil_ideal(ideal_generated_by(r, {1})));
}
