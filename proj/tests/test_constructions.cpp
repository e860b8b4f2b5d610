#include <doctest.h>

#include <array>

#include "ringlab/constructions.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/parser.hpp"

using namespace ringlab;

namespace {

// independent 2x2 matrix arithmetic over Z2
using Mat = std::array<unsigned, 4>; // row major a b / c d
Mat mat_add(Mat x, Mat y) {
    return {(x[0] + y[0]) % 2, (x[1] + y[1]) % 2, (x[2] + y[2]) % 2, (x[3] + y[3]) % 2};
}
Mat mat_mul(Mat x, Mat y) {
    return {(x[0] * y[0] + x[1] * y[2]) % 2, (x[0] * y[1] + x[1] * y[3]) % 2,
            (x[2] * y[0] + x[3] * y[2]) % 2, (x[2] * y[1] + x[3] * y[3]) % 2};
}

} // namespace

TEST_CASE("direct product encoding") {
    auto r = direct_product({make_zn(2), make_zn(3)});
    CHECK(r->spec_string() == "Z2 x Z3");
    CHECK(r->size() == 6);
    CHECK(is_product_ring(*r));
    CHECK_FALSE(is_product_ring(*make_zn(6)));
    for (ElemIdx a = 0; a < 2; ++a)
        for (ElemIdx b = 0; b < 3; ++b) {
            ElemIdx x = product_compose(*r, {a, b});
            CHECK(product_component(*r, x, 0) == a);
            CHECK(product_component(*r, x, 1) == b);
        }
    CHECK(r->display(r->one()) == "(1,1)");
}

TEST_CASE("triangular ring entries") {
    auto t = triangular_ring(2, make_zn(4));
    CHECK(t->size() == 64);
    CHECK(triangular_dim(*t) == 2);
    CHECK(triangular_base(*t)->size() == 4);
    ElemIdx x = triangular_compose(*t, {2, 1, 2});
    CHECK(triangular_entry(*t, x, 0, 0) == 2);
    CHECK(triangular_entry(*t, x, 0, 1) == 1);
    CHECK(triangular_entry(*t, x, 1, 1) == 2);
    // [[2,1],[0,2]] is nilpotent over Z4
    CHECK(t->nilpotency_index(x).has_value());
    CHECK(triangular_entry(*t, t->one(), 0, 0) == 1);
    CHECK(triangular_entry(*t, t->one(), 0, 1) == 0);
    CHECK(triangular_entry(*t, t->one(), 1, 1) == 1);
    CHECK_NOTHROW(t->check_axioms());
}

TEST_CASE("T3 multiplication") {
    auto t = triangular_ring(3, make_zn(2));
    CHECK(t->size() == 64);
    CHECK_NOTHROW(t->check_axioms());
    // strictly upper matrices are nilpotent
    ElemIdx x = triangular_compose(*t, {0, 1, 1, 0, 1, 0});
    CHECK(t->nilpotency_index(x) == 3);
}

TEST_CASE("corner rings of Z6") {
    auto r = make_zn(6);
    auto c3 = corner_ring(r, 3); // {0, 3}, unity 3
    CHECK(c3->size() == 2);
    CHECK(corner_lift(*c3, c3->one()) == 3);
    CHECK_NOTHROW(c3->check_axioms());
    auto c4 = corner_ring(r, 4); // {0, 2, 4}, unity 4
    CHECK(c4->size() == 3);
    CHECK_NOTHROW(c4->check_axioms());
    for (ElemIdx y = 0; y < c4->size(); ++y) CHECK(corner_index(*c4, corner_lift(*c4, y)) == y);
    auto c0 = corner_ring(r, 0);
    CHECK(c0->size() == 1);
    CHECK_THROWS_AS(corner_ring(r, 2), ValidationError); // 2 is not idempotent
}

TEST_CASE("corner ring of a noncommutative ring") {
    auto t = triangular_ring(2, make_zn(2));
    ElemIdx f = triangular_compose(*t, {1, 0, 0}); // E11
    auto c = corner_ring(t, f);
    CHECK(c->size() == 2);
    CHECK_NOTHROW(c->check_axioms());
}

TEST_CASE("idealization arithmetic") {
    auto r = parse_ring_spec("Idealization(Z6, Z3)");
    CHECK(r->size() == 18);
    CHECK_NOTHROW(r->check_axioms());
    const auto& base = idealization_base(*r);
    const auto& mod = idealization_module(*r);
    SUBCASE("split and compose round trip") {
        for (ElemIdx x = 0; x < r->size(); ++x) {
            auto [a, m] = idealization_split(*r, x);
            CHECK(idealization_compose(*r, a, m) == x);
        }
    }
    SUBCASE("power identity (r,m)^k = (r^k, k r^(k-1) m)") {
        for (ElemIdx x = 0; x < r->size(); ++x) {
            auto [a, m] = idealization_split(*r, x);
            for (unsigned k = 1; k <= 6; ++k) {
                ElemIdx rk = base->pow(a, k);
                ElemIdx coeff = base->zero(); // k * a^(k-1) in the base ring
                for (unsigned j = 0; j < k; ++j) coeff = base->add(coeff, base->pow(a, k - 1));
                ElemIdx mk = mod->left_act(coeff, m);
                CHECK(r->pow(x, k) == idealization_compose(*r, rk, mk));
            }
        }
    }
    SUBCASE("idempotents and nilpotents mirror the base") {
        for (ElemIdx x = 0; x < r->size(); ++x) {
            auto [a, m] = idealization_split(*r, x);
            CHECK((r->mul(x, x) == x) == (base->mul(a, a) == a && m == mod->zero()));
            CHECK(r->nil_mask()[x] == base->nil_mask()[a]);
        }
    }
}

TEST_CASE("idealization requires a commutative base") {
    auto t = triangular_ring(2, make_zn(2));
    CHECK_THROWS_AS(idealization(t, Bimodule::canonical({2}, make_zn(2), nullptr)),
                    ValidationError);
}

TEST_CASE("bimodule validation and submodules") {
    auto z4 = make_zn(4);
    auto m = Bimodule::canonical({4}, z4, z4);
    CHECK_NOTHROW(m->validate());
    auto subs = m->submodules();
    CHECK(subs.size() == 3); // {0}, {0,2}, Z4
    CHECK(subs[0] == std::vector<ElemIdx>{0});
    CHECK(subs[1] == std::vector<ElemIdx>{0, 2});
    CHECK(subs[2].size() == 4);
    CHECK_THROWS_AS(Bimodule::canonical({3}, z4, nullptr), ValidationError); // 3 does not divide 4
}

TEST_CASE("Morita ring with multiplication pairing is the 2x2 matrix ring") {
    auto r = parse_ring_spec("Morita(Z2, Z2, Z2, Z2, mul)");
    REQUIRE(r->size() == 16);
    CHECK_NOTHROW(r->check_axioms());
    auto as_mat = [&](ElemIdx x) {
        MoritaElem e = morita_split(*r, x);
        return Mat{e.a, e.m, e.n, e.b};
    };
    for (ElemIdx x = 0; x < 16; ++x)
        for (ElemIdx y = 0; y < 16; ++y) {
            CHECK(as_mat(r->mul(x, y)) == mat_mul(as_mat(x), as_mat(y)));
            CHECK(as_mat(r->add(x, y)) == mat_add(as_mat(x), as_mat(y)));
        }
    CHECK(as_mat(r->one()) == Mat{1, 0, 0, 1});
}

TEST_CASE("Morita ring with zero pairing") {
    auto r = parse_ring_spec("Morita(Z3, Z3, Z3, Z3, zero)");
    CHECK(r->size() == 81);
    CHECK_NOTHROW(r->check_axioms());
    // with zero pairings the off-diagonal corners multiply to nothing
    ElemIdx m_only = morita_compose(*r, {0, 1, 0, 0});
    ElemIdx n_only = morita_compose(*r, {0, 0, 1, 0});
    CHECK(r->mul(m_only, n_only) == r->zero());
    CHECK(r->nilpotency_index(m_only) == 2);
}

TEST_CASE("mismatched pairings are rejected with a witness") {
    // pair_A = multiplication, pair_B = zero violates
    // pair_A(m,n)m' = m pair_B(n,m')
    MoritaSpec s;
    s.A = s.B = make_zn(2);
    s.M = Bimodule::canonical({2}, s.A, s.B);
    s.N = Bimodule::canonical({2}, s.B, s.A);
    s.kind = PairingKind::Tables;
    s.pair_A = {{0, 0}, {0, 1}};
    s.pair_B = {{0, 0}, {0, 0}};
    try {
        morita_ring(std::move(s));
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        CHECK(msg.find("pair_A(m,n)m' = m pair_B(n,m')") != std::string::npos);
    }
}

TEST_CASE("context projections of a Morita ideal") {
    auto r = parse_ring_spec("Morita(Z4, Z4, Z4, Z4, zero)");
    for (const auto& i : all_ideals(r)) {
        ContextProjection p = context_projections(i);
        CHECK(i.size() == p.p_A.size() * p.p_M.size() * p.p_N.size() * p.p_B.size());
        for (ElemIdx x : i.elements) {
            MoritaElem e = morita_split(*r, x);
            CHECK(std::find(p.p_A.begin(), p.p_A.end(), e.a) != p.p_A.end());
            CHECK(std::find(p.p_B.begin(), p.p_B.end(), e.b) != p.p_B.end());
        }
    }
}
