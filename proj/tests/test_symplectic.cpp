#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symplectic.hpp"

using namespace wl;

TEST_CASE("vandermonde normalization") {
    {
        GlobalContext ctx(4, Eta::plus, 3);
        FieldPtr F = symplectic_field(ctx, 0);
        FF z3 = F->element_of_order(3);
        Dense V0 = vandermonde_v0(*F, 3, z3);
        CHECK(dense_det(*F, V0) == F->one());
        // In characteristic 2, det V(zeta_3) = (1 - zeta_3)^3 = 1 already, so
        // the corruption control must be exercised at an odd-characteristic
        // point (below).
    }
    {
        GlobalContext ctx(11, Eta::plus, 5);
        FieldPtr F = symplectic_field(ctx, 1);
        FF z5 = F->element_of_order(5);
        CHECK(dense_det(*F, vandermonde_v0(*F, 5, z5)) == F->one());
    }
    {
        // eta = -1 with e odd: the unitary condition F_q(V0)^t V0 = I.
        GlobalContext ctx(5, Eta::minus, 3);
        CHECK(ctx.e == 1);
        FieldPtr F = symplectic_field(ctx, 0);
        FF z3 = F->element_of_order(3);
        Dense V0 = vandermonde_v0(*F, 3, z3);
        CHECK(dense_det(*F, V0) == F->one());
        i64 qpow = pow_mod(ctx.q, static_cast<u64>(ctx.e), F->unit_order());
        Dense conj = dense_entrywise_q(*F, V0, qpow);
        CHECK(dense_mul(*F, dense_transpose(conj), V0) == Dense::identity(*F, 3));
    }
}

TEST_CASE("hbar embedding and twisted membership") {
    GlobalContext ctx(3, Eta::plus, 2);
    FieldPtr F = symplectic_field(ctx, 1);
    SymplecticTypeGens G = build_generators(ctx, 1, 1, 0, ShapeKind::R);
    SpMat h = hbar_embed(ctx, *F, G.z.mat, 1);
    CHECK(h.n == 2);
    CHECK(in_twisted_group(ctx, *F, G.v, h));
    CHECK(in_twisted_group(ctx, *F, G.v, sp_identity(*F, 2)));
    // det hbar(zeta I) = N_alpha(zeta^{m ell^gamma}) on both routes
    CHECK(hbar_det(ctx, *F, G.z.det, 1) != FF_ZERO);
    // a matrix outside: transvection with a non-rational entry
    SpMat bad = sp_identity(*F, 2);
    bad.set(0, 1, F->element_of_order(8));
    CHECK(!in_twisted_group(ctx, *F, G.v, bad));
}

TEST_CASE("E+ at gamma = 1 has determinant -1 for odd m") {
    // det E^{+-} = 1 except det E^+_{m,1} = -1: witnessed by x = diag(1,-1).
    GlobalContext ctx(3, Eta::plus, 2);
    FieldPtr F = symplectic_field(ctx, 0);
    Dense x0(2, {F->one(), FF_ZERO, FF_ZERO, F->neg(F->one())});
    for (i64 m : {1, 3}) {
        FF det = F->pow(dense_det(*F, x0), m);
        CHECK(det == (m % 2 == 1 ? F->neg(F->one()) : F->one()));
    }
}

TEST_CASE("wreath of a small base") {
    GlobalContext ctx(5, Eta::plus, 2);  // linear, a = 2
    FieldPtr F = symplectic_field(ctx, 0);
    // base R~_m = Z_4 scalars in GL_1(5)
    SpMat z = sp_scalar(*F, 1, F->element_of_order(4));
    SUBCASE("plain block permutations, c = (1), odd ell") {
        GlobalContext c3(4, Eta::plus, 3);
        FieldPtr F3 = symplectic_field(c3, 0);
        SpMat z3 = sp_scalar(*F3, 1, F3->element_of_order(3));
        auto gens = wreath_basic(*F3, {z3}, {1}, 3, false);
        auto elems = sp_closure(*F3, gens, 1 << 12);
        CHECK(static_cast<i64>(elems.size()) == 3 * 3 * 3 * 3);  // |B|^3 * |A_1|
        for (size_t i = 1; i < gens.size(); ++i)
            CHECK(sp_det_dense(*F3, gens[i]) == F3->one());
    }
    SUBCASE("sign-adjusted first level for ell = 2") {
        auto gens = wreath_basic(*F, {z}, {1}, 2, /*sign_adjust_first=*/true);
        REQUIRE(gens.size() == 2);
        CHECK(sp_det_dense(*F, gens[1]) == F->one());
        auto elems = sp_closure(*F, gens, 1 << 12);
        CHECK(static_cast<i64>(elems.size()) == 4 * 4 * 2);
    }
    SUBCASE("two levels") {
        auto gens = wreath_basic(*F, {z}, {1, 1}, 2, true);
        auto elems = sp_closure(*F, gens, 1 << 12);
        CHECK(static_cast<i64>(elems.size()) == 4 * 4 * 4 * 4 * 8);  // |B|^4 |A_{(1,1)}|
    }
}

TEST_CASE("normalizer generator lists") {
    GlobalContext ctx(4, Eta::plus, 3);
    auto ngens = normalizer_generators(ctx, 1, 0, 1, ShapeKind::R);
    REQUIRE(ngens.size() >= 3);  // n_i, n_ii, n_v_2
    CHECK(ngens[0].name == "n_i");
    CHECK(ngens[1].name == "n_ii");
    GlobalContext uni(3, Eta::plus, 2);
    CHECK(normalizer_generators(uni, 1, 0, 2, ShapeKind::Eplus).size() == 4);
}

TEST_CASE("verify_point passes on a spot grid") {
    VerifyOptions opts;
    for (auto [ell, q, eta] : {std::tuple<i64, i64, int>{3, 4, 1},
                               {3, 7, -1},
                               {2, 3, 1},
                               {2, 5, 1},
                               {2, 7, 1}}) {
        GlobalContext ctx(q, eta == 1 ? Eta::plus : Eta::minus, ell);
        SectionReport rep;
        verify_point(ctx, 1, 0, 1, opts, rep);
        verify_point(ctx, 1, 1, 0, opts, rep);
        for (const auto& c : rep.claims) {
            INFO(c.id, " @ ", c.params);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("corrupting the Vandermonde normalization fails the odd suite") {
    VerifyOptions bad;
    bad.corrupt_vandermonde = true;
    GlobalContext ctx(7, Eta::plus, 3);
    SectionReport rep;
    verify_point(ctx, 1, 0, 1, bad, rep);
    CHECK(rep.fail_count() > 0);
}
