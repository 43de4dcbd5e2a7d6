#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "labels.hpp"
#include "matgroups.hpp"

using namespace wl;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("enumerate_semisimple") {
    GlobalContext c(3, Eta::plus, 2);
    CHECK(enumerate_semisimple(c, 2, false).size() == 6);  // six semisimple classes of GL_2(3)
    CHECK(enumerate_semisimple(c, 2, true).size() == 1);   // only s = 1 has odd order
    CHECK(enumerate_semisimple(c, 1, false).size() == 2);  // q - 1 singleton orbits

    GlobalContext cu(2, Eta::minus, 3);
    CHECK(enumerate_semisimple(cu, 1, false).size() == 3);  // den | q + 1
}

TEST_CASE("enumerate_iIBr and iAlp counts") {
    GlobalContext c(3, Eta::plus, 2);
    auto ibr = enumerate_iIBr(c, 2);
    auto alp = enumerate_iAlp(c, 2);
    CHECK(ibr.size() == 2);  // s = 1 with mu in {(2), (1,1)}
    CHECK(alp.size() == 2);  // lambda empty forced, K runs over D_2

    GlobalContext cu(2, Eta::minus, 3);
    CHECK(enumerate_iIBr(cu, 2).size() == 2);
    CHECK(enumerate_iAlp(cu, 2).size() == 2);

    GlobalContext c32(2, Eta::plus, 3);  // GL_3(2), ell = 3
    CHECK(enumerate_iIBr(c32, 3).size() == 5);
    GlobalContext c72(2, Eta::plus, 7);  // GL_3(2), ell = 7
    CHECK(enumerate_iIBr(c72, 3).size() == 4);
}

TEST_CASE("omega examples and round trip") {
    GlobalContext c(3, Eta::plus, 2);
    auto ibr = enumerate_iIBr(c, 2);
    for (const auto& x : ibr) {
        AlpLabel y = omega(c, x);
        const Partition& mu = x.mu.begin()->second;
        unsigned expected_deg = (mu == P({2})) ? 0u : 1u;
        CHECK(deg_K(c, y) == expected_deg);
        CHECK(omega_inv(c, y) == x);
    }

    // Exhaustive bijection check on a small grid (n = 1 exercises e_Gamma = 1
    // with empty quotient data).
    for (i64 q : {2, 3, 4, 5})
        for (Eta eta : {Eta::plus, Eta::minus})
            for (i64 ell : {2, 3, 5, 7}) {
                auto [p, f] = prime_power_decompose(q);
                if (ell == p) continue;
                GlobalContext ctx(q, eta, ell);
                for (unsigned n = 1; n <= 3; ++n) {
                    auto labels = enumerate_iIBr(ctx, n);
                    auto alps = enumerate_iAlp(ctx, n);
                    CHECK(labels.size() == alps.size());
                    std::set<AlpLabel> images;
                    for (const auto& x : labels) {
                        AlpLabel y = omega(ctx, x);
                        CHECK(omega_inv(ctx, y) == x);
                        images.insert(y);
                    }
                    CHECK(images.size() == labels.size());
                    CHECK(images == std::set<AlpLabel>(alps.begin(), alps.end()));
                }
            }
}

TEST_CASE("zeta action on labels") {
    GlobalContext c(5, Eta::plus, 3);  // O_{3'}(Z_4) = Z_4
    auto ibr = enumerate_iIBr(c, 2);
    RootOfUnity zeta(1, 4);
    bool found_swap = false;
    for (const auto& x : ibr) {
        IBrLabel y = zeta_act_label(c, zeta, x);
        CHECK(zeta_act_label(c, root_inverse(zeta), y) == x);
        if (!(y == x)) found_swap = true;
    }
    CHECK(found_swap);  // s supported on 0/1 moves to s supported on 1/4

    GlobalContext c2(3, Eta::plus, 2);
    for (const auto& x : enumerate_iIBr(c2, 2))
        CHECK(zeta_act_label(c2, RootOfUnity(0, 1), x) == x);
}

TEST_CASE("kappa examples") {
    GlobalContext c(3, Eta::plus, 2);
    for (const auto& x : enumerate_iIBr(c, 2)) {
        KappaPair k = kappa_ibr(c, x);
        const Partition& mu = x.mu.begin()->second;
        CHECK(k.ell_prime == 1);
        CHECK(k.ell == ((mu == P({1, 1})) ? 2 : 1));
    }
    for (const auto& y : enumerate_iAlp(c, 2)) {
        KappaPair k = kappa_alp(c, y);
        CHECK(k.ell == ((deg_K(c, y) == 0) ? 1 : 2));
    }
    // ell not dividing q - eta forces kappa_ell = 1.
    GlobalContext c5(3, Eta::plus, 5);
    for (const auto& x : enumerate_iIBr(c5, 3)) CHECK(kappa_ibr(c5, x).ell == 1);
}

TEST_CASE("kappa_alp of omega equals kappa_ibr") {
    for (i64 q : {2, 3, 4, 5})
        for (Eta eta : {Eta::plus, Eta::minus})
            for (i64 ell : {2, 3, 5, 7}) {
                auto [p, f] = prime_power_decompose(q);
                if (ell == p) continue;
                GlobalContext ctx(q, eta, ell);
                for (unsigned n = 1; n <= 4; ++n)
                    for (const auto& x : enumerate_iIBr(ctx, n)) {
                        KappaPair ki = kappa_ibr(ctx, x);
                        KappaPair ka = kappa_alp(ctx, omega(ctx, x));
                        CHECK(ki.ell_prime == ka.ell_prime);
                        CHECK(ki.ell == ka.ell);
                    }
            }
}

TEST_CASE("count examples with brute-force oracle") {
    GlobalContext c(3, Eta::plus, 2);
    CountResult gl = count_labels(c, 2, GroupKind::gl);
    CHECK(gl.ibr == 2);
    CHECK(gl.alp == 2);
    CountResult sl = count_labels(c, 2, GroupKind::sl);
    CHECK(sl.ibr == 3);
    CHECK(sl.alp == 3);
    CHECK(ell_regular_class_count(gl_group(2, 3), 2) == gl.ibr);
    CHECK(ell_regular_class_count(sl_group(2, 3), 2) == sl.ibr);

    GlobalContext cu(2, Eta::minus, 3);
    CountResult glu = count_labels(cu, 2, GroupKind::gl);
    CHECK(glu.ibr == 2);
    CHECK(glu.alp == 2);
    CHECK(ell_regular_class_count(gu_group(2, 2), 3) == glu.ibr);

    CHECK_THROWS_AS(count_labels(c, 1, GroupKind::sl), invalid_argument);
}

TEST_CASE("nu_valuation") {
    GlobalContext c(3, Eta::plus, 2);
    CHECK(nu_valuation(c, 1) == 1);
    CHECK(nu_valuation(c, 2) == 3);  // v_2(8)
    GlobalContext c43(4, Eta::plus, 3);
    CHECK(nu_valuation(c43, 1) == 1);  // v_3(3)
    GlobalContext c35(3, Eta::plus, 5);
    CHECK(nu_valuation(c35, 1) == 0);  // e = 4 does not divide 1
    CHECK(nu_valuation(c35, 4) == 1);  // v_5(80)

    // cross-check against direct valuations of q^k - eta^k
    for (i64 q : {2, 3, 5})
        for (Eta eta : {Eta::plus, Eta::minus})
            for (i64 ell : {2, 3, 5, 7}) {
                auto [p, f] = prime_power_decompose(q);
                if (ell == p) continue;
                GlobalContext ctx(q, eta, ell);
                for (unsigned k = 1; k <= 8; ++k)
                    CHECK(nu_valuation(ctx, k) == valuation(ctx.abs_qk_minus_etak(k), ell));
            }
}

TEST_CASE("defect_valuation examples") {
    GlobalContext c(3, Eta::plus, 2);
    for (const auto& x : enumerate_iIBr(c, 2)) {
        // both unipotent labels of GL_2(3) have hook set {2, 1}: 3 + 1 = 4 = v_2(48)
        CHECK(defect_valuation(c, x) == 4);
    }
    CHECK(nu_group_order(c, 2) == 4);

    GlobalContext c3(3, Eta::plus, 2);
    IBrLabel steinberg;
    steinberg.s.mult[RootOfUnity(0, 1)] = 3;
    steinberg.mu[RootOfUnity(0, 1)] = P({2, 1});
    CHECK(defect_valuation(c3, steinberg) == 3);  // hooks {3,1,1}: 1 + 1 + 1
    CHECK(nu_group_order(c3, 3) - 2 == 3);        // v_2|GL_3(3)| = 5, v_2(q^2 + q) = 2
}

TEST_CASE("defect bound") {
    for (i64 q : {2, 3, 4, 5})
        for (Eta eta : {Eta::plus, Eta::minus})
            for (i64 ell : {2, 3, 5, 7}) {
                auto [p, f] = prime_power_decompose(q);
                if (ell == p) continue;
                GlobalContext ctx(q, eta, ell);
                unsigned vz = valuation(ctx.q_minus_eta(), ell);
                for (unsigned n = 1; n <= 4; ++n) {
                    unsigned vn = valuation(static_cast<i64>(n), ell);
                    for (const auto& x : enumerate_iIBr(ctx, n)) {
                        unsigned d = defect_valuation(ctx, x);
                        CHECK(d >= vz + std::min(vz, vn));
                    }
                }
            }
}

TEST_CASE("defect_zero_ordinary validator") {
    GlobalContext c(3, Eta::plus, 5);  // e = 4
    for (const auto& y : enumerate_iAlp(c, 4)) CHECK(defect_zero_ordinary(c, y));
    // a raw lambda with an e-hook is rejected
    GlobalContext c2(4, Eta::plus, 3);  // e = 1
    AlpLabel bad;
    bad.s.mult[RootOfUnity(0, 1)] = 1;
    bad.lambda[RootOfUnity(0, 1)] = P({1});  // every box is a 1-hook
    bad.K[RootOfUnity(0, 1)] = {CoreTower{3, {}}};
    CHECK(!defect_zero_ordinary(c2, bad));
}
