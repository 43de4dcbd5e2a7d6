#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "roots.hpp"

using namespace wl;

TEST_CASE("context invariants") {
    GlobalContext c34(4, Eta::plus, 3);
    CHECK(c34.p == 2);
    CHECK(c34.f == 2);
    CHECK(c34.e == 1);
    CHECK(c34.a == 1);
    GlobalContext c232(3, Eta::plus, 2);  // 4 | q + eta
    CHECK(c232.a == 2);
    CHECK(c232.ell2_unitary());
    GlobalContext c25(5, Eta::plus, 2);  // 4 | q - eta
    CHECK(c25.a == 2);
    CHECK(c25.ell2_linear());
    GlobalContext c27(7, Eta::plus, 2);  // 4 | q + eta, a = 3
    CHECK(c27.a == 3);
    GlobalContext c53(3, Eta::plus, 5);
    CHECK(c53.e == 4);  // order of 3 mod 5
    GlobalContext cu23(2, Eta::minus, 3);
    CHECK(cu23.e == 1);  // -2 = 1 mod 3
    CHECK(cu23.a == 1);
}

TEST_CASE("mul_root examples") {
    CHECK(mul_root(RootOfUnity(1, 3), RootOfUnity(1, 3)) == RootOfUnity(2, 3));
    CHECK(mul_root(RootOfUnity(1, 2), RootOfUnity(1, 2)) == RootOfUnity(0, 1));
    CHECK(mul_root(RootOfUnity(1, 8), RootOfUnity(3, 8)) == RootOfUnity(1, 2));
}

TEST_CASE("frobenius examples") {
    GlobalContext c(3, Eta::plus, 2);
    CHECK(frobenius(c, RootOfUnity(1, 8)) == RootOfUnity(3, 8));
    CHECK(frobenius(c, RootOfUnity(0, 1)) == RootOfUnity(0, 1));
    GlobalContext cu(2, Eta::minus, 3);
    CHECK(frobenius(cu, RootOfUnity(1, 3)) == RootOfUnity(1, 3));  // -2 = 1 mod 3
}

TEST_CASE("orbit_of examples") {
    GlobalContext c(3, Eta::plus, 2);
    RootOrbit o = orbit_of(c, RootOfUnity(1, 8));
    CHECK(o.members == std::vector<RootOfUnity>{RootOfUnity(1, 8), RootOfUnity(3, 8)});
    CHECK(o.d == 2);
    CHECK(o.alpha_gamma == 1);
    CHECK(o.m_gamma == 1);
    CHECK(o.e_gamma == 1);

    RootOrbit triv = orbit_of(c, RootOfUnity(0, 1));
    CHECK(triv.members.size() == 1);
    CHECK(triv.d == 1);

    GlobalContext cu(2, Eta::minus, 3);
    RootOrbit ou = orbit_of(cu, RootOfUnity(1, 3));
    CHECK(ou.d == 1);
    CHECK(ou.e_gamma == 1);

    CHECK_THROWS_AS(orbit_of(c, RootOfUnity(1, 3)), invalid_argument);  // 3 | p
}

TEST_CASE("enumerate_orbits counts") {
    GlobalContext c(3, Eta::plus, 2);
    auto all = enumerate_orbits(c, 2, false);
    int d1 = 0, d2 = 0;
    for (const auto& o : all) (o.d == 1 ? d1 : d2) += 1;
    CHECK(d1 == 2);  // roots in F_3^x
    CHECK(d2 == 3);  // monic irreducible quadratics != X

    GlobalContext cu(2, Eta::minus, 3);
    auto allu = enumerate_orbits(cu, 1, false);
    CHECK(allu.size() == 3);  // den | q + 1

    // Degree partition identity: the orbits on roots of order dividing
    // q^k - 1 carry total degree q^k - 1 (the necklace count in aggregate).
    for (i64 q : {2, 3, 4, 5}) {
        auto [p, f] = prime_power_decompose(q);
        GlobalContext cgl(q, Eta::plus, p == 2 ? 3 : 2);
        for (unsigned k = 1; k <= 4; ++k) {
            i64 target = ipow(q, k) - 1;
            i64 total = 0;
            for (const auto& o : enumerate_orbits(cgl, k, false))
                if (target % o.rep.den == 0) total += o.d;
            CHECK(total == target);
        }
    }
}

TEST_CASE("norm_map examples and multiplicativity") {
    GlobalContext c(3, Eta::plus, 2);  // e = 1
    CHECK(norm_map(c, 1, RootOfUnity(1, 8)) == RootOfUnity(1, 2));  // multiplier 1 + 3
    CHECK(norm_map(c, 0, RootOfUnity(1, 2)) == RootOfUnity(1, 2));  // alpha = 0 identity

    GlobalContext cu(2, Eta::minus, 3);
    CHECK(norm_map(cu, 1, RootOfUnity(1, 9)) == RootOfUnity(1, 3));  // multiplier 3

    std::mt19937 rng(7);
    i64 modulus = c.abs_qk_minus_etak(2);  // alpha = 1: q^2 - 1
    for (int t = 0; t < 50; ++t) {
        i64 a = static_cast<i64>(rng() % static_cast<u64>(modulus));
        i64 b = static_cast<i64>(rng() % static_cast<u64>(modulus));
        RootOfUnity xa(a, modulus), xb(b, modulus);
        CHECK(norm_map(c, 1, mul_root(xa, xb)) ==
              mul_root(norm_map(c, 1, xa), norm_map(c, 1, xb)));
    }
}

TEST_CASE("phi_alpha examples and fiber partition") {
    GlobalContext c(3, Eta::plus, 2);
    auto out = phi_alpha(c, 1, {RootOfUnity(0, 1)});
    REQUIRE(out.size() == 1);
    CHECK(out[0].d == 1);

    auto out2 = phi_alpha(c, 1, {RootOfUnity(1, 8)});  // fixed by x9 mod 8
    REQUIRE(out2.size() == 1);
    CHECK(out2[0].members == std::vector<RootOfUnity>{RootOfUnity(1, 8), RootOfUnity(3, 8)});

    auto out3 = phi_alpha(c, 1, {RootOfUnity(1, 2)});
    REQUIRE(out3.size() == 1);
    CHECK(out3[0].members == std::vector<RootOfUnity>{RootOfUnity(1, 2)});

    // not an extension-Frobenius orbit
    CHECK_THROWS_AS(phi_alpha(c, 1, {RootOfUnity(1, 8), RootOfUnity(5, 8)}), invalid_argument);
    CHECK_THROWS_AS(phi_alpha(c, 1, {}), invalid_argument);

    // Exhaustive fiber check: every extension orbit maps into the orbit set of
    // roots of order dividing q^{e ell^alpha} - eta^{...}; fibers partition.
    for (unsigned alpha : {0u, 1u}) {
        auto ext = extension_orbits(c, alpha, 0);
        std::set<RootOfUnity> covered;
        for (const auto& eo : ext) {
            auto fibers = phi_alpha(c, alpha, eo);
            REQUIRE(fibers.size() == 1);
            for (const auto& r : eo) {
                CHECK(std::binary_search(fibers[0].members.begin(), fibers[0].members.end(), r));
                CHECK(!covered.count(r));
                covered.insert(r);
            }
        }
        CHECK(covered.size() == static_cast<size_t>(c.abs_qk_minus_etak(
                                    static_cast<unsigned>(c.e) * static_cast<unsigned>(ipow(2, alpha)))));
    }
}

TEST_CASE("zeta action on orbits") {
    GlobalContext c(3, Eta::plus, 2);
    RootOrbit triv = orbit_of(c, RootOfUnity(0, 1));
    CHECK(zeta_act_orbit(c, RootOfUnity(0, 1), triv) == triv);
    RootOrbit half = zeta_act_orbit(c, RootOfUnity(1, 2), triv);
    CHECK(half.rep == RootOfUnity(1, 2));

    // group action property on all small orbits
    std::mt19937 rng(11);
    auto orbits = enumerate_orbits(c, 3, false);
    for (const auto& o : orbits) {
        for (i64 k1 = 0; k1 < c.q_minus_eta(); ++k1)
            for (i64 k2 = 0; k2 < c.q_minus_eta(); ++k2) {
                RootOfUnity z1(k1, c.q_minus_eta()), z2(k2, c.q_minus_eta());
                CHECK(zeta_act_orbit(c, mul_root(z1, z2), o) ==
                      zeta_act_orbit(c, z1, zeta_act_orbit(c, z2, o)));
            }
        RootOrbit moved = zeta_act_orbit(c, RootOfUnity(1, 2), o);
        CHECK(moved.d == o.d);
        CHECK(moved.m_gamma == o.m_gamma);
    }
}

TEST_CASE("aut_act") {
    GlobalContext c(3, Eta::plus, 2);
    RootOrbit triv = orbit_of(c, RootOfUnity(0, 1));
    CHECK(aut_act(c, AutKind::graph, triv) == triv);
    RootOrbit o8 = orbit_of(c, RootOfUnity(1, 8));
    CHECK(aut_act(c, AutKind::field_p, o8) == o8);  // 3rd power maps 1/8 -> 3/8, same orbit
    for (const auto& o : enumerate_orbits(c, 3, false))
        CHECK(aut_act(c, AutKind::graph, aut_act(c, AutKind::graph, o)) == o);
}
