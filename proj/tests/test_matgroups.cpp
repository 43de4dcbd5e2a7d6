#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matgroups.hpp"

using namespace wl;

TEST_CASE("closures of classical groups") {
    CHECK(closure(Field::make(3, 1), 1, {mat_identity(*Field::make(3, 1), 1)}).order() == 1);
    CHECK(gl_group(2, 3).order() == 48);
    CHECK(gl_group(2, 4).order() == 180);
    CHECK(gl_group(2, 5).order() == 480);
    CHECK(gl_group(3, 2).order() == 168);
    CHECK(sl_group(2, 3).order() == 24);
    CHECK(sl_group(2, 5).order() == 120);
    CHECK(sl_group(3, 2).order() == 168);  // q - 1 = 1
    CHECK(gu_group(2, 2).order() == 18);
    CHECK(gu_group(2, 3).order() == 96);
    CHECK(su_group(3, 2).order() == 216);
    CHECK_THROWS_AS(closure(Field::make(5, 1), 2, gl_group(2, 5).gens, 10), cap_exceeded);
}

TEST_CASE("conjugacy classes") {
    auto g23 = gl_group(2, 3);
    auto table = conjugacy_classes(g23);
    CHECK(table.classes.size() == 8);
    i64 total = 0;
    for (const auto& c : table.classes) total += c.size;
    CHECK(total == 48);
    CHECK(ell_regular_class_count(g23, 2) == 2);

    auto s23 = sl_group(2, 3);
    CHECK(conjugacy_classes(s23).classes.size() == 7);
    CHECK(ell_regular_class_count(s23, 2) == 3);  // identity plus two order-3 classes

    CHECK(ell_regular_class_count(gu_group(2, 2), 3) == 2);
}

TEST_CASE("sylow and o_ell") {
    auto s23 = sl_group(2, 3);
    auto syl = sylow(s23, 2);
    CHECK(syl.order() == 8);
    auto o2 = o_ell(s23, 2);
    CHECK(o2.order() == 8);  // Q8 normal in SL_2(3)

    auto g23 = gl_group(2, 3);
    CHECK(sylow(g23, 2).order() == 16);
    CHECK(o_ell(g23, 2).order() == 8);  // O_2(GL_2(3)) = Q8
    CHECK(o_ell(g23, 3).order() == 1);

    auto q8 = o_ell(s23, 2);
    CHECK(sylow(q8, 2).order() == 8);  // Sylow of an ell-group is the group
}

TEST_CASE("normalizer and centralizer") {
    auto g23 = gl_group(2, 3);
    CHECK(normalizer(g23, g23).order() == 48);
    auto q8 = o_ell(g23, 2);
    CHECK(normalizer(g23, q8).order() == 48);  // Q8 normal in GL_2(3)
    auto center = centralizer(g23, g23);
    CHECK(center.order() == 2);  // Z(GL_2(3)) = {+-1}
    CHECK(centralizer(g23, center).order() == 48);
}

TEST_CASE("det_one_subgroup") {
    auto g23 = gl_group(2, 3);
    CHECK(det_one_subgroup(g23).order() == 24);
    auto s23 = sl_group(2, 3);
    CHECK(det_one_subgroup(s23).order() == 24);
    auto z = centralizer(g23, g23);
    CHECK(det_one_subgroup(z).order() == 2);  // det(-I) = 1, so Z(GL_2(3)) cap SL = {+-I}
}

TEST_CASE("radical subgroups of small groups") {
    auto g23 = gl_group(2, 3);
    auto rads = radical_subgroups(g23, 2);
    // Q8 and the semidihedral Sylow
    REQUIRE(rads.size() == 2);
    CHECK(rads[0].order() == 8);
    CHECK(rads[1].order() == 16);

    auto s23 = sl_group(2, 3);
    auto rads_sl = radical_subgroups(s23, 2);
    REQUIRE(rads_sl.size() == 1);
    CHECK(rads_sl[0].order() == 8);

    auto g33 = gl_group(2, 2);
    auto rads3 = radical_subgroups(g33, 3);  // GL_2(2) = S_3, Sylow_3 = C3 normal
    REQUIRE(rads3.size() == 1);
    CHECK(rads3[0].order() == 3);

    // ell not dividing |G|: the trivial subgroup is the only radical one
    auto rads5 = radical_subgroups(gl_group(2, 3), 5);
    REQUIRE(rads5.size() == 1);
    CHECK(rads5[0].order() == 1);
}

TEST_CASE("SU_3(2) regular class count") {
    auto su32 = su_group(3, 2);
    CHECK(su32.order() == 216);
    CHECK(ell_regular_class_count(su32, 3) == 5);
}
