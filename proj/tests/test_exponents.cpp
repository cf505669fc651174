#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "tanrep/errors.hpp"
#include "tanrep/exponents.hpp"

using namespace tanrep;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3).str() == "-1/3");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("affine printing") {
    CHECK(minor_arc_form().str() == "(11+3c)/15");
    CHECK(Affine{Rational(4, 15), Rational(-1, 5)}.str() == "(4-3c)/15");
    CHECK(Affine{Rational(3), Rational(-1)}.str() == "3-c");
    CHECK(constant(Rational(23, 21)).str() == "23/21");
}

TEST_CASE("gk_exponent") {
    CHECK(gk_exponent(1, Rational(0)) == Rational(1));
    CHECK(gk_exponent(1, Rational(3)) == Rational(1));
    CHECK(gk_exponent(0, Rational(1)) == Rational(1, 2));
    CHECK_THROWS_AS(gk_exponent(9, Rational(1)), Error);
}

TEST_CASE("minor arc exponent") {
    CHECK(minor_arc_exponent(Rational(1)) == Rational(14, 15));
    CHECK(minor_arc_exponent(Rational(23, 21)) == Rational(20, 21));
    CHECK(minor_arc_exponent(Rational(21, 20)) < minor_arc_exponent(Rational(22, 20)));
}

TEST_CASE("cutoffs") {
    CHECK(cutoffs(Rational(1)) == std::pair{Rational(1, 15), Rational(1, 3)});
    CHECK(cutoffs(Rational(23, 21)) == std::pair{Rational(1, 21), Rational(19, 63)});
    CHECK(cutoffs(Rational(23, 21)).first > Rational(0));
    CHECK(cutoffs(Rational(23, 21)).second > Rational(0));
    CHECK_THROWS_AS(cutoffs(Rational(4, 3)), Error);
}

TEST_CASE("admissible c") {
    const Rational c = admissible_c();
    CHECK(c == Rational(23, 21));
    // (67 - 9c)/30 equals 3 - c exactly at the boundary.
    CHECK(Rational(67, 30) - Rational(9, 30) * c == Rational(3) - c);
    CHECK_FALSE(c < Rational(17, 16));
    CHECK(c < Rational(6, 5));

    std::vector<Rational> bounds{Rational(3581, 3106), Rational(17, 16), Rational(23, 21),
                                 Rational(258, 235),   Rational(12, 11), Rational(3113, 2703),
                                 Rational(137, 119)};
    std::sort(bounds.begin(), bounds.end());
    std::ostringstream order;
    for (const auto& b : bounds) order << b << ' ';
    // Exact ordering, computed rather than assumed.
    CHECK(order.str() == "17/16 12/11 23/21 258/235 137/119 3113/2703 3581/3106 ");
}

TEST_CASE("chain steps") {
    const auto chain = exponent_chain();
    auto find = [&](const std::string& name) {
        const auto it = std::find_if(chain.begin(), chain.end(), [&](const auto& s) { return s.step == name; });
        REQUIRE(it != chain.end());
        return it->value;
    };
    CHECK(find("expansion_tail") == minor_arc_form());
    CHECK(find("type_II_diagonal") == minor_arc_form());
    CHECK(find("type_II_offdiagonal") == minor_arc_form());
    CHECK(find("type_I").str() == "(12+2c)/15");
    CHECK(find("vdc_k0_sum").str() == "(2+6c)/15");
    CHECK(find("A_bound").str() == "(1+c)/3");
    CHECK(find("int_S2A_sup").str() == "(37-9c)/15");
    CHECK(find("int_S2A_sup") ==
          constant(Rational(1)) - Affine::of_c() + Rational(2) * minor_arc_form());
    CHECK(find("int_S2A_mean").str() == "(4+c)/3");
    CHECK(find("gamma2_squared").str() == "(67-9c)/15");
    CHECK(find("gamma2").str() == "(67-9c)/30");
    CHECK(find("admissible_c").str() == "23/21");
    CHECK(solve_upper_bound(find("gamma2"), find("main_error")) == Rational(23, 21));
    CHECK_THROWS_AS(solve_upper_bound(find("main_error"), find("gamma2")), Error);
}
