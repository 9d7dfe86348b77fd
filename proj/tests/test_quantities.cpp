#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "becgate/quantities.hpp"
#include "test_support.hpp"

using namespace becgate;
using namespace becgate::units;

TEST_CASE("constants carry the Rb-87 values") {
    Constants c;
    CHECK(c.hbar > 0.0);
    CHECK(c.atom_mass > 0.0);
    CHECK(c.reference_isotope == "Rb-87");
    CHECK_REL(c.atom_mass, 1.44316e-25, 1e-3);
    c.validate();
}

TEST_CASE("fixed SI prefixes") {
    Quantity a(5.39, "nm");
    CHECK_REL(a.si(), 5.39e-9, 1e-15);
    CHECK_REL(a.to("m").value(), 5.39e-9, 1e-15);
    CHECK_REL(Quantity(8.0, "um").si(), 8e-6, 1e-15);
    CHECK_REL(Quantity(6.0, "min").si(), 360.0, 1e-15);
    CHECK_REL(Quantity(6e14, "cm^-3").si(), 6e20, 1e-15);
}

TEST_CASE("ordinary Hz converts to angular rad/s with 2pi") {
    Quantity f(10.0, "Hz");
    CHECK_REL(f.to("rad/s").value(), 62.8319, 1e-5);
    CHECK_REL(f.si(), 2.0 * std::numbers::pi * 10.0, 1e-15);
}

TEST_CASE("mismatched dimensions are rejected with both names") {
    Quantity a(1.0, "um");
    try {
        convert(a, "J");
        FAIL("expected DimensionError");
    } catch (const DimensionError& e) {
        CHECK(e.lhs_dimension == "length");
        CHECK(e.rhs_dimension == "energy");
    }
    CHECK_THROWS_AS(Quantity(1.0, "s") + Quantity(1.0, "m"), DimensionError);
    CHECK_THROWS_AS(Quantity(1.0, "Hz") < Quantity(1.0, "J"), DimensionError);
}

TEST_CASE("round-trip conversions are exact to 1e-12") {
    const char* pairs[][2] = {{"nm", "m"}, {"Hz", "rad/s"}, {"min", "s"},
                              {"cm^-3", "m^-3"}, {"um", "nm"}};
    for (auto [from, to] : pairs) {
        Quantity q(1.2345678901234, from);
        Quantity back = q.to(to).to(from);
        CHECK_REL(back.value(), q.value(), 1e-12);
        CHECK(back.unit().symbol == q.unit().symbol);
    }
}

TEST_CASE("same-dimension arithmetic works in the left operand's unit") {
    Quantity sum = Quantity(1.0, "um") + Quantity(500.0, "nm");
    CHECK_REL(sum.value(), 1.5, 1e-12);
    CHECK(sum.unit().symbol == "um");
    CHECK(Quantity(1.0, "um") > Quantity(900.0, "nm"));
}

TEST_CASE("quantity parsing") {
    CHECK_REL(parse_quantity("5.39 nm").si(), 5.39e-9, 1e-15);
    CHECK_REL(parse_quantity("5Hz").si(), 2.0 * std::numbers::pi * 5.0, 1e-15);
    CHECK_REL(parse_quantity("2pi*10 Hz").si(), 2.0 * std::numbers::pi * 10.0, 1e-15);
    CHECK_REL(parse_quantity("2pi*80Hz").si(), 2.0 * std::numbers::pi * 80.0, 1e-15);
    CHECK_REL(parse_quantity("0.14s").si(), 0.14, 1e-15);
    CHECK_REL(parse_quantity("1e5").value(), 1e5, 1e-15);
    CHECK(parse_quantity("10 Hz").si() == parse_quantity("2pi*10 Hz").si());
    CHECK_THROWS_AS(parse_quantity("abc"), ConfigError);
    CHECK_THROWS_AS(parse_quantity("1.0 parsec"), ConfigError);
    CHECK_THROWS_AS(parse_quantity("2pi*10 s"), ConfigError);
}

TEST_CASE("parse_si checks the dimension and allows bare zero") {
    CHECK_REL(parse_si("0.14 s", Dimension::Time, "t_a"), 0.14, 1e-15);
    CHECK(parse_si("0", Dimension::Time, "t_a") == 0.0);
    CHECK_THROWS_AS(parse_si("3 nm", Dimension::Time, "t_a"), ConfigError);
}

TEST_CASE("angular frequencies render in the 2pi convention") {
    CHECK(format_angular_frequency(2.0 * std::numbers::pi * 10.0) == "2pi*10 Hz");
}
