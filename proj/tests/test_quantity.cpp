#include <doctest.h>

#include <cmath>

#include "dce/quantity.hpp"
#include "dce/rng.hpp"

using namespace dce;

TEST_SUITE("quantity") {

TEST_CASE("dimension algebra composes exponents") {
    CHECK(dims::velocity == dims::length / dims::time);
    CHECK(dims::energy == dims::mass * dims::area / dims::time.pow(2));
    CHECK(dims::power * dims::time == dims::energy);
    CHECK(dims::frequency.pow(-1) == dims::time);
    CHECK(dims::dimensionless == dims::length / dims::length);
    CHECK_FALSE(dims::energy == dims::power);
}

TEST_CASE("dimension rendering") {
    CHECK(to_string(dims::dimensionless) == "1");
    CHECK(to_string(dims::velocity) == "m s^-1");
    CHECK(to_string(dims::power) == "m^2 kg s^-3");
    CHECK(to_string(dims::permittivity) == "m^-3 kg^-1 s^4 A^2");
}

TEST_CASE("multiplication composes value and dimension") {
    const Quantity q = units::meters(2.0) * units::hertz(3.0);
    CHECK(q.value() == 6.0);
    CHECK(q.dim() == dims::velocity);

    const Quantity d = Constants::si().c * units::seconds(1.0);
    CHECK(d.value_in(dims::length) == 2.99792458e8);

    const Quantity e = Constants::si().hbar * units::rad_per_sec(1.112e10);
    CHECK(e.value_in(dims::energy) ==
          doctest::Approx(1.172684064e-24).epsilon(1e-9));
}

TEST_CASE("addition and subtraction require equal dimensions") {
    const Quantity a = units::seconds(1.5);
    const Quantity b = units::seconds(0.5);
    CHECK((a + b).value() == 2.0);
    CHECK((a - b).value() == 1.0);
    CHECK_THROWS_AS(a + units::meters(1.0), dimension_error);
    CHECK_THROWS_AS(a - units::watts(1.0), dimension_error);
}

TEST_CASE("dimension_error carries both dimensions") {
    try {
        assert_dim(units::meters(1.0), dims::energy, "unit test");
        FAIL("expected dimension_error");
    } catch (const dimension_error& e) {
        CHECK(e.expected == dims::energy);
        CHECK(e.actual == dims::length);
        CHECK(std::string(e.what()).find("unit test") != std::string::npos);
    }
}

TEST_CASE("non-finite values are rejected") {
    CHECK_THROWS_AS(Quantity(std::nan(""), dims::length), quantity_error);
    CHECK_THROWS_AS(Quantity(1.0, dims::length) / Quantity(0.0, dims::time),
                    quantity_error);
    // Multiplication overflowing to infinity is caught at construction.
    CHECK_THROWS_AS(Quantity(1e308, dims::length) * Quantity(1e308, dims::length),
                    quantity_error);
}

TEST_CASE("value_in audits the dimension") {
    const Quantity v = units::meters(6.0) / units::seconds(2.0);
    CHECK(v.value_in(dims::velocity) == 3.0);
    CHECK_THROWS_AS(v.value_in(dims::energy), dimension_error);
}

TEST_CASE("integer power") {
    const Quantity c5 = pow(Constants::si().c, 5);
    CHECK(c5.dim() == dims::velocity.pow(5));
    CHECK(c5.value() == doctest::Approx(std::pow(2.99792458e8, 5)).epsilon(1e-15));
    CHECK(pow(units::meters(4.0), 0).dim() == dims::dimensionless);
    CHECK(pow(units::seconds(2.0), -1).value() == 0.5);
    CHECK(pow(units::seconds(2.0), -1).dim() == dims::frequency);
}

TEST_CASE("multiplication is associative: randomized") {
    const Dimension pool[] = {dims::length, dims::time.pow(-1), dims::mass,
                              dims::dimensionless, dims::current};
    int checked = 0;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        const auto pick = [&](std::uint64_t stream) {
            const std::uint64_t w = rng::trial_word(7, stream, trial);
            const double v = 0.001 + 999.0 * rng::uniform01(w);
            return Quantity(v, pool[w % 5]);
        };
        const Quantity a = pick(0);
        const Quantity b = pick(1);
        const Quantity c = pick(2);
        const Quantity lhs = (a * b) * c;
        const Quantity rhs = a * (b * c);
        REQUIRE(lhs.dim() == rhs.dim());
        REQUIRE(lhs.value() == doctest::Approx(rhs.value()).epsilon(1e-15));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("constants table") {
    const Constants& k = Constants::si();
    CHECK(k.hbar.value_in(dims::action) == 1.054572e-34);
    CHECK(k.c.value_in(dims::velocity) == 2.99792458e8);
    CHECK(k.mu_b.value_in(dims::magnetic_moment) == 9.274010e-24);
    CHECK(k.eps0.value_in(dims::permittivity) == 8.854188e-12);
    CHECK(k.k_b.value_in(dims::entropy) == 1.380649e-23);
    CHECK(k.h.value_in(dims::action) == 6.62607015e-34);
    CHECK(k.euler_gamma == 0.5772156649015329);
}

TEST_CASE("counter rng is a pure function of (seed, stream, trial)") {
    CHECK(rng::trial_word(1, 2, 3) == rng::trial_word(1, 2, 3));
    CHECK(rng::trial_word(1, 2, 3) != rng::trial_word(1, 2, 4));
    CHECK(rng::trial_word(1, 2, 3) != rng::trial_word(1, 3, 3));
    CHECK(rng::trial_word(1, 2, 3) != rng::trial_word(2, 2, 3));
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const double u = rng::uniform01(rng::trial_word(42, 0, t));
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        REQUIRE(std::isfinite(rng::exponential(rng::trial_word(42, 1, t))));
    }
}

}  // TEST_SUITE
