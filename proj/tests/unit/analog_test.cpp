#include <catch_amalgamated.hpp>

#include "comblock/analog.hpp"
#include "comblock/error.hpp"

#include <cmath>

using namespace comblock;
using Catch::Matchers::WithinRel;

namespace {

template <class F>
ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("time_constant", "[analog][rc]") {
    CHECK(time_constant(Ohms(470e3), Farads(10e-6)).value == 4.7);
    CHECK(time_constant(Ohms(0), Farads(10e-6)).value == 0.0);
    CHECK(time_constant(Ohms(1e6), Farads(1e-6)).value == 1.0);
    CHECK(error_of([] { time_constant(Ohms(-1), Farads(1e-6)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("discharge_voltage", "[analog][rc]") {
    CHECK(discharge_voltage(Volts(12), Ohms(470e3), Farads(10e-6), Seconds(0)).value == 12.0);
    // one time constant: 12/e
    CHECK_THAT(discharge_voltage(Volts(12), Ohms(470e3), Farads(10e-6), Seconds(4.7)).value,
               WithinRel(4.414553294057308, 1e-12));
    CHECK(discharge_voltage(Volts(0), Ohms(470e3), Farads(10e-6), Seconds(10)).value == 0.0);
    CHECK(error_of([] { discharge_voltage(Volts(12), Ohms(0), Farads(1e-6), Seconds(1)); }) ==
          ErrorCode::NonPositiveRC);
    CHECK(error_of([] { discharge_voltage(Volts(12), Ohms(1e3), Farads(0), Seconds(1)); }) ==
          ErrorCode::NonPositiveRC);

    SECTION("strictly decreasing for positive v0") {
        double prev = 13.0;
        for (double t = 0.0; t < 30.0; t += 0.5) {
            const double v = discharge_voltage(Volts(12), Ohms(470e3), Farads(10e-6), Seconds(t)).value;
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("time_to_threshold", "[analog][rc]") {
    CHECK(time_to_threshold(Volts(12), Volts(12), Ohms(1), Farads(1)).value == 0.0);
    CHECK_THAT(time_to_threshold(Volts(12), Volts(6), Ohms(470e3), Farads(10e-6)).value,
               WithinRel(4.7 * std::log(2.0), 1e-12));
    CHECK_THAT(time_to_threshold(Volts(12), Volts(12 * std::exp(-1.0)), Ohms(470e3), Farads(10e-6)).value,
               WithinRel(4.7, 1e-12));
    CHECK(error_of([] { time_to_threshold(Volts(6), Volts(12), Ohms(1e3), Farads(1e-6)); }) ==
          ErrorCode::ThresholdAboveInitial);
    CHECK(error_of([] { time_to_threshold(Volts(12), Volts(6), Ohms(0), Farads(1e-6)); }) ==
          ErrorCode::NonPositiveRC);
    CHECK(error_of([] { time_to_threshold(Volts(12), Volts(0), Ohms(1), Farads(1)); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("bjt_operating_point", "[analog][bjt]") {
    SECTION("relay driver of the reference build") {
        const auto op = bjt_operating_point(Volts(12), Volts(0.7), Ohms(4700), 320);
        CHECK(op.v_q3.value == 11.3);
        CHECK_THAT(op.i_b.value, WithinRel(2.404e-3, 5e-4));
        CHECK_THAT(op.i_c.value, WithinRel(0.769, 5e-4));
        CHECK(op.i_e.value >= 0.771);
        CHECK(op.i_e.value <= 0.772);
        CHECK(op.i_e.value == op.i_b.value + op.i_c.value);
    }
    SECTION("unity gain") {
        const auto op = bjt_operating_point(Volts(12), Volts(0.7), Ohms(4700), 1);
        CHECK(op.i_c.value == op.i_b.value);
        CHECK(op.i_e.value == 2 * op.i_b.value);
    }
    SECTION("hand-checked small stage") {
        const auto op = bjt_operating_point(Volts(1.4), Volts(0.7), Ohms(700), 100);
        CHECK_THAT(op.v_q3.value, WithinRel(0.7, 1e-12));
        CHECK_THAT(op.i_b.value, WithinRel(1e-3, 1e-12));
        CHECK_THAT(op.i_c.value, WithinRel(0.1, 1e-12));
        CHECK_THAT(op.i_e.value, WithinRel(0.101, 1e-12));
    }
    CHECK(error_of([] { bjt_operating_point(Volts(12), Volts(13), Ohms(4700), 320); }) == ErrorCode::InvalidBias);
    CHECK(error_of([] { bjt_operating_point(Volts(12), Volts(12), Ohms(4700), 320); }) == ErrorCode::InvalidBias);
}

TEST_CASE("divider_out", "[analog][divider]") {
    CHECK_THAT(divider_out(Volts(12), Ohms(10e3), Ohms(680e3)).value, WithinRel(12.0 * 680.0 / 690.0, 1e-12));
    CHECK_THAT(divider_out(Volts(12), Ohms(10e3), Ohms(680e3)).value, WithinRel(11.826, 1e-4));
    CHECK(divider_out(Volts(12), Ohms(3.3e3), Ohms(3.3e3)).value == 6.0);
    CHECK(divider_out(Volts(0), Ohms(1), Ohms(2)).value == 0.0);
    CHECK(divider_out(Volts(9), Ohms(0), Ohms(5e3)).value == 9.0);
    CHECK(divider_out(Volts(9), Ohms(5e3), Ohms(0)).value == 0.0);
    CHECK(error_of([] { divider_out(Volts(12), Ohms(0), Ohms(0)); }) == ErrorCode::ZeroTotalResistance);
}

TEST_CASE("ripple_estimate", "[analog][supply]") {
    CHECK_THAT(ripple_estimate(Amperes(0.5), Hertz(50), Farads(470e-6)).value, WithinRel(10.638297872340425, 1e-12));
    CHECK(ripple_estimate(Amperes(0), Hertz(50), Farads(470e-6)).value == 0.0);
    CHECK_THAT(ripple_estimate(Amperes(0.047), Hertz(50), Farads(470e-6)).value, WithinRel(1.0, 1e-12));
    CHECK(error_of([] { ripple_estimate(Amperes(1), Hertz(0), Farads(1e-6)); }) == ErrorCode::NonPositiveFC);
    CHECK(error_of([] { ripple_estimate(Amperes(1), Hertz(50), Farads(0)); }) == ErrorCode::NonPositiveFC);
}

TEST_CASE("regulator_output", "[analog][supply]") {
    CHECK(regulator_output(Volts(16), Volts(12), Volts(2)).value == 12.0);
    CHECK(regulator_output(Volts(14), Volts(12), Volts(2)).value == 12.0);
    CHECK(regulator_output(Volts(13), Volts(12), Volts(2)).value == 11.0);
    CHECK(regulator_output(Volts(1), Volts(12), Volts(2)).value == 0.0);
}

TEST_CASE("derive_hold_time", "[analog][rc]") {
    CircuitParams p;
    CHECK(derive_hold_time(p).count() == 4700);
    p.r6 = Ohms(235e3);
    CHECK(derive_hold_time(p).count() == 2350);
    p.r6 = Ohms(470e3);
    p.c1 = Farads(20e-6);
    CHECK(derive_hold_time(p).count() == 9400);
}

TEST_CASE("CircuitParams defaults and validation", "[analog][params]") {
    const CircuitParams p;
    CHECK(p.r1.value == 10e3);
    CHECK(p.r5.value == 680e3);
    CHECK(p.r6.value == 470e3);
    CHECK(p.r7.value == 100.0);
    CHECK(p.r8.value == 10e6);
    CHECK(p.r10.value == 4.7e3);
    CHECK(p.c2.value == 470e-6);
    CHECK(p.hfe == 320.0);
    CHECK_NOTHROW(validate_params(p));

    CircuitParams bad = p;
    bad.r8 = Ohms(0);
    CHECK(error_of([&] { validate_params(bad); }) == ErrorCode::InvalidParameter);
    bad = p;
    bad.vbe = Volts(13);
    CHECK(error_of([&] { validate_params(bad); }) == ErrorCode::InvalidBias);
    bad = p;
    bad.c4 = Farads(-1e-9);
    CHECK(error_of([&] { validate_params(bad); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("circuit_report lists every figure", "[analog][report]") {
    const auto figs = circuit_report(CircuitParams{}, Amperes(0.5));
    auto find = [&](std::string_view name) {
        for (const auto& f : figs)
            if (f.name == name) return f.value;
        FAIL("missing figure " << name);
        return 0.0;
    };
    CHECK(find("tau") == 4.7);
    CHECK(find("hold_time") == 4700.0);
    CHECK(find("v_q3") == 11.3);
    CHECK_THAT(find("i_b"), WithinRel(2.404e-3, 5e-4));
    CHECK_THAT(find("q0_rest_divider"), WithinRel(11.826, 1e-4));
    CHECK_THAT(find("ripple"), WithinRel(10.638, 1e-4));
}
