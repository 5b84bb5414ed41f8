#pragma once

// =============================================================================
// Closed-form circuit quantities
// =============================================================================
// RC hold timer, the relay-driver transistor's operating point, the resistive
// dividers around the first latch and a few supply-side figures. Everything
// here is stateless arithmetic.
// =============================================================================

#include "comblock/units.hpp"

#include <chrono>
#include <string_view>
#include <vector>

namespace comblock {

using units::Amperes;
using units::Farads;
using units::Hertz;
using units::Ohms;
using units::Seconds;
using units::Volts;

/// Component values of the reference build. Defaults are the parts list.
struct CircuitParams {
    Ohms r1{10e3}, r2{10e3}, r3{10e3}, r4{10e3};  // key pull-ups
    Ohms r5{680e3};
    Ohms r6{470e3};                               // hold-timer resistor
    Ohms r7{100.0};
    Ohms r8{10e6};
    Ohms r9{10e3};
    Ohms r10{4.7e3};                              // relay-driver base resistor

    Farads c1{10e-6};                             // hold-timer capacitor
    Farads c2{470e-6};                            // reservoir after the bridge
    Farads c3{100e-9}, c4{100e-9};                // regulator decoupling
    Farads c5{100e-6};

    Volts vcc{12.0};
    Volts vbe{0.7};
    double hfe = 320.0;
    Volts v_high{11.3};                           // measured logic HIGH
    Volts v_low{0.7};                             // measured logic LOW

    Volts mains_v{240.0};
    Hertz mains_f{50.0};
    Volts secondary_v{12.0};
    Volts regulator_out_v{12.0};
    Volts regulator_dropout_v{2.0};
    Amperes transformer_rating{0.5};
};

/// Throws Error(InvalidParameter) naming the first offending field.
void validate_params(const CircuitParams& params);

struct BjtOperatingPoint {
    Volts v_q3;
    Amperes i_b;
    Amperes i_c;
    Amperes i_e;
};

/// tau = r * c. Both arguments must be non-negative.
Seconds time_constant(Ohms r, Farads c);

/// First-order discharge v0 * exp(-t / rc).
Volts discharge_voltage(Volts v0, Ohms r, Farads c, Seconds t);

/// Time for a discharge from v0 to reach vth (0 < vth <= v0).
Seconds time_to_threshold(Volts v0, Volts vth, Ohms r, Farads c);

/// Base-resistor driven NPN stage: v_q3 = vcc - vbe, i_b = v_q3 / rb,
/// i_c = hfe * i_b, i_e = i_b + i_c.
BjtOperatingPoint bjt_operating_point(Volts vcc, Volts vbe, Ohms rb, double hfe);

Volts divider_out(Volts vin, Ohms r_top, Ohms r_bottom);

/// Peak-to-peak ripple of a full-wave rectifier into a reservoir capacitor.
Volts ripple_estimate(Amperes i_load, Hertz f, Farads c);

/// Ideal 78xx regulator: nominal output when there is at least `dropout`
/// of headroom, otherwise the input minus the dropout (floored at zero).
Volts regulator_output(Volts vin, Volts nominal, Volts dropout);

/// Hold window from R6 * C1, rounded to whole milliseconds.
std::chrono::milliseconds derive_hold_time(const CircuitParams& params);

/// One line of the `circuit` report.
struct CircuitFigure {
    std::string_view name;
    double value;
    std::string_view unit;
    std::string_view provenance;  // which formula / parts produced it
};

/// Every derived quantity the CLI prints, in display order.
std::vector<CircuitFigure> circuit_report(const CircuitParams& params, Amperes load);

}  // namespace comblock
