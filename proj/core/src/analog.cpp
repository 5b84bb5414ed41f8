#include "comblock/analog.hpp"

#include "comblock/error.hpp"

#include <cmath>
#include <string>

namespace comblock {

namespace {

void require_positive(double v, std::string_view field) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw Error(ErrorCode::InvalidParameter, std::string(field) + " must be positive and finite");
}

}  // namespace

void validate_params(const CircuitParams& p) {
    const std::pair<Ohms, std::string_view> resistors[] = {
        {p.r1, "r1"}, {p.r2, "r2"}, {p.r3, "r3"}, {p.r4, "r4"}, {p.r5, "r5"},
        {p.r6, "r6"}, {p.r7, "r7"}, {p.r8, "r8"}, {p.r9, "r9"}, {p.r10, "r10"},
    };
    for (const auto& [r, name] : resistors) require_positive(r.value, name);

    const std::pair<Farads, std::string_view> capacitors[] = {
        {p.c1, "c1"}, {p.c2, "c2"}, {p.c3, "c3"}, {p.c4, "c4"}, {p.c5, "c5"},
    };
    for (const auto& [c, name] : capacitors) require_positive(c.value, name);

    require_positive(p.vcc.value, "vcc");
    require_positive(p.vbe.value, "vbe");
    if (p.vbe >= p.vcc) throw Error(ErrorCode::InvalidBias, "vbe must be below vcc");
    require_positive(p.hfe, "hfe");
    require_positive(p.v_high.value, "v_high");
    require_positive(p.v_low.value, "v_low");
    require_positive(p.mains_v.value, "mains_v");
    require_positive(p.mains_f.value, "mains_f");
    require_positive(p.secondary_v.value, "secondary_v");
    require_positive(p.regulator_out_v.value, "regulator_out_v");
    if (p.regulator_dropout_v.value < 0.0)
        throw Error(ErrorCode::InvalidParameter, "regulator_dropout_v must be non-negative");
    require_positive(p.transformer_rating.value, "transformer_rating");
}

Seconds time_constant(Ohms r, Farads c) {
    if (r.value < 0.0 || c.value < 0.0)
        throw Error(ErrorCode::InvalidArgument, "resistance and capacitance must be non-negative");
    return Seconds(r.value * c.value);
}

Volts discharge_voltage(Volts v0, Ohms r, Farads c, Seconds t) {
    if (!(r.value > 0.0) || !(c.value > 0.0))
        throw Error(ErrorCode::NonPositiveRC, "discharge needs r > 0 and c > 0");
    if (v0.value < 0.0 || t.value < 0.0)
        throw Error(ErrorCode::InvalidArgument, "v0 and t must be non-negative");
    return Volts(v0.value * std::exp(-t.value / (r.value * c.value)));
}

Seconds time_to_threshold(Volts v0, Volts vth, Ohms r, Farads c) {
    if (!(r.value > 0.0) || !(c.value > 0.0))
        throw Error(ErrorCode::NonPositiveRC, "discharge needs r > 0 and c > 0");
    if (!(vth.value > 0.0))
        throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
    if (vth > v0)
        throw Error(ErrorCode::ThresholdAboveInitial, "threshold is above the starting voltage");
    return Seconds(r.value * c.value * std::log(v0.value / vth.value));
}

BjtOperatingPoint bjt_operating_point(Volts vcc, Volts vbe, Ohms rb, double hfe) {
    if (!(vbe.value > 0.0) || vbe >= vcc)
        throw Error(ErrorCode::InvalidBias, "need 0 < vbe < vcc");
    if (!(rb.value > 0.0)) throw Error(ErrorCode::InvalidArgument, "base resistor must be positive");
    if (!(hfe > 0.0)) throw Error(ErrorCode::InvalidArgument, "hfe must be positive");

    BjtOperatingPoint op;
    op.v_q3 = vcc - vbe;
    op.i_b = Amperes(op.v_q3.value / rb.value);
    op.i_c = Amperes(hfe * op.i_b.value);
    op.i_e = op.i_b + op.i_c;
    return op;
}

Volts divider_out(Volts vin, Ohms r_top, Ohms r_bottom) {
    if (vin.value < 0.0 || r_top.value < 0.0 || r_bottom.value < 0.0)
        throw Error(ErrorCode::InvalidArgument, "divider inputs must be non-negative");
    const double total = r_top.value + r_bottom.value;
    if (!(total > 0.0)) throw Error(ErrorCode::ZeroTotalResistance, "divider has zero total resistance");
    return Volts(vin.value * r_bottom.value / total);
}

Volts ripple_estimate(Amperes i_load, Hertz f, Farads c) {
    if (!(f.value > 0.0) || !(c.value > 0.0))
        throw Error(ErrorCode::NonPositiveFC, "ripple needs f > 0 and c > 0");
    if (i_load.value < 0.0) throw Error(ErrorCode::InvalidArgument, "load current must be non-negative");
    return Volts(i_load.value / (2.0 * f.value * c.value));
}

Volts regulator_output(Volts vin, Volts nominal, Volts dropout) {
    if (vin.value >= nominal.value + dropout.value) return nominal;
    const double v = vin.value - dropout.value;
    return Volts(v > 0.0 ? v : 0.0);
}

std::chrono::milliseconds derive_hold_time(const CircuitParams& params) {
    const Seconds tau = time_constant(params.r6, params.c1);
    return std::chrono::milliseconds(std::llround(tau.value * 1000.0));
}

std::vector<CircuitFigure> circuit_report(const CircuitParams& p, Amperes load) {
    validate_params(p);
    const Seconds tau = time_constant(p.r6, p.c1);
    const auto op = bjt_operating_point(p.vcc, p.vbe, p.r10, p.hfe);
    const Volts q0_rest = divider_out(p.vcc, p.r9, p.r5);
    const Volts reset_rest = divider_out(p.vcc, p.r5, p.r8);
    const Volts secondary_peak(p.secondary_v.value * std::sqrt(2.0));
    const Volts ripple = ripple_estimate(load, p.mains_f, p.c2);
    const Volts trough = secondary_peak - ripple;
    const Volts reg = regulator_output(trough, p.regulator_out_v, p.regulator_dropout_v);

    return {
        {"tau", tau.value, "s", "R6*C1"},
        {"hold_time", static_cast<double>(derive_hold_time(p).count()), "ms", "round(R6*C1*1000)"},
        {"v_c1_after_tau", discharge_voltage(p.vcc, p.r6, p.c1, tau).value, "V", "Vcc*exp(-1)"},
        {"v_q3", op.v_q3.value, "V", "Vcc-Vbe"},
        {"i_b", op.i_b.value, "A", "V_Q3/R10"},
        {"i_c", op.i_c.value, "A", "hFE*I_B"},
        {"i_e", op.i_e.value, "A", "I_B+I_C"},
        {"q0_rest_divider", q0_rest.value, "V", "Vcc*R5/(R9+R5)"},
        {"reset_rest_divider", reset_rest.value, "V", "Vcc*R8/(R5+R8)"},
        {"secondary_peak", secondary_peak.value, "V", "Vsec*sqrt(2)"},
        {"ripple", ripple.value, "V", "I_load/(2*f*C2)"},
        {"regulator_out_at_trough", reg.value, "V", "ideal 78xx with dropout"},
    };
}

}  // namespace comblock
