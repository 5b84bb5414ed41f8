#include "comblock/table1.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace comblock {

namespace {

constexpr bool H = true;
constexpr bool L = false;
constexpr OutputState kOpen{Solenoid::Open, Indicator::On, Indicator::Off};
constexpr OutputState kClose{Solenoid::Close, Indicator::Off, Indicator::On};

std::vector<PublishedRow> build_table() {
    return {
        {1, to_keys({1, 7, 5, 2}), {H, L, L, L}, kClose},
        {2, to_keys({1, 5, 9, 7}), {H, L, L, L}, kClose},
        {3, to_keys({1, 9, 2, 2}), {H, H, L, L}, kClose},
        {4, to_keys({1, 5, 7, 9}), {H, L, L, L}, kClose},
        {5, to_keys({1, 9, 5, 3}), {L, L, L, L}, kClose},
        {6, to_keys({8, 4, 9, 3}), {L, L, L, L}, kClose},
        {7, to_keys({1, 9, 5, 2}), {L, L, H, L}, kClose},
        {8, to_keys({9, 5, 0, 2}), {H, H, H, H}, kOpen},
        {9, to_keys({3, 8, 7, 9, 0}), {H, H, L, L}, kClose},
        {10, to_keys({1, 9, 5, 3, 5}), {L, L, H, L}, kClose},
        {11, to_keys({9, 5, 0, 1, 2}), {H, H, H, H}, kOpen},
        {12, to_keys({2, 1, 9, 5, 6}), {H, H, H, L}, kClose},
        {13, to_keys({9, 5, 0, 6, 2}), {H, H, H, H}, kOpen},
        {14, to_keys({1, 9, 0, 5, 3}), {H, H, L, L}, kClose},
        {15, to_keys({1, 9, 5, 3, 4}), {H, H, H, L}, kClose},
        {16, to_keys({8, 6, 1, 0, 9, 3}), {L, L, L, L}, kClose},
        {17, to_keys({1, 2, 9, 6, 5, 3}), {H, H, H, L}, kClose},
        {18, to_keys({1, 4, 9, 2, 7, 3}), {H, L, L, L}, kClose},
        {19, to_keys({3, 7, 5, 1, 3, 6}), {L, L, L, L}, kClose},
        {20, to_keys({0, 9, 1, 5, 2, 3}), {L, L, L, L}, kClose},
    };
}

std::string levels(const LatchLevels& q) {
    std::string s;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) s += ' ';
        s += level_label(q[i]);
    }
    return s;
}

}  // namespace

std::span<const PublishedRow> published_table1() {
    static const std::vector<PublishedRow> table = build_table();
    return table;
}

bool Table1Row::q_row_match() const noexcept {
    for (bool m : q_match)
        if (!m) return false;
    return true;
}

bool Table1Report::outputs_reproduced() const noexcept {
    return solenoid_matches == rows.size() && indicator_matches == rows.size();
}

std::vector<const Table1Row*> Table1Report::discrepancies() const {
    std::vector<const Table1Row*> out;
    for (const auto& r : rows)
        if (!r.q_row_match()) out.push_back(&r);
    return out;
}

Table1Report reproduce_table1(const LockConfig& cfg) {
    validate_config(cfg);
    if (cfg.code_length() != kTable1Latches)
        throw Error(ErrorCode::InvalidArgument, "the bench table has four latch columns; code length is " +
                                                    std::to_string(cfg.code_length()));

    Table1Report report;
    for (const PublishedRow& pub : published_table1()) {
        std::vector<KeyEvent> events;
        for (std::size_t i = 0; i < pub.sequence.size(); ++i)
            events.push_back({Millis(static_cast<Millis::rep>(i)), pub.sequence[i]});
        const Millis t_end = events.empty() ? Millis(0) : events.back().t;
        const SimTrace trace = run_scenario(cfg, events, t_end);

        Table1Row row;
        row.published = &pub;
        const auto& final_state = trace.back();
        for (std::size_t i = 0; i < kTable1Latches; ++i) {
            row.simulated_q[i] = final_state.latches[i];
            row.q_match[i] = row.simulated_q[i] == pub.q[i];
        }
        row.simulated_outputs = final_state.outputs;
        row.solenoid_match = row.simulated_outputs.solenoid == pub.outputs.solenoid;
        row.green_match = row.simulated_outputs.green == pub.outputs.green;
        row.red_match = row.simulated_outputs.red == pub.outputs.red;

        report.solenoid_matches += row.solenoid_match;
        report.indicator_matches += row.indicators_match();
        report.q_row_matches += row.q_row_match();
        report.rows.push_back(row);
    }
    return report;
}

void write_table1_text(std::ostream& os, const Table1Report& report, Volts v_high, Volts v_low) {
    std::ostringstream levels_note;
    levels_note << "HIGH = " << v_high.value << " V, LOW = " << v_low.value << " V";

    os << "Bench-test replay (" << levels_note.str() << ")\n\n";
    os << std::left << std::setw(4) << "#" << std::setw(14) << "keys" << std::setw(22) << "Q0..Q3 simulated"
       << std::setw(22) << "Q0..Q3 recorded" << std::setw(10) << "solenoid" << std::setw(7) << "green"
       << std::setw(5) << "red" << "match\n";
    for (const auto& r : report.rows) {
        const auto& pub = *r.published;
        std::string match;
        if (r.q_row_match() && r.solenoid_match && r.indicators_match()) match = "full";
        else if (r.solenoid_match && r.indicators_match()) match = "outputs";
        else match = "MISMATCH";
        os << std::setw(4) << pub.number << std::setw(14) << format_key_list(pub.sequence) << std::setw(22)
           << levels(r.simulated_q) << std::setw(22) << levels(pub.q) << std::setw(10)
           << to_string(r.simulated_outputs.solenoid) << std::setw(7) << to_string(r.simulated_outputs.green)
           << std::setw(5) << to_string(r.simulated_outputs.red) << match << '\n';
    }

    const std::size_t n = report.rows.size();
    os << "\nsolenoid: " << report.solenoid_matches << '/' << n << " match\n";
    os << "indicators: " << report.indicator_matches << '/' << n << " match\n";
    os << "latch columns: " << report.q_row_matches << '/' << n << " rows match\n";

    const auto disc = report.discrepancies();
    os << "\nlatch-column discrepancies (" << disc.size() << "):\n";
    for (const Table1Row* r : disc) {
        os << "  row " << r->published->number << " (" << format_key_list(r->published->sequence)
           << "): recorded " << levels(r->published->q) << " | simulated " << levels(r->simulated_q) << "  [";
        bool first = true;
        for (std::size_t i = 0; i < kTable1Latches; ++i) {
            if (r->q_match[i]) continue;
            os << (first ? "" : ",") << 'Q' << i;
            first = false;
        }
        os << "]\n";
    }
    for (const auto& r : report.rows) {
        if (r.solenoid_match && r.indicators_match()) continue;
        os << "  OUTPUT MISMATCH row " << r.published->number << ": recorded "
           << to_string(r.published->outputs.solenoid) << ", simulated " << to_string(r.simulated_outputs.solenoid)
           << '\n';
    }
}

void write_table1_csv(std::ostream& os, const Table1Report& report) {
    os << "row,keys,sim_q0,sim_q1,sim_q2,sim_q3,pub_q0,pub_q1,pub_q2,pub_q3,sim_solenoid,pub_solenoid,"
          "sim_green,pub_green,sim_red,pub_red,q_match,outputs_match\n";
    for (const auto& r : report.rows) {
        const auto& pub = *r.published;
        os << pub.number << ",\"" << format_key_list(pub.sequence) << '"';
        for (bool q : r.simulated_q) os << ',' << level_label(q);
        for (bool q : pub.q) os << ',' << level_label(q);
        os << ',' << to_string(r.simulated_outputs.solenoid) << ',' << to_string(pub.outputs.solenoid) << ','
           << to_string(r.simulated_outputs.green) << ',' << to_string(pub.outputs.green) << ','
           << to_string(r.simulated_outputs.red) << ',' << to_string(pub.outputs.red) << ','
           << (r.q_row_match() ? "yes" : "no") << ',' << (r.solenoid_match && r.indicators_match() ? "yes" : "no")
           << '\n';
    }
}

}  // namespace comblock
