#include <catch_amalgamated.hpp>

#include "comblock/table1.hpp"
#include "reference_lock.hpp"

#include <set>
#include <sstream>

using namespace comblock;

namespace {

std::vector<int> digits(const std::vector<KeyId>& keys) {
    std::vector<int> d;
    for (KeyId k : keys) d.push_back(k.label());
    return d;
}

}  // namespace

TEST_CASE("recorded table has twenty rows of 4, 5 and 6 presses", "[table1][data]") {
    const auto table = published_table1();
    REQUIRE(table.size() == 20);
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(table[i].number == static_cast<int>(i + 1));
        const std::size_t expected_len = i < 8 ? 4 : (i < 15 ? 5 : 6);
        CHECK(table[i].sequence.size() == expected_len);
    }
    CHECK(digits(table[7].sequence) == std::vector<int>{9, 5, 0, 2});
    CHECK(table[7].outputs.solenoid == Solenoid::Open);
}

TEST_CASE("default lock reproduces the output columns", "[table1]") {
    const auto report = reproduce_table1(LockConfig{});
    REQUIRE(report.rows.size() == 20);
    CHECK(report.solenoid_matches == 20);
    CHECK(report.indicator_matches == 20);
    CHECK(report.outputs_reproduced());

    const std::set<int> open_rows{8, 11, 13};
    for (const auto& r : report.rows) {
        const bool open = open_rows.count(r.published->number) != 0;
        CHECK((r.simulated_outputs.solenoid == Solenoid::Open) == open);
        CHECK((r.simulated_outputs.green == Indicator::On) == open);
        CHECK((r.simulated_outputs.red == Indicator::On) == !open);
    }
}

TEST_CASE("latch columns agree with the independent oracle on every row", "[table1][oracle]") {
    const auto report = reproduce_table1(LockConfig{});
    for (const auto& r : report.rows) {
        reftest::ReferenceLock ref;
        for (int k : digits(r.published->sequence)) ref.press(k);
        const auto expected = ref.levels();
        for (std::size_t i = 0; i < kTable1Latches; ++i) CHECK(r.simulated_q[i] == expected[i]);
    }
}

TEST_CASE("latch-column matches and discrepancies", "[table1]") {
    const auto report = reproduce_table1(LockConfig{});
    for (int n : {5, 6, 8, 11, 13, 16, 19, 20}) {
        INFO("row " << n);
        CHECK(report.rows[static_cast<std::size_t>(n - 1)].q_row_match());
    }

    SECTION("row 12 keeps Q2 low where the recording shows it high") {
        const auto& row = report.rows[11];
        CHECK(row.simulated_q == LatchLevels{true, true, false, false});
        CHECK(row.published->q == LatchLevels{true, true, true, false});
        CHECK_FALSE(row.q_match[2]);
        CHECK(row.solenoid_match);
    }
    SECTION("every mismatching row is listed") {
        const auto disc = report.discrepancies();
        CHECK_FALSE(disc.empty());
        CHECK(disc.size() + report.q_row_matches == 20);
        std::ostringstream os;
        write_table1_text(os, report, Volts(11.3), Volts(0.7));
        const std::string text = os.str();
        CHECK(text.find("solenoid: 20/20 match") != std::string::npos);
        CHECK(text.find("HIGH = 11.3 V, LOW = 0.7 V") != std::string::npos);
        for (const Table1Row* r : disc)
            CHECK(text.find("row " + std::to_string(r->published->number) + " (") != std::string::npos);
    }
}

TEST_CASE("a different code cannot reproduce the table", "[table1]") {
    LockConfig cfg;
    cfg.code = to_keys({9, 5, 0, 3});
    cfg.reset_keys = KeySet{4, 7, 8};
    const auto report = reproduce_table1(cfg);
    CHECK_FALSE(report.outputs_reproduced());
    CHECK(report.solenoid_matches < 20);
}

TEST_CASE("table replay needs four latches", "[table1][errors]") {
    LockConfig cfg;
    cfg.code = to_keys({9, 5, 0});
    CHECK_THROWS_AS(reproduce_table1(cfg), Error);
}

TEST_CASE("table CSV has one line per row", "[table1][csv]") {
    std::ostringstream os;
    write_table1_csv(os, reproduce_table1(LockConfig{}));
    const std::string s = os.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 21);
    CHECK(s.find("8,\"9,5,0,2\",HIGH,HIGH,HIGH,HIGH,HIGH,HIGH,HIGH,HIGH,OPEN,OPEN,ON,ON,OFF,OFF,yes,yes") !=
          std::string::npos);
}
