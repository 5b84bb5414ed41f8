#include <catch_amalgamated.hpp>

#include "property_checks.hpp"

using namespace proptest;

namespace {

void require_holds(const PropertyResult& r) {
    INFO(r.counterexample);
    CHECK(r.ok);
    CHECK(r.cases == kDefaultCases);
}

}  // namespace

TEST_CASE("prefix property after every press", "[property][lock]") { require_holds(prefix_invariant()); }
TEST_CASE("dummy keys never matter", "[property][lock]") { require_holds(dummy_insertion_invariance()); }
TEST_CASE("reset is idempotent", "[property][lock]") { require_holds(reset_idempotence()); }
TEST_CASE("repeated code key is a no-op", "[property][lock]") { require_holds(duplicate_noop()); }
TEST_CASE("automaton agrees with the reference lock", "[property][lock][oracle]") {
    require_holds(oracle_agreement());
}

TEST_CASE("timed and time-free runs agree inside the window", "[property][sim]") {
    require_holds(scenario_sequence_equivalence());
}
TEST_CASE("shifting all events shifts the trace", "[property][sim]") { require_holds(time_shift_invariance()); }
TEST_CASE("traces are ordered and indicators complementary", "[property][sim]") {
    require_holds(trace_well_formed());
}
TEST_CASE("unlock is followed by exactly one relock", "[property][sim]") { require_holds(auto_relock()); }

TEST_CASE("discharge composes over time", "[property][analog]") { require_holds(discharge_semigroup()); }
TEST_CASE("threshold time inverts the discharge", "[property][analog]") { require_holds(threshold_round_trip()); }
TEST_CASE("emitter current is base plus collector", "[property][analog]") { require_holds(kcl_exact()); }

TEST_CASE("checks are reproducible for a given seed", "[property]") {
    const auto a = time_shift_invariance(200, 42);
    const auto b = time_shift_invariance(200, 42);
    CHECK(a.ok == b.ok);
    CHECK(a.cases == b.cases);
}
