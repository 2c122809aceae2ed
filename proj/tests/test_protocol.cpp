#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <chrotop/error.hpp>
#include <chrotop/protocol.hpp>
#include <chrotop/subdivision.hpp>

#include <random>

using namespace chrotop;

namespace {

// Decides its input at round 1 and flips to the other value at round 2.
class FlipFlop : public DecisionProtocol {
public:
    auto name() const -> std::string override { return "flip"; }
    auto decide(ProcessId, std::span<const Vertex> history) const -> std::optional<std::string> override
    {
        if (history.size() == 2)
            return history.front().label;
        if (history.size() == 3)
            return history.front().label == "0" ? "1" : "0";
        return std::nullopt;
    }
};

auto same_outcomes(const RunResult & a, const RunResult & b) -> bool
{
    if (a.prefixes.size() != b.prefixes.size())
        return false;
    for (std::size_t i = 0; i < a.prefixes.size(); ++i) {
        auto & x = a.prefixes[i];
        auto & y = b.prefixes[i];
        if (x.word != y.word || x.processes.size() != y.processes.size())
            return false;
        for (std::size_t j = 0; j < x.processes.size(); ++j)
            if (x.processes[j].value != y.processes[j].value || x.processes[j].round != y.processes[j].round)
                return false;
    }
    return true;
}

}

TEST_CASE("winner solves consensus on M1")
{
    auto r = check_solves(*winner_protocol(), inputless_consensus(2), m1_model(), 2);
    CHECK(r.status == SolveStatus::Pass);
    CHECK(r.run.prefixes.size() == 6);
    CHECK(r.run.latest_round() == 1);
}

TEST_CASE("winner is not enough on full IIS")
{
    auto r = check_solves(*winner_protocol(), inputless_consensus(2), iis_model(2), 2);
    REQUIRE(r.status == SolveStatus::Fail);
    CHECK(r.run.prefixes[*r.witness].word.front() == parse_schedule("<->", 2));
}

TEST_CASE("own-input disagrees on the synchronous round")
{
    auto r = check_solves(*own_input_protocol(), inputless_consensus(2), iis_model(2), 1);
    REQUIRE(r.status == SolveStatus::Fail);
    CHECK(to_display(r.run.prefixes[*r.witness].word) == "<->");
    CHECK(r.witness_decisions == make_simplex({Vertex{0, "0"}, Vertex{1, "1"}}));
}

TEST_CASE("constant 0 violates validity for a solo process 1")
{
    auto r = check_solves(*constant_protocol("0"), inputless_consensus(2), iis_model(2), 1);
    REQUIRE(r.status == SolveStatus::Fail);
    CHECK(r.witness_decisions == Simplex{Vertex{1, "0"}});
    CHECK(r.witness_carrier == Simplex{Vertex{1, "1"}});
}

TEST_CASE("never decides nothing; unknown outputs are rejected")
{
    auto r = check_solves(*never_protocol(), inputless_consensus(2), iis_model(2), 2);
    CHECK(r.status == SolveStatus::Undecided);
    CHECK(r.undecided.size() == 9);
    CHECK_THROWS_AS(check_solves(*constant_protocol("7"), inputless_consensus(2), iis_model(2), 1), Error);
}

TEST_CASE("builtin protocol names")
{
    CHECK(builtin_protocol("constant:1")->name() == "constant:1");
    CHECK(builtin_protocol("winner")->name() == "winner");
    CHECK(builtin_protocol("own-input")->name() == "own-input");
    CHECK(builtin_protocol("never")->name() == "never");
    CHECK_THROWS_AS(builtin_protocol("oracle"), Error);
}

TEST_CASE("changing a decision is an irrevocability violation")
{
    FlipFlop p;
    try {
        run(p, iis_model(2), inputless_consensus(2).inputs, 2);
        FAIL("expected a violation");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::IrrevocabilityViolation);
        CHECK(std::string(e.what()).find("<->,<->") != std::string::npos);
    }
    CHECK_NOTHROW(run(p, iis_model(2), inputless_consensus(2).inputs, 1));
}

TEST_CASE("parallel run equals the serial reference")
{
    auto t = set_agreement(3);
    for (auto & p : {own_input_protocol(), constant_protocol("2"), winner_protocol()}) {
        auto a = run(*p, iis_model(3), t.inputs, 2);
        auto b = run_serial(*p, iis_model(3), t.inputs, 2);
        CHECK(same_outcomes(a, b));
    }
}

TEST_CASE("tables decide at the first listed view")
{
    auto t = inputless_consensus(2);
    auto ev = compute_views(t.inputs.facets()[0], parse_word("->,<-", 2));
    TableProtocol table({{ev.history[0][1], "0"}, {ev.history[0][2], "1"}});
    CHECK(table.decide(0, std::span<const Vertex>(ev.history[0]).first(1)) == std::nullopt);
    CHECK(table.decide(0, ev.history[0]) == "0");
}

TEST_CASE("per-view tables are taken literally")
{
    auto t = inputless_consensus(2);
    auto ev = compute_views(t.inputs.facets()[0], parse_word("->,<-", 2));
    TableProtocol table({{ev.history[0][1], "0"}}, "literal", TableMode::PerView);
    CHECK(table.decide(0, std::span<const Vertex>(ev.history[0]).first(2)) == "0");
    CHECK(table.decide(0, ev.history[0]) == std::nullopt);
    CHECK_THROWS_AS(run(table, iis_model(2), t.inputs, 2), Error);
}

TEST_CASE("extract_map needs a bounded protocol")
{
    CHECK_THROWS_AS(extract_map(*never_protocol(), iis_model(2), inputless_consensus(2), 2), Error);
    auto x = extract_map(*winner_protocol(), m1_model(), inputless_consensus(2), 1);
    CHECK(x.report.ok());
    CHECK(x.locality_violations == 0);
    CHECK(x.map.size() == 4);
}

TEST_CASE("synthesize then extract is the identity on random bounded tables")
{
    auto m = iis_model(2);
    auto t = inputless_consensus(2);
    const int T = 3;
    TerminatingSubdivision sub(t.inputs, terminate_all_at(T));
    sub.materialize(T);

    std::mt19937_64 rng(20240601);
    std::size_t mismatches = 0, violations = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto table = fixtures::random_table(m, t, T, rng);
        auto delta = extract_map(*table, m, t, T);
        violations += delta.locality_violations;
        auto p = synthesize_from_map(delta.map, sub, T);
        auto back = extract_map(*p, m, t, T);
        violations += back.locality_violations;
        mismatches += back.map != delta.map;
    }
    CHECK(violations == 0);
    CHECK(mismatches == 0);
}

TEST_CASE("time-map synthesis lists exactly the unanimous views")
{
    auto t = inputless_consensus(2);
    auto PT = build_time_T(m1_model(), t, 1);
    SimplicialMapData delta;
    for (auto & v : PT.complex.vertices())
        delta[v] = Vertex{v.color, base_carrier(v).size() == 1 ? base_carrier(v)[0].label : "x"};
    auto table = synthesize_from_time_map(delta, PT);
    // Depth-1 views are listed with their own image; inputs see both values.
    CHECK(table->entries().size() == PT.complex.vertices().size());
    for (auto & v : PT.complex.vertices())
        CHECK(table->entries().at(v) == delta.at(v).label);
    CHECK_FALSE(table->entries().contains(Vertex{0, "0"}));
    SimplicialMapData partial;
    CHECK_THROWS_AS(synthesize_from_time_map(partial, PT), Error);
}

TEST_CASE("constant protocols decide at round 0")
{
    auto r = run(*constant_protocol("1"), m1_model(), inputless_consensus(2).inputs, 2);
    CHECK(r.latest_round() == 0);
    CHECK(r.undecided_count() == 0);
}
