#pragma once

#include <chrotop/models.hpp>
#include <chrotop/rational.hpp>
#include <chrotop/tasks.hpp>
#include <chrotop/terminating.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chrotop {

/// Interval of the two-process input edge, in the coordinate x = weight on
/// process 1's input (process 0 sits at 0, process 1 at 1).
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_open = false;
    bool hi_open = false;

    auto contains(const Rational & x) const -> bool;
};

struct LimitPoint {
    ExecutionWord word;
    Rational x;
    /// Another execution of the model converging to the same point, if any.
    std::optional<ExecutionWord> twin;
};

/// Points of the input edge reached by executions of a two-process model,
/// computed at a depth past the model's saturation depth: the union of the
/// allowed depth-D cells minus the limit points of excluded executions that
/// no other execution reaches.
struct RealizedSet {
    int depth = 0;
    std::size_t cells = 0;
    std::vector<Interval> components;
    std::vector<LimitPoint> limits;
};

auto realized_set(const ModelSpec & m, int depth) -> RealizedSet;

/// Limit of stem . cycle^omega on the input edge.
auto limit_point(const ExecutionWord & w) -> Rational;

/// Interval of the depth-|w| cell reached by the finite word w.
auto cell_interval(const Word & w) -> Interval;

/// Impossibility certificate for two-process consensus: one connected
/// component of the realized set contains both solo limits, whose outputs
/// Delta pins to different values, so no continuous decision map exists.
struct ConsensusCertificate {
    std::string model;
    RealizedSet realized;
    std::size_t component = 0;
    std::vector<std::string> forced;
};

/// Unsupported unless the model has two processes.
auto certify_consensus_impossible(const ModelSpec & m, int depth) -> std::optional<ConsensusCertificate>;

enum class Check { Pass, Pending, Fail };

auto to_string(Check c) -> std::string;

struct DiscontinuityWitness {
    Interval gap;
    Simplex left_cell;
    Simplex right_cell;
    std::string left_value;
    std::string right_value;
    std::optional<ExecutionWord> excluded;
};

struct GactReport {
    Check admissible = Check::Pass;
    std::vector<Word> uncovered;

    Check carried = Check::Pass;
    SimplicialReport simplicial;
    CarriedReport carrier;

    Check continuous = Check::Pass;
    std::size_t unsettled_vertices = 0;
    std::vector<std::string> notes;
    std::optional<DiscontinuityWitness> discontinuity;

    auto passed() const -> bool
    {
        return admissible == Check::Pass && carried == Check::Pass && continuous == Check::Pass;
    }
};

/// Conditions of the fixed-point characterization at a finite depth:
/// (a) every allowed depth-`depth` cell lies inside a stable simplex, Pending
/// when only cells on excluded paths are uncovered; (b) delta carries stable
/// simplexes into Delta of their geometric support; (c) the ball rule is
/// unanimous around every stable vertex whose reachable star has settled,
/// and (two processes) no realized gap joins stable cells with outputs in
/// different components of O.
auto verify_gact_certificate(const TerminatingSubdivision & t, const SimplicialMapData & delta, const ModelSpec & m,
    const Task & task, int depth) -> GactReport;

/// Maps each connected component of Sigma_depth to the input value of the
/// solo vertex it contains (the smallest output value if none), for every
/// process color.
auto consensus_component_map(const TerminatingSubdivision & t, int depth) -> SimplicialMapData;

struct SpernerReport {
    int n = 0;
    int k = 0;
    std::size_t vertices = 0;
    std::size_t facets = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::size_t colorings = 0;
    std::size_t min_rainbow = 0;
    std::size_t max_rainbow = 0;
    std::size_t even_colorings = 0;

    auto all_odd() const -> bool { return even_colorings == 0; }
};

/// Rainbow facet counts of Chr^k of the (n-1)-simplex over colorings that
/// give each vertex a value of its geometric support. Exhaustive when the
/// coloring space has at most `exhaustive_limit` elements, otherwise
/// `samples` seeded draws. Unsupported beyond n = 3, k = 2.
auto sperner_evidence(int n, int k, std::uint64_t seed = 1, std::size_t samples = 20000,
    std::size_t exhaustive_limit = 1u << 22) -> SpernerReport;
auto sperner_evidence_serial(int n, int k, std::uint64_t seed = 1, std::size_t samples = 20000,
    std::size_t exhaustive_limit = 1u << 22) -> SpernerReport;

}
