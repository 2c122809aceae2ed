#pragma once

#include <chrotop/complex.hpp>
#include <chrotop/models.hpp>
#include <chrotop/tasks.hpp>
#include <chrotop/views.hpp>

#include <map>
#include <vector>

namespace chrotop {

/// Executions of the model truncated at `depth`: every input facet crossed
/// with every allowed prefix, facet-major, prefixes in canonical order.
auto enumerate_executions(const ModelSpec & m, const Complex & inputs, int depth) -> std::vector<ExecutionViews>;
auto enumerate_executions_serial(const ModelSpec & m, const Complex & inputs, int depth)
    -> std::vector<ExecutionViews>;

/// The time-T protocol complex. A vertex is a process's depth-T view, which
/// names the radius 2^{-T} ball of view sequences extending it; a simplex is
/// a set of views occurring together in one execution.
struct TimeTComplex {
    int T = 0;
    std::string model;
    Complex complex;
    std::vector<ExecutionViews> executions;

    /// Input vertices each view has heard of.
    std::map<Vertex, Simplex> carriers;

    /// Xi_T(s): the simplexes whose views have heard only of inputs in s.
    CarrierMapData xi;

    auto carrier_of(const Simplex & s) const -> Simplex;
};

auto build_time_T(const ModelSpec & m, const Task & t, int T) -> TimeTComplex;

/// f_{S,T}: each depth-T view to its own depth-S ancestor. BadIndices unless
/// PS.T <= PT.T; UnknownVertex if an ancestor is missing from PS.
auto connecting_map_fST(const TimeTComplex & PT, const TimeTComplex & PS) -> SimplicialMapData;

struct DecisionMapReport {
    SimplicialReport simplicial;
    CarriedReport carried;

    auto ok() const -> bool { return simplicial.ok() && carried.carried; }
};

/// Chromatic, simplicial into O, and delta . Xi_T carried by Delta.
auto check_decision_map(const TimeTComplex & PT, const Task & t, const SimplicialMapData & delta)
    -> DecisionMapReport;

}
