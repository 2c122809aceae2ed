#pragma once

#include <chrotop/tasks.hpp>
#include <chrotop/time_complex.hpp>

#include <cstddef>
#include <optional>

namespace chrotop {

enum class SearchStatus { Found, None, BudgetExhausted };

auto to_string(SearchStatus s) -> std::string;

struct SearchOptions {
    /// Node limit per independent subtree; exceeding it yields BudgetExhausted.
    std::size_t node_budget = 2'000'000;
    bool parallel = true;
};

struct SearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<SimplicialMapData> map;
    std::size_t nodes = 0;
};

/// Backtracking search for a chromatic simplicial delta_T: P_T -> O with
/// delta_T . Xi_T carried by Delta. Every face of every facet of P_T is a
/// table constraint whose allowed tuples are the simplexes of
/// Delta(carrier of the face); arc consistency runs after each assignment.
/// The returned map is the first in canonical order, whether or not the
/// search ran in parallel.
auto search_decision_map(const TimeTComplex & PT, const Task & t, SearchOptions options = {}) -> SearchResult;

/// Enumerates every chromatic vertex map without pruning. Only for tiny
/// instances; Unsupported beyond `max_assignments`.
auto brute_force_decision_map(const TimeTComplex & PT, const Task & t, std::size_t max_assignments = 1u << 20)
    -> std::optional<SimplicialMapData>;

}
