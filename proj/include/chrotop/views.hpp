#pragma once

#include <chrotop/complex.hpp>
#include <chrotop/metric.hpp>
#include <chrotop/schedule.hpp>

#include <vector>

namespace chrotop {

/// Full-information views of one execution: input facet plus schedule word.
///
/// history[i][t] is the view of the i-th process of the facet after t rounds:
/// the input vertex for t = 0, then (p, encode_carrier of the views p read).
/// For the full IIS model these are exactly the vertices of Chr^t(I).
struct ExecutionViews {
    std::size_t input_facet = 0;
    Simplex inputs;
    Word word;
    std::vector<std::vector<Vertex>> history;

    auto depth() const -> int { return static_cast<int>(word.size()); }
    auto process_count() const -> std::size_t { return inputs.size(); }

    /// Views of all processes after t rounds, as a simplex.
    auto configuration(int t) const -> Simplex;
    auto sequence(std::size_t index) const -> ViewSequence;
};

/// Schedules must partition the colors of `inputs`.
auto compute_views(const Simplex & inputs, const Word & word, std::size_t input_facet = 0) -> ExecutionViews;

}
