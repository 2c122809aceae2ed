#pragma once

#include <chrotop/complex.hpp>
#include <chrotop/models.hpp>
#include <chrotop/rational.hpp>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace chrotop {

/// Views of one process after steps 0, 1, ..., t (entry t is the view after
/// step t; entry 0 is the input vertex).
struct ViewSequence {
    ProcessId process = 0;
    std::vector<Vertex> views;
};

/// A distance that may be undetermined because both operands agree on
/// everything they show; `undetermined_from` is the first index a deeper
/// truncation would have to supply.
struct Distance {
    bool determined = true;
    Rational value = 0;
    int undetermined_from = 0;

    static auto exact(Rational r) -> Distance { return Distance{true, std::move(r), 0}; }
    static auto undetermined(int from) -> Distance { return Distance{false, Rational(0), from}; }
};

/// Index of the first differing entry, or nullopt if one is a prefix of the
/// other.
auto first_difference(const ViewSequence & a, const ViewSequence & b) -> std::optional<int>;

/// 2^{-T} with T the first differing index; 2 for different processes.
/// Equal sequences are at distance 0 only when `complete` says the
/// truncations are the whole sequences.
auto view_distance(const ViewSequence & a, const ViewSequence & b, bool complete = false) -> Distance;

/// 2^{-K}, K the first round where the words differ. Finite words follow the
/// same completeness rule as view_distance.
auto exec_distance(const Word & a, const Word & b, bool complete = false) -> Distance;
auto exec_distance(const ExecutionWord & a, const ExecutionWord & b) -> Rational;

enum class BallRelation { Disjoint, FirstInSecond, SecondInFirst, Violation };

template <typename Point>
struct Ball {
    Point center;
    Rational radius;
};

/// Classifies two open balls by membership over a finite universe. Equal
/// balls report FirstInSecond. Violation means none of the three cases holds,
/// which an ultrametric never produces.
template <typename Point>
auto ball_trichotomy(const Ball<Point> & b1, const Ball<Point> & b2, std::span<const Point> universe,
    const std::function<Rational(const Point &, const Point &)> & d) -> BallRelation
{
    bool meet = false, first_in_second = true, second_in_first = true;
    for (auto & x : universe) {
        bool in1 = d(b1.center, x) < b1.radius;
        bool in2 = d(b2.center, x) < b2.radius;
        meet = meet || (in1 && in2);
        if (in1 && ! in2)
            first_in_second = false;
        if (in2 && ! in1)
            second_in_first = false;
    }
    if (! meet)
        return BallRelation::Disjoint;
    if (first_in_second)
        return BallRelation::FirstInSecond;
    if (second_in_first)
        return BallRelation::SecondInFirst;
    return BallRelation::Violation;
}

struct ProductDistance {
    Rational value;
    Rational tail_bound;
};

/// sum_{i>=1} 2^{-i} d_i/(1+d_i) over the given component distances, with the
/// bound 2^{-len} on the omitted tail.
auto product_distance(std::span<const Rational> component_distances) -> ProductDistance;

/// Distance in a disjoint union: the part metric inside a part, 2 across.
auto disjoint_union_distance(int part_a, int part_b, const Rational & within) -> Rational;

}
