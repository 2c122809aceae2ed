#include <chrotop/error.hpp>
#include <chrotop/metric.hpp>

#include <algorithm>
#include <numeric>

namespace chrotop {

auto first_difference(const ViewSequence & a, const ViewSequence & b) -> std::optional<int>
{
    auto common = std::min(a.views.size(), b.views.size());
    for (std::size_t i = 0; i < common; ++i)
        if (a.views[i] != b.views[i])
            return static_cast<int>(i);
    return std::nullopt;
}

auto view_distance(const ViewSequence & a, const ViewSequence & b, bool complete) -> Distance
{
    if (a.process != b.process)
        return Distance::exact(2);
    if (auto t = first_difference(a, b))
        return Distance::exact(inverse_power(2, *t));
    if (complete && a.views.size() == b.views.size())
        return Distance::exact(0);
    return Distance::undetermined(static_cast<int>(std::min(a.views.size(), b.views.size())));
}

auto exec_distance(const Word & a, const Word & b, bool complete) -> Distance
{
    auto common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i)
        if (a[i] != b[i])
            return Distance::exact(inverse_power(2, static_cast<int>(i)));
    if (complete && a.size() == b.size())
        return Distance::exact(0);
    return Distance::undetermined(static_cast<int>(common));
}

auto exec_distance(const ExecutionWord & a, const ExecutionWord & b) -> Rational
{
    if (a.cycle.empty() || b.cycle.empty())
        throw Error(ErrorCode::ParseError, "execution word needs a nonempty cycle");
    // Past both stems the pair is periodic with period lcm of the cycles.
    auto horizon = std::max(a.stem.size(), b.stem.size()) + std::lcm(a.cycle.size(), b.cycle.size());
    for (std::size_t i = 0; i < horizon; ++i)
        if (a.at(i) != b.at(i))
            return inverse_power(2, static_cast<int>(i));
    return 0;
}

auto product_distance(std::span<const Rational> component_distances) -> ProductDistance
{
    ProductDistance out{0, inverse_power(2, static_cast<int>(component_distances.size()))};
    for (std::size_t i = 0; i < component_distances.size(); ++i) {
        auto & d = component_distances[i];
        out.value += inverse_power(2, static_cast<int>(i) + 1) * d / (1 + d);
    }
    return out;
}

auto disjoint_union_distance(int part_a, int part_b, const Rational & within) -> Rational
{
    return part_a == part_b ? within : Rational(2);
}

}
