#include <chrotop/error.hpp>
#include <chrotop/subdivision.hpp>
#include <chrotop/views.hpp>

#include <algorithm>

namespace chrotop {

auto ExecutionViews::configuration(int t) const -> Simplex
{
    Simplex out;
    for (auto & h : history)
        out.push_back(h.at(static_cast<std::size_t>(t)));
    return out;
}

auto ExecutionViews::sequence(std::size_t index) const -> ViewSequence
{
    return ViewSequence{inputs.at(index).color, history.at(index)};
}

auto compute_views(const Simplex & inputs, const Word & word, std::size_t input_facet) -> ExecutionViews
{
    ExecutionViews ev;
    ev.input_facet = input_facet;
    ev.inputs = inputs;
    ev.word = word;
    ev.history.resize(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i)
        ev.history[i].push_back(inputs[i]);

    auto colors = colors_of(inputs);
    for (auto & s : word) {
        if (s.processes() != colors)
            throw Error(ErrorCode::BadArity, "schedule " + to_string(s) + " does not match the input facet");
        Simplex previous;
        for (auto & h : ev.history)
            previous.push_back(h.back());
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            auto seen = s.view_of(inputs[i].color);
            Simplex carrier;
            for (auto & v : previous)
                if (std::binary_search(seen.begin(), seen.end(), v.color))
                    carrier.push_back(v);
            ev.history[i].push_back(Vertex{inputs[i].color, encode_carrier(carrier)});
        }
    }
    return ev;
}

}
