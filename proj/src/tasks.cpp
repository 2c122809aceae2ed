#include <chrotop/error.hpp>
#include <chrotop/tasks.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace chrotop {

namespace {

auto input_facet(int n) -> Simplex
{
    Simplex s;
    for (int i = 0; i < n; ++i)
        s.push_back(Vertex{i, std::to_string(i)});
    return s;
}

// Every chromatic assignment of values from `values` to `colors` accepted by
// `keep`, as simplexes.
auto assignments(const std::vector<ProcessId> & colors, const std::vector<std::string> & values,
    const std::function<bool(const std::set<std::string> &)> & keep) -> std::vector<Simplex>
{
    std::vector<Simplex> out;
    Simplex current;
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
        if (i == colors.size()) {
            std::set<std::string> used;
            for (auto & v : current)
                used.insert(v.label);
            if (keep(used))
                out.push_back(current);
            return;
        }
        for (auto & value : values) {
            current.push_back(Vertex{colors[i], value});
            extend(i + 1);
            current.pop_back();
        }
    };
    extend(0);
    return out;
}

auto build(const std::string & name, int n, const std::function<bool(const std::set<std::string> &, std::size_t)> & rule)
    -> Task
{
    if (n < 2)
        throw Error(ErrorCode::BadArity, name + " needs at least 2 processes");
    auto sigma = input_facet(n);

    std::vector<std::string> all_values;
    for (int i = 0; i < n; ++i)
        all_values.push_back(std::to_string(i));
    std::vector<ProcessId> all_colors(sigma.size());
    for (int i = 0; i < n; ++i)
        all_colors[static_cast<std::size_t>(i)] = i;

    Task t;
    t.name = name;
    t.inputs = Complex::from_facets(n, {sigma});
    t.outputs = Complex::from_facets(n, assignments(all_colors, all_values, [&](const std::set<std::string> & used) {
        return rule(used, static_cast<std::size_t>(n));
    }));

    for (auto & face : t.inputs.faces()) {
        std::vector<std::string> values;
        for (auto & v : face)
            values.push_back(v.label);
        auto images = assignments(colors_of(face), values, [&](const std::set<std::string> & used) {
            return rule(used, static_cast<std::size_t>(n));
        });
        t.delta.set(face, Complex::from_facets(n, std::move(images)));
    }
    return t;
}

}

auto inputless_consensus(int n) -> Task
{
    return build("consensus", n, [](const std::set<std::string> & used, std::size_t) { return used.size() == 1; });
}

auto set_agreement(int n) -> Task
{
    return build("set-agreement", n, [](const std::set<std::string> & used, std::size_t count) {
        return used.size() <= count - 1;
    });
}

auto validate_task(const Task & t) -> TaskReport
{
    TaskReport report;
    if (! t.inputs.is_pure() || ! t.inputs.is_chromatic() || t.inputs.dimension() != t.process_count() - 1) {
        report.valid = false;
        report.problem = "input complex must be pure chromatic of dimension n-1";
        return report;
    }
    if (! t.outputs.is_pure() || ! t.outputs.is_chromatic()) {
        report.valid = false;
        report.problem = "output complex must be pure chromatic";
        return report;
    }
    try {
        report.carrier = check_carrier_map(t.delta, t.inputs, t.outputs);
    }
    catch (const Error & e) {
        report.valid = false;
        report.problem = e.what();
        return report;
    }
    if (! report.carrier.monotone) {
        report.valid = false;
        report.problem = "delta is not monotone";
    }
    else if (! report.carrier.chromatic) {
        report.valid = false;
        report.problem = "delta is not chromatic";
    }
    return report;
}

}
