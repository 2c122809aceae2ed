#include <chrotop/error.hpp>
#include <chrotop/parallel.hpp>
#include <chrotop/subdivision.hpp>
#include <chrotop/time_complex.hpp>

#include <algorithm>
#include <exception>

namespace chrotop {

namespace {

void require_full_facets(const Complex & inputs)
{
    for (auto & f : inputs.facets())
        if (static_cast<int>(f.size()) != inputs.process_count())
            throw Error(ErrorCode::BadArity, "input facets must contain every process");
}

}

auto enumerate_executions_serial(const ModelSpec & m, const Complex & inputs, int depth)
    -> std::vector<ExecutionViews>
{
    require_full_facets(inputs);
    auto prefixes = enumerate_prefixes(m, depth);
    std::vector<ExecutionViews> out;
    out.reserve(inputs.facets().size() * prefixes.size());
    for (std::size_t f = 0; f < inputs.facets().size(); ++f)
        for (auto & w : prefixes)
            out.push_back(compute_views(inputs.facets()[f], w, f));
    return out;
}

auto enumerate_executions(const ModelSpec & m, const Complex & inputs, int depth) -> std::vector<ExecutionViews>
{
    require_full_facets(inputs);
    auto prefixes = enumerate_prefixes(m, depth);
    auto per_facet = prefixes.size();
    auto total = static_cast<long>(inputs.facets().size() * per_facet);
    std::vector<ExecutionViews> out(static_cast<std::size_t>(total));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
    for (long i = 0; i < total; ++i) {
        auto idx = static_cast<std::size_t>(i);
        try {
            auto f = idx / per_facet;
            out[idx] = compute_views(inputs.facets()[f], prefixes[idx % per_facet], f);
        }
        catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

auto TimeTComplex::carrier_of(const Simplex & s) const -> Simplex
{
    Simplex out;
    for (auto & v : s) {
        auto it = carriers.find(v);
        if (it == carriers.end())
            throw Error(ErrorCode::UnknownVertex, to_string(v) + " is not a vertex of P_" + std::to_string(T));
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto build_time_T(const ModelSpec & m, const Task & t, int T) -> TimeTComplex
{
    if (T < 0)
        throw Error(ErrorCode::BadIndices, "negative time bound");
    if (m.process_count() != t.process_count())
        throw Error(ErrorCode::BadArity, "model and task disagree on the number of processes");

    TimeTComplex pt;
    pt.T = T;
    pt.model = m.name();
    pt.executions = enumerate_executions(m, t.inputs, T);

    std::vector<Simplex> facets;
    facets.reserve(pt.executions.size());
    for (auto & e : pt.executions) {
        auto config = e.configuration(T);
        for (auto & v : config)
            if (! pt.carriers.contains(v))
                pt.carriers.emplace(v, base_carrier(v));
        facets.push_back(std::move(config));
    }
    pt.complex = Complex::from_facets(t.process_count(), std::move(facets));

    for (auto & sigma : t.inputs.faces()) {
        std::vector<Simplex> reached;
        for (auto & f : pt.complex.facets()) {
            Simplex face;
            for (auto & v : f)
                if (is_face_of(pt.carriers.at(v), sigma))
                    face.push_back(v);
            if (! face.empty())
                reached.push_back(std::move(face));
        }
        pt.xi.set(sigma, Complex::from_facets(t.process_count(), std::move(reached)));
    }
    return pt;
}

auto connecting_map_fST(const TimeTComplex & PT, const TimeTComplex & PS) -> SimplicialMapData
{
    if (PS.T > PT.T)
        throw Error(ErrorCode::BadIndices,
            "f_{S,T} needs S <= T, got S=" + std::to_string(PS.T) + " T=" + std::to_string(PT.T));
    SimplicialMapData f;
    for (auto & v : PT.complex.vertices()) {
        auto image = ancestor(v, PT.T - PS.T);
        if (! PS.complex.contains_vertex(image))
            throw Error(ErrorCode::UnknownVertex, to_string(image) + " is not a vertex of P_" + std::to_string(PS.T));
        f.emplace(v, std::move(image));
    }
    return f;
}

auto check_decision_map(const TimeTComplex & PT, const Task & t, const SimplicialMapData & delta)
    -> DecisionMapReport
{
    DecisionMapReport report;
    report.simplicial = check_simplicial_chromatic(delta, PT.complex, t.outputs);
    report.carried = carried_by(delta, PT.xi, t.delta, t.inputs);
    return report;
}

}
