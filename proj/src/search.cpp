#include <chrotop/error.hpp>
#include <chrotop/parallel.hpp>
#include <chrotop/search.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

namespace chrotop {

auto to_string(SearchStatus s) -> std::string
{
    switch (s) {
    case SearchStatus::Found:
        return "found";
    case SearchStatus::None:
        return "none";
    case SearchStatus::BudgetExhausted:
        return "budget-exhausted";
    }
    return "?";
}

namespace {

using Mask = std::uint64_t;

struct Constraint {
    std::vector<std::size_t> scope;
    std::vector<std::vector<int>> tuples;
};

struct Problem {
    std::vector<Vertex> vars;
    std::map<ProcessId, std::vector<std::string>> values;
    std::vector<Mask> initial;
    std::vector<Constraint> constraints;
    std::vector<std::vector<std::size_t>> watching;
    std::vector<std::size_t> rank;
    bool infeasible = false;

    auto value_of(std::size_t var, int bit) const -> Vertex
    {
        return Vertex{vars[var].color, values.at(vars[var].color)[static_cast<std::size_t>(bit)]};
    }
};

auto build_problem(const TimeTComplex & PT, const Task & t) -> Problem
{
    Problem pr;
    pr.vars = PT.complex.vertices();
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < pr.vars.size(); ++i)
        index.emplace(pr.vars[i], i);

    for (auto & v : t.outputs.vertices())
        pr.values[v.color].push_back(v.label);
    for (auto & [color, labels] : pr.values)
        if (labels.size() > 64)
            throw Error(ErrorCode::Unsupported, "more than 64 output values for one process");

    pr.initial.assign(pr.vars.size(), 0);
    for (std::size_t i = 0; i < pr.vars.size(); ++i) {
        auto it = pr.values.find(pr.vars[i].color);
        if (it != pr.values.end())
            pr.initial[i] = it->second.size() == 64 ? ~Mask{0} : ((Mask{1} << it->second.size()) - 1);
    }

    std::set<Simplex> faces;
    for (auto & f : PT.complex.facets()) {
        auto count = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < count; ++i)
                if (mask & (std::size_t{1} << i))
                    face.push_back(f[i]);
            faces.insert(std::move(face));
        }
    }

    std::map<std::pair<Simplex, std::vector<ProcessId>>, std::vector<std::vector<int>>> tuple_cache;
    pr.watching.resize(pr.vars.size());
    for (auto & face : faces) {
        auto carrier = PT.carrier_of(face);
        auto colors = colors_of(face);
        auto key = std::make_pair(carrier, colors);
        auto cached = tuple_cache.find(key);
        if (cached == tuple_cache.end()) {
            std::set<std::vector<int>> tuples;
            auto allowed = t.delta.image(carrier);
            for (auto & g : allowed.facets()) {
                std::vector<int> tuple;
                for (auto c : colors) {
                    auto v = vertex_with_color(g, c);
                    if (! v)
                        break;
                    auto & labels = pr.values[c];
                    auto pos = std::find(labels.begin(), labels.end(), v->label);
                    if (pos == labels.end())
                        break;
                    tuple.push_back(static_cast<int>(pos - labels.begin()));
                }
                if (tuple.size() == colors.size())
                    tuples.insert(std::move(tuple));
            }
            cached = tuple_cache.emplace(key, std::vector<std::vector<int>>(tuples.begin(), tuples.end())).first;
        }

        Constraint c;
        for (auto & v : face)
            c.scope.push_back(index.at(v));
        c.tuples = cached->second;
        if (c.scope.size() == 1) {
            Mask allowed = 0;
            for (auto & tuple : c.tuples)
                allowed |= Mask{1} << tuple[0];
            pr.initial[c.scope[0]] &= allowed;
            continue;
        }
        for (auto var : c.scope)
            pr.watching[var].push_back(pr.constraints.size());
        pr.constraints.push_back(std::move(c));
    }

    for (auto m : pr.initial)
        if (m == 0)
            pr.infeasible = true;

    // Views that have heard of fewer inputs are the most constrained: solo
    // views are pinned by Delta on single vertices.
    std::vector<std::size_t> order(pr.vars.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return PT.carriers.at(pr.vars[a]).size() < PT.carriers.at(pr.vars[b]).size();
    });
    pr.rank.resize(order.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        pr.rank[order[r]] = r;
    return pr;
}

auto propagate(const Problem & pr, std::vector<Mask> & dom, std::deque<std::size_t> queue) -> bool
{
    std::vector<char> queued(pr.constraints.size(), 0);
    for (auto c : queue)
        queued[c] = 1;
    while (! queue.empty()) {
        auto ci = queue.front();
        queue.pop_front();
        queued[ci] = 0;
        auto & c = pr.constraints[ci];

        std::vector<Mask> support(c.scope.size(), 0);
        for (auto & tuple : c.tuples) {
            bool live = true;
            for (std::size_t i = 0; i < tuple.size() && live; ++i)
                live = dom[c.scope[i]] & (Mask{1} << tuple[i]);
            if (! live)
                continue;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                support[i] |= Mask{1} << tuple[i];
        }
        for (std::size_t i = 0; i < c.scope.size(); ++i) {
            auto var = c.scope[i];
            auto narrowed = dom[var] & support[i];
            if (narrowed == dom[var])
                continue;
            if (narrowed == 0)
                return false;
            dom[var] = narrowed;
            for (auto other : pr.watching[var])
                if (other != ci && ! queued[other]) {
                    queued[other] = 1;
                    queue.push_back(other);
                }
        }
    }
    return true;
}

auto all_constraints(const Problem & pr) -> std::deque<std::size_t>
{
    std::deque<std::size_t> q;
    for (std::size_t i = 0; i < pr.constraints.size(); ++i)
        q.push_back(i);
    return q;
}

auto choose_variable(const Problem & pr, const std::vector<Mask> & dom) -> std::optional<std::size_t>
{
    std::optional<std::size_t> best;
    int best_size = 0;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        int size = std::popcount(dom[i]);
        if (size <= 1)
            continue;
        if (! best || size < best_size || (size == best_size && pr.rank[i] < pr.rank[*best])) {
            best = i;
            best_size = size;
        }
    }
    return best;
}

auto children(const Problem & pr, const std::vector<Mask> & dom, std::size_t var) -> std::vector<std::vector<Mask>>
{
    std::vector<std::vector<Mask>> out;
    for (int bit = 0; bit < 64; ++bit) {
        if (! (dom[var] & (Mask{1} << bit)))
            continue;
        auto next = dom;
        next[var] = Mask{1} << bit;
        std::deque<std::size_t> q(pr.watching[var].begin(), pr.watching[var].end());
        if (propagate(pr, next, std::move(q)))
            out.push_back(std::move(next));
    }
    return out;
}

struct Outcome {
    SearchStatus status = SearchStatus::None;
    std::vector<Mask> solution;
    std::size_t nodes = 0;
};

void descend(const Problem & pr, std::vector<Mask> dom, std::size_t budget, Outcome & out)
{
    if (out.status != SearchStatus::None)
        return;
    if (++out.nodes > budget) {
        out.status = SearchStatus::BudgetExhausted;
        return;
    }
    auto var = choose_variable(pr, dom);
    if (! var) {
        out.status = SearchStatus::Found;
        out.solution = std::move(dom);
        return;
    }
    for (auto & child : children(pr, dom, *var)) {
        descend(pr, std::move(child), budget, out);
        if (out.status != SearchStatus::None)
            return;
    }
}

auto to_map(const Problem & pr, const std::vector<Mask> & dom) -> SimplicialMapData
{
    SimplicialMapData map;
    for (std::size_t i = 0; i < pr.vars.size(); ++i)
        map.emplace(pr.vars[i], pr.value_of(i, std::countr_zero(dom[i])));
    return map;
}

}

auto search_decision_map(const TimeTComplex & PT, const Task & t, SearchOptions options) -> SearchResult
{
    auto pr = build_problem(PT, t);
    SearchResult result;
    auto root = pr.initial;
    if (pr.infeasible || ! propagate(pr, root, all_constraints(pr)))
        return result;

    if (! options.parallel) {
        Outcome out;
        descend(pr, std::move(root), options.node_budget, out);
        result.status = out.status;
        result.nodes = out.nodes;
        if (out.status == SearchStatus::Found)
            result.map = to_map(pr, out.solution);
        return result;
    }

    // Expand whole levels so the frontier stays in depth-first order; the
    // first frontier subtree holding a solution then holds the serial one.
    auto workers = static_cast<std::size_t>(worker_count());
    std::size_t target = std::max<std::size_t>(8, 4 * workers);
    std::vector<std::vector<Mask>> frontier{root};
    for (int level = 0; level < 6 && frontier.size() < target; ++level) {
        std::vector<std::vector<Mask>> next;
        bool grew = false;
        for (auto & node : frontier) {
            auto var = choose_variable(pr, node);
            if (! var) {
                next.push_back(node);
                continue;
            }
            for (auto & child : children(pr, node, *var))
                next.push_back(std::move(child));
            grew = true;
        }
        result.nodes += frontier.size();
        frontier = std::move(next);
        if (! grew || frontier.empty())
            break;
    }

    std::vector<Outcome> outcomes(frontier.size());
    auto total = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (long i = 0; i < total; ++i) {
        auto idx = static_cast<std::size_t>(i);
        descend(pr, frontier[idx], options.node_budget, outcomes[idx]);
    }

    bool exhausted = false;
    for (auto & out : outcomes) {
        result.nodes += out.nodes;
        exhausted = exhausted || out.status == SearchStatus::BudgetExhausted;
        if (out.status == SearchStatus::Found && ! result.map)
            result.map = to_map(pr, out.solution);
    }
    if (result.map)
        result.status = SearchStatus::Found;
    else if (exhausted)
        result.status = SearchStatus::BudgetExhausted;
    return result;
}

auto brute_force_decision_map(const TimeTComplex & PT, const Task & t, std::size_t max_assignments)
    -> std::optional<SimplicialMapData>
{
    auto vars = PT.complex.vertices();
    std::vector<std::vector<Vertex>> options(vars.size());
    double space = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (auto & o : t.outputs.vertices())
            if (o.color == vars[i].color)
                options[i].push_back(o);
        space *= static_cast<double>(options[i].size());
        if (options[i].empty())
            return std::nullopt;
    }
    if (space > static_cast<double>(max_assignments))
        throw Error(ErrorCode::Unsupported, "brute force space too large");

    std::vector<std::size_t> choice(vars.size(), 0);
    while (true) {
        SimplicialMapData map;
        for (std::size_t i = 0; i < vars.size(); ++i)
            map.emplace(vars[i], options[i][choice[i]]);
        if (check_decision_map(PT, t, map).ok())
            return map;

        std::size_t pos = 0;
        while (pos < vars.size() && ++choice[pos] == options[pos].size())
            choice[pos++] = 0;
        if (pos == vars.size())
            return std::nullopt;
    }
}

}
