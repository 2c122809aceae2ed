#include <chrotop/certificates.hpp>
#include <chrotop/error.hpp>
#include <chrotop/parallel.hpp>
#include <chrotop/subdivision.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace chrotop {

auto Interval::contains(const Rational & x) const -> bool
{
    bool above = lo_open ? x > lo : x >= lo;
    bool below = hi_open ? x < hi : x <= hi;
    return above && below;
}

namespace {

const std::vector<ProcessId> edge_colors{0, 1};

void require_two_processes(const ModelSpec & m)
{
    if (m.process_count() != 2)
        throw Error(ErrorCode::Unsupported, "interval analysis needs exactly two processes");
}

auto on_excluded_path(const ModelSpec & m, const Word & w) -> bool
{
    return std::any_of(m.excluded().begin(), m.excluded().end(), [&](const ExecutionWord & e) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != e.at(i))
                return false;
        return true;
    });
}

void remove_point(std::vector<Interval> & components, const Rational & x)
{
    std::vector<Interval> out;
    for (auto & c : components) {
        if (! c.contains(x)) {
            out.push_back(c);
            continue;
        }
        if (c.lo == c.hi)
            continue;
        if (x == c.lo) {
            out.push_back(Interval{c.lo, c.hi, true, c.hi_open});
        }
        else if (x == c.hi) {
            out.push_back(Interval{c.lo, c.hi, c.lo_open, true});
        }
        else {
            out.push_back(Interval{c.lo, x, c.lo_open, true});
            out.push_back(Interval{x, c.hi, true, c.hi_open});
        }
    }
    components = std::move(out);
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

    auto find(std::size_t x) -> std::size_t
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Component id of every vertex, numbered by first appearance in canonical
// vertex order.
auto vertex_components(const Complex & k) -> std::map<Vertex, std::size_t>
{
    auto & verts = k.vertices();
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i)
        index.emplace(verts[i], i);
    UnionFind uf(verts.size());
    for (auto & f : k.facets())
        for (std::size_t i = 1; i < f.size(); ++i)
            uf.unite(index.at(f[0]), index.at(f[i]));

    std::map<std::size_t, std::size_t> renumber;
    std::map<Vertex, std::size_t> out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto root = uf.find(i);
        auto [it, fresh] = renumber.emplace(root, renumber.size());
        (void)fresh;
        out.emplace(verts[i], it->second);
    }
    return out;
}

}

auto limit_point(const ExecutionWord & w) -> Rational
{
    if (w.cycle.empty())
        throw Error(ErrorCode::ParseError, "execution word needs a nonempty cycle");
    auto stem = word_matrix(w.stem, edge_colors);
    auto cycle = word_matrix(w.cycle, edge_colors);
    // Rows of cycle^j converge to the stationary row pi with pi.cycle = pi.
    Rational a = cycle[0][0], b = cycle[1][0];
    Rational denom = b + 1 - a;
    if (denom == 0)
        throw Error(ErrorCode::Unsupported, "cycle does not contract");
    Rational p0 = b / denom, p1 = (1 - a) / denom;
    return p0 * stem[0][1] + p1 * stem[1][1];
}

auto cell_interval(const Word & w) -> Interval
{
    auto m = word_matrix(w, edge_colors);
    auto x0 = m[0][1], x1 = m[1][1];
    return Interval{std::min(x0, x1), std::max(x0, x1)};
}

auto realized_set(const ModelSpec & m, int depth) -> RealizedSet
{
    require_two_processes(m);
    RealizedSet rs;
    rs.depth = std::max(depth, m.saturation_depth());

    std::vector<Interval> cells;
    for (auto & w : enumerate_prefixes(m, rs.depth))
        cells.push_back(cell_interval(w));
    rs.cells = cells.size();
    std::sort(cells.begin(), cells.end(), [](const Interval & a, const Interval & b) { return a.lo < b.lo; });
    for (auto & c : cells) {
        if (! rs.components.empty() && c.lo <= rs.components.back().hi)
            rs.components.back().hi = std::max(rs.components.back().hi, c.hi);
        else
            rs.components.push_back(c);
    }

    // Several executions reach the same point only at cell vertices, whose
    // executions end in one process running alone forever.
    auto iis = iis_model(2);
    std::vector<Schedule> solo{parse_schedule("->", 2), parse_schedule("<-", 2)};
    for (auto & e : m.excluded()) {
        LimitPoint lp{e, limit_point(e), std::nullopt};
        auto horizon = static_cast<int>(e.stem.size() + e.cycle.size()) + m.saturation_depth() + 1;
        for (int len = 0; len <= horizon && ! lp.twin; ++len)
            for (auto & u : enumerate_prefixes(iis, len)) {
                for (auto & s : solo) {
                    ExecutionWord candidate = normalize(ExecutionWord{u, {s}});
                    if (candidate == e || limit_point(candidate) != lp.x || ! is_model_execution(m, candidate))
                        continue;
                    lp.twin = candidate;
                    break;
                }
                if (lp.twin)
                    break;
            }
        if (! lp.twin)
            remove_point(rs.components, lp.x);
        rs.limits.push_back(std::move(lp));
    }
    return rs;
}

auto certify_consensus_impossible(const ModelSpec & m, int depth) -> std::optional<ConsensusCertificate>
{
    require_two_processes(m);
    auto rs = realized_set(m, depth);
    for (std::size_t i = 0; i < rs.components.size(); ++i) {
        auto & c = rs.components[i];
        if (c.contains(0) && c.contains(1)) {
            ConsensusCertificate cert;
            cert.model = m.name();
            cert.component = i;
            cert.forced = {"x=0: process 0 alone forever, Delta({(0,0)}) forces 0",
                "x=1: process 1 alone forever, Delta({(1,1)}) forces 1"};
            cert.realized = std::move(rs);
            return cert;
        }
    }
    return std::nullopt;
}

auto to_string(Check c) -> std::string
{
    switch (c) {
    case Check::Pass:
        return "PASS";
    case Check::Pending:
        return "PENDING";
    case Check::Fail:
        return "FAIL";
    }
    return "?";
}

auto verify_gact_certificate(const TerminatingSubdivision & t, const SimplicialMapData & delta, const ModelSpec & m,
    const Task & task, int depth) -> GactReport
{
    if (! (t.base() == task.inputs))
        throw Error(ErrorCode::BaseMismatch, "subdivision base differs from the task's input complex");
    if (depth > t.max_depth())
        throw Error(ErrorCode::BadIndices, "subdivision materialized only to depth " + std::to_string(t.max_depth()));

    GactReport report;
    auto & r = t.realization();
    auto & base = t.base();
    auto stable = stable_complex(t, depth);
    auto cells = stable_cells(t, depth);

    // (a) admissibility at this depth.
    bool off_path_gap = false;
    for (std::size_t fi = 0; fi < base.facets().size(); ++fi)
        for (auto & w : enumerate_prefixes(m, depth)) {
            auto pts = cell_points(w, base.facets()[fi], r);
            bool covered = std::any_of(cells.begin(), cells.end(), [&](const Cell & c) {
                return c.base_facet == fi && geometric_containment(pts, r.points(c.facet));
            });
            if (covered)
                continue;
            report.uncovered.push_back(w);
            off_path_gap = off_path_gap || ! on_excluded_path(m, w);
        }
    if (! report.uncovered.empty())
        report.admissible = off_path_gap ? Check::Fail : Check::Pending;

    // (b) carrier condition against the geometric support of stable simplexes.
    report.simplicial = check_simplicial_chromatic(delta, stable, task.outputs);
    CarrierMapData xi;
    for (auto & sigma : base.faces()) {
        std::vector<Simplex> faces;
        for (auto & f : stable.facets()) {
            Simplex face;
            for (auto & v : f)
                if (is_face_of(r.support({r.point(v)}), sigma))
                    face.push_back(v);
            if (! face.empty())
                faces.push_back(std::move(face));
        }
        xi.set(sigma, Complex::from_facets(base.process_count(), std::move(faces)));
    }
    report.carrier = carried_by(delta, xi, task.delta, task.inputs);
    if (! report.simplicial.ok() || ! report.carrier.carried)
        report.carried = Check::Fail;

    // (c) local ball rule around settled stable vertices.
    std::vector<Rational> radii;
    for (int k = 0; k <= depth; ++k)
        radii.push_back(diameter_Dk(base, k));
    bool local_failure = false;
    for (auto & v : stable.vertices()) {
        std::optional<int> settled;
        for (int k = 0; k <= depth && ! settled; ++k) {
            auto & level = t.level(k);
            auto incident = level.facets_containing(v);
            if (incident.empty())
                continue;
            bool all_done = std::all_of(incident.begin(), incident.end(), [&](std::size_t idx) {
                auto & c = t.cells(k)[idx];
                bool live = std::any_of(c.words.begin(), c.words.end(), [&](const Word & w) { return m.allowed_prefix(w); });
                return ! live || c.terminated.has_value();
            });
            if (all_done)
                settled = k;
        }
        if (! settled) {
            ++report.unsettled_vertices;
            continue;
        }
        auto here = r.point(v);
        auto own = delta.at(v).label;
        for (auto & w : stable.vertices()) {
            if (w.color != v.color || delta.at(w).label == own)
                continue;
            if (distance(here, r.point(w)) <= radii[static_cast<std::size_t>(*settled)]) {
                local_failure = true;
                report.notes.push_back("stable vertices " + to_string(v) + " and " + to_string(w) + " lie within D_"
                    + std::to_string(*settled) + " but map to different outputs");
                break;
            }
        }
    }

    // (c) closure analysis on the two-process edge.
    bool gap_failure = false;
    if (base.process_count() == 2 && base.facets().size() == 1) {
        auto rs = realized_set(m, depth);
        auto out_components = vertex_components(task.outputs);
        auto right = r.base_index(*vertex_with_color(base.facets()[0], 1));

        struct Placed {
            Interval span;
            const Cell * cell;
            std::size_t component;
            std::string value;
        };
        std::vector<Placed> placed;
        for (auto & c : cells) {
            auto pts = r.points(c.facet);
            auto x0 = pts[0].weights[right], x1 = pts[1].weights[right];
            auto image = delta.at(c.facet[0]);
            auto comp = out_components.contains(image) ? out_components.at(image) : static_cast<std::size_t>(-1);
            placed.push_back(Placed{Interval{std::min(x0, x1), std::max(x0, x1)}, &c, comp, image.label});
        }
        std::sort(placed.begin(), placed.end(), [](const Placed & a, const Placed & b) { return a.span.lo < b.span.lo; });

        for (std::size_t i = 1; i < placed.size() && ! report.discontinuity; ++i) {
            auto & a = placed[i - 1];
            auto & b = placed[i];
            if (a.component == b.component)
                continue;
            Interval gap{a.span.hi, b.span.lo};
            bool joined = std::any_of(rs.components.begin(), rs.components.end(),
                [&](const Interval & c) { return c.contains(gap.lo) && c.contains(gap.hi); });
            if (! joined)
                continue;
            DiscontinuityWitness wit{gap, a.cell->facet, b.cell->facet, a.value, b.value, std::nullopt};
            for (auto & e : m.excluded()) {
                auto x = limit_point(e);
                if (x >= gap.lo && x <= gap.hi)
                    wit.excluded = e;
            }
            report.discontinuity = std::move(wit);
            gap_failure = true;
        }
    }
    else {
        report.notes.push_back("closure analysis needs a single two-process input edge; skipped");
    }

    if (local_failure || gap_failure)
        report.continuous = Check::Fail;
    else if (report.unsettled_vertices > 0)
        report.continuous = Check::Pending;
    return report;
}

auto consensus_component_map(const TerminatingSubdivision & t, int depth) -> SimplicialMapData
{
    auto stable = stable_complex(t, depth);
    auto & r = t.realization();
    auto components = vertex_components(stable);

    std::map<std::size_t, std::set<std::string>> forced;
    for (auto & v : stable.vertices()) {
        auto support = r.support({r.point(v)});
        if (support.size() == 1)
            forced[components.at(v)].insert(support[0].label);
    }
    std::string fallback = t.base().vertices().front().label;
    for (auto & v : t.base().vertices())
        fallback = std::min(fallback, v.label);

    SimplicialMapData map;
    for (auto & v : stable.vertices()) {
        auto it = forced.find(components.at(v));
        auto value = it == forced.end() ? fallback : *it->second.begin();
        map.emplace(v, Vertex{v.color, value});
    }
    return map;
}

namespace {

struct SpernerSetup {
    std::vector<std::vector<int>> options;
    std::vector<std::vector<std::size_t>> facets;
    std::vector<std::size_t> free;
    double space = 1;
};

auto sperner_setup(int n, int k) -> SpernerSetup
{
    if (n < 2 || n > 3 || k < 0 || k > 2)
        throw Error(ErrorCode::Unsupported, "Sperner evidence covers n in 2..3 and k in 0..2");
    auto base = set_agreement(n).inputs;
    Realization r(base);
    auto sub = chr_iter(base, k);

    SpernerSetup s;
    std::map<Vertex, std::size_t> index;
    for (auto & v : sub.vertices()) {
        index.emplace(v, s.options.size());
        std::vector<int> values;
        for (auto & corner : r.support({r.point(v)}))
            values.push_back(std::stoi(corner.label));
        if (values.size() > 1) {
            s.free.push_back(s.options.size());
            s.space *= static_cast<double>(values.size());
        }
        s.options.push_back(std::move(values));
    }
    for (auto & f : sub.facets()) {
        std::vector<std::size_t> ids;
        for (auto & v : f)
            ids.push_back(index.at(v));
        s.facets.push_back(std::move(ids));
    }
    return s;
}

auto rainbow_count(const SpernerSetup & s, const std::vector<int> & color, int n) -> std::size_t
{
    std::size_t count = 0;
    for (auto & f : s.facets) {
        unsigned seen = 0;
        for (auto id : f)
            seen |= 1u << color[id];
        if (seen == (1u << n) - 1)
            ++count;
    }
    return count;
}

// Coloring number `index`: mixed radix over the free vertices when
// exhaustive, otherwise a draw from a generator seeded by (seed, index).
auto coloring(const SpernerSetup & s, bool exhaustive, std::uint64_t seed, std::size_t index) -> std::vector<int>
{
    std::vector<int> color(s.options.size());
    for (std::size_t i = 0; i < s.options.size(); ++i)
        color[i] = s.options[i].front();
    if (exhaustive) {
        auto rest = index;
        for (auto id : s.free) {
            auto radix = s.options[id].size();
            color[id] = s.options[id][rest % radix];
            rest /= radix;
        }
    }
    else {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        std::mt19937_64 rng(seq);
        for (auto id : s.free) {
            std::uniform_int_distribution<std::size_t> pick(0, s.options[id].size() - 1);
            color[id] = s.options[id][pick(rng)];
        }
    }
    return color;
}

auto make_report(const SpernerSetup & s, int n, int k, std::uint64_t seed, std::size_t samples,
    std::size_t exhaustive_limit) -> SpernerReport
{
    SpernerReport report;
    report.n = n;
    report.k = k;
    report.vertices = s.options.size();
    report.facets = s.facets.size();
    report.exhaustive = s.space <= static_cast<double>(exhaustive_limit);
    report.seed = seed;
    report.colorings = report.exhaustive ? static_cast<std::size_t>(s.space) : samples;
    return report;
}

}

auto sperner_evidence_serial(int n, int k, std::uint64_t seed, std::size_t samples, std::size_t exhaustive_limit)
    -> SpernerReport
{
    auto s = sperner_setup(n, k);
    auto report = make_report(s, n, k, seed, samples, exhaustive_limit);
    report.min_rainbow = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < report.colorings; ++i) {
        auto count = rainbow_count(s, coloring(s, report.exhaustive, seed, i), n);
        report.min_rainbow = std::min(report.min_rainbow, count);
        report.max_rainbow = std::max(report.max_rainbow, count);
        if (count % 2 == 0)
            ++report.even_colorings;
    }
    return report;
}

auto sperner_evidence(int n, int k, std::uint64_t seed, std::size_t samples, std::size_t exhaustive_limit)
    -> SpernerReport
{
    auto s = sperner_setup(n, k);
    auto report = make_report(s, n, k, seed, samples, exhaustive_limit);
    std::size_t lowest = static_cast<std::size_t>(-1), highest = 0, even = 0;
    auto total = static_cast<long>(report.colorings);
    bool exhaustive = report.exhaustive;

#pragma omp parallel for schedule(static) num_threads(worker_count()) \
    reduction(min : lowest) reduction(max : highest) reduction(+ : even)
    for (long i = 0; i < total; ++i) {
        auto count = rainbow_count(s, coloring(s, exhaustive, seed, static_cast<std::size_t>(i)), n);
        lowest = std::min(lowest, count);
        highest = std::max(highest, count);
        if (count % 2 == 0)
            ++even;
    }
    report.min_rainbow = lowest;
    report.max_rainbow = highest;
    report.even_colorings = even;
    return report;
}

}
