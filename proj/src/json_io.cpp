#include <chrotop/error.hpp>
#include <chrotop/json_io.hpp>

#include <fstream>

namespace chrotop {

namespace {

auto facets_to_json(const std::vector<Simplex> & facets) -> Json
{
    Json out = Json::array();
    for (auto & f : facets)
        out.push_back(to_json(f));
    return out;
}

auto simplex_from_json(const Json & j) -> Simplex
{
    if (! j.is_array())
        throw Error(ErrorCode::ParseError, "simplex must be an array of vertices");
    std::vector<Vertex> vs;
    for (auto & v : j)
        vs.push_back(vertex_from_json(v));
    return make_simplex(std::move(vs));
}

auto facets_from_json(const Json & j) -> std::vector<Simplex>
{
    if (! j.is_array())
        throw Error(ErrorCode::ParseError, "facet list must be an array");
    std::vector<Simplex> out;
    for (auto & f : j)
        out.push_back(simplex_from_json(f));
    return out;
}

auto schedule_text(const Schedule & s) -> std::string
{
    return to_string(s);
}

auto word_to_json(const Word & w) -> Json
{
    Json out = Json::array();
    for (auto & s : w)
        out.push_back(schedule_text(s));
    return out;
}

auto word_from_json(const Json & j, int n) -> Word
{
    if (! j.is_array())
        throw Error(ErrorCode::ParseError, "schedule word must be an array of schedules");
    Word w;
    for (auto & s : j)
        w.push_back(parse_schedule(s.get<std::string>(), n));
    return w;
}

template <typename F>
auto guarded(F && f) -> decltype(f())
{
    try {
        return f();
    }
    catch (const Error &) {
        throw;
    }
    catch (const std::exception & e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}

auto to_json(const Vertex & v) -> Json
{
    return Json{{"color", v.color}, {"label", v.label}};
}

auto to_json(const Simplex & s) -> Json
{
    Json out = Json::array();
    for (auto & v : s)
        out.push_back(to_json(v));
    return out;
}

auto to_json(const Complex & k) -> Json
{
    return Json{{"n", k.process_count()}, {"facets", facets_to_json(k.facets())}};
}

auto to_json(const Task & t) -> Json
{
    Json delta = Json::array();
    for (auto & [s, image] : t.delta.entries())
        delta.push_back(Json{{"simplex", to_json(s)}, {"image", facets_to_json(image.facets())}});
    return Json{{"name", t.name}, {"n", t.process_count()}, {"inputs", facets_to_json(t.inputs.facets())},
        {"outputs", facets_to_json(t.outputs.facets())}, {"delta", delta}};
}

auto to_json(const ModelSpec & m) -> Json
{
    Json out{{"name", m.name()}, {"n", m.process_count()}};
    switch (m.kind()) {
    case ModelKind::Iis:
        out["kind"] = "iis";
        break;
    case ModelKind::FirstRoundRestricted: {
        out["kind"] = "firstRoundRestricted";
        Json first = Json::array();
        for (auto & s : m.first_rounds())
            first.push_back(schedule_text(s));
        out["allowedFirstRounds"] = first;
        break;
    }
    case ModelKind::Custom: {
        out["kind"] = "custom";
        Json stems = Json::array();
        for (auto & w : m.stems())
            stems.push_back(word_to_json(w));
        out["allowedStems"] = stems;
        break;
    }
    }
    Json excluded = Json::array();
    for (auto & e : m.excluded())
        excluded.push_back(to_json(e));
    out["excluded"] = excluded;
    return out;
}

auto to_json(const ExecutionWord & w) -> Json
{
    return Json{{"stem", word_to_json(w.stem)}, {"cycle", word_to_json(w.cycle)}, {"display", to_display(w)}};
}

auto to_json(const SimplicialMapData & map) -> Json
{
    Json out = Json::array();
    for (auto & [v, image] : map)
        out.push_back(Json{{"vertex", to_json(v)}, {"image", to_json(image)}});
    return out;
}

auto to_json(const TableProtocol & p) -> Json
{
    Json entries = Json::array();
    for (auto & [view, output] : p.entries())
        entries.push_back(Json{{"color", view.color}, {"view", view.label}, {"output", output}});
    return Json{{"schema", schema_version}, {"kind", "table"}, {"name", p.name()},
        {"mode", p.mode() == TableMode::PerView ? "per-view" : "first-listed"}, {"entries", entries}};
}

auto to_json(const Interval & i) -> Json
{
    return Json{{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}, {"loOpen", i.lo_open}, {"hiOpen", i.hi_open}};
}

auto to_json(const ConsensusCertificate & c) -> Json
{
    Json components = Json::array();
    for (auto & i : c.realized.components)
        components.push_back(to_json(i));
    Json limits = Json::array();
    for (auto & l : c.realized.limits) {
        Json entry{{"execution", to_json(l.word)}, {"x", to_string(l.x)}};
        entry["reachedBy"] = l.twin ? to_json(*l.twin) : Json(nullptr);
        limits.push_back(entry);
    }
    return Json{{"kind", "consensus-closure"}, {"model", c.model}, {"depth", c.realized.depth},
        {"cells", c.realized.cells}, {"components", components}, {"excludedLimits", limits},
        {"component", c.component}, {"forced", c.forced}};
}

auto to_json(const SpernerReport & r) -> Json
{
    return Json{{"kind", "sperner-evidence"}, {"n", r.n}, {"k", r.k}, {"vertices", r.vertices}, {"facets", r.facets},
        {"exhaustive", r.exhaustive}, {"seed", r.seed}, {"colorings", r.colorings}, {"minRainbow", r.min_rainbow},
        {"maxRainbow", r.max_rainbow}, {"evenColorings", r.even_colorings}, {"allOdd", r.all_odd()}};
}

auto to_json(const GactReport & r) -> Json
{
    Json uncovered = Json::array();
    for (auto & w : r.uncovered)
        uncovered.push_back(to_display(w));
    Json out{{"admissible", to_string(r.admissible)}, {"uncovered", uncovered}, {"carried", to_string(r.carried)},
        {"continuous", to_string(r.continuous)}, {"unsettledVertices", r.unsettled_vertices}, {"notes", r.notes}};
    if (r.carrier.input_witness)
        out["carrierWitness"] = Json{{"input", to_json(*r.carrier.input_witness)},
            {"simplex", to_json(*r.carrier.execution_witness)}};
    if (r.discontinuity) {
        auto & d = *r.discontinuity;
        Json wit{{"gap", to_json(d.gap)}, {"leftCell", to_json(d.left_cell)}, {"rightCell", to_json(d.right_cell)},
            {"leftValue", d.left_value}, {"rightValue", d.right_value}};
        wit["excluded"] = d.excluded ? to_json(*d.excluded) : Json(nullptr);
        out["discontinuity"] = wit;
    }
    return out;
}

auto to_json(const SolveReport & r) -> Json
{
    Json prefixes = Json::array();
    for (auto & p : r.run.prefixes) {
        Json procs = Json::array();
        for (auto & po : p.processes) {
            Json entry{{"process", po.process}};
            entry["value"] = po.value ? Json(*po.value) : Json(nullptr);
            entry["round"] = po.round;
            procs.push_back(entry);
        }
        prefixes.push_back(Json{{"inputFacet", p.input_facet}, {"word", to_display(p.word)}, {"decisions", procs}});
    }
    Json out{{"schema", schema_version}, {"status", to_string(r.status)}, {"depth", r.run.depth},
        {"prefixes", prefixes}};
    if (r.witness) {
        out["witness"] = Json{{"prefix", to_display(r.run.prefixes[*r.witness].word)},
            {"decisions", to_json(r.witness_decisions)}, {"heardOf", to_json(r.witness_carrier)}};
    }
    Json undecided = Json::array();
    for (auto i : r.undecided)
        undecided.push_back(to_display(r.run.prefixes[i].word));
    out["undecided"] = undecided;
    return out;
}

auto to_json(const Verdict & v) -> Json
{
    Json searches = Json::array();
    for (std::size_t T = 0; T < v.searches.size(); ++T)
        searches.push_back(Json{{"T", T}, {"result", to_string(v.searches[T])}});
    Json out{{"schema", schema_version}, {"verdict", to_string(v.kind)}, {"model", v.model}, {"task", v.task},
        {"maxDepth", v.max_depth}, {"seed", v.seed}, {"searches", searches}};
    if (v.T)
        out["T"] = *v.T;
    if (v.map)
        out["map"] = to_json(*v.map);
    if (v.protocol)
        out["protocol"] = to_json(*v.protocol);
    if (v.protocol_check)
        out["protocolCheck"] = to_string(*v.protocol_check);
    if (v.certificate)
        out["certificate"] = to_json(*v.certificate);
    if (v.sperner)
        out["evidence"] = to_json(*v.sperner);
    out["notes"] = v.notes;
    return out;
}

auto vertex_from_json(const Json & j) -> Vertex
{
    return guarded([&] {
        if (! j.is_object())
            throw Error(ErrorCode::ParseError, "vertex must be an object");
        auto & label = j.at("label");
        return Vertex{j.at("color").get<int>(), label.is_string() ? label.get<std::string>() : label.dump()};
    });
}

auto complex_from_json(const Json & j) -> Complex
{
    return guarded([&] { return Complex::from_facets(j.at("n").get<int>(), facets_from_json(j.at("facets"))); });
}

auto task_from_json(const Json & j) -> Task
{
    return guarded([&] {
        Task t;
        int n = j.at("n").get<int>();
        t.name = j.value("name", std::string("custom"));
        t.inputs = close_faces(n, facets_from_json(j.at("inputs")));
        t.outputs = close_faces(n, facets_from_json(j.at("outputs")));
        for (auto & entry : j.at("delta"))
            t.delta.set(simplex_from_json(entry.at("simplex")),
                Complex::from_facets(n, facets_from_json(entry.at("image"))));
        return t;
    });
}

auto model_from_json(const Json & j) -> ModelSpec
{
    return guarded([&] {
        int n = j.at("n").get<int>();
        auto kind_text = j.at("kind").get<std::string>();
        auto name = j.value("name", kind_text);

        std::vector<ExecutionWord> excluded;
        if (j.contains("excluded"))
            for (auto & e : j.at("excluded"))
                excluded.push_back(ExecutionWord{word_from_json(e.at("stem"), n), word_from_json(e.at("cycle"), n)});

        if (kind_text == "iis")
            return ModelSpec(n, name, ModelKind::Iis, {}, {}, std::move(excluded));
        if (kind_text == "firstRoundRestricted") {
            std::vector<Schedule> first;
            for (auto & s : j.at("allowedFirstRounds"))
                first.push_back(parse_schedule(s.get<std::string>(), n));
            return ModelSpec(n, name, ModelKind::FirstRoundRestricted, std::move(first), {}, std::move(excluded));
        }
        if (kind_text == "custom") {
            std::vector<Word> stems;
            for (auto & w : j.at("allowedStems"))
                stems.push_back(word_from_json(w, n));
            return ModelSpec(n, name, ModelKind::Custom, {}, std::move(stems), std::move(excluded));
        }
        throw Error(ErrorCode::ParseError, "unknown model kind '" + kind_text + "'");
    });
}

auto table_from_json(const Json & j) -> std::shared_ptr<const TableProtocol>
{
    return guarded([&] {
        if (j.value("kind", std::string("table")) != "table")
            throw Error(ErrorCode::ParseError, "protocol document is not a decision table");
        auto mode_text = j.value("mode", std::string("first-listed"));
        if (mode_text != "first-listed" && mode_text != "per-view")
            throw Error(ErrorCode::ParseError, "unknown table mode '" + mode_text + "'");
        std::map<Vertex, std::string> entries;
        for (auto & e : j.at("entries"))
            entries.emplace(Vertex{e.at("color").get<int>(), e.at("view").get<std::string>()},
                e.at("output").get<std::string>());
        return std::make_shared<const TableProtocol>(std::move(entries), j.value("name", std::string("table")),
            mode_text == "per-view" ? TableMode::PerView : TableMode::FirstListed);
    });
}

auto read_json_file(const std::string & path) -> Json
{
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    try {
        return Json::parse(in);
    }
    catch (const std::exception & e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

}
