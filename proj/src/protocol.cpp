#include <chrotop/error.hpp>
#include <chrotop/parallel.hpp>
#include <chrotop/protocol.hpp>
#include <chrotop/subdivision.hpp>

#include <algorithm>
#include <exception>
#include <set>

namespace chrotop {

namespace {

class ConstantProtocol : public DecisionProtocol {
public:
    explicit ConstantProtocol(std::string value) : value_(std::move(value)) {}
    auto name() const -> std::string override { return "constant:" + value_; }
    auto decide(ProcessId, std::span<const Vertex>) const -> std::optional<std::string> override { return value_; }

private:
    std::string value_;
};

class OwnInputProtocol : public DecisionProtocol {
public:
    auto name() const -> std::string override { return "own-input"; }
    auto decide(ProcessId, std::span<const Vertex> history) const -> std::optional<std::string> override
    {
        return history.front().label;
    }
};

class NeverProtocol : public DecisionProtocol {
public:
    auto name() const -> std::string override { return "never"; }
    auto decide(ProcessId, std::span<const Vertex>) const -> std::optional<std::string> override { return std::nullopt; }
};

class WinnerProtocol : public DecisionProtocol {
public:
    auto name() const -> std::string override { return "winner"; }
    auto decide(ProcessId p, std::span<const Vertex> history) const -> std::optional<std::string> override
    {
        if (history.size() < 2)
            return std::nullopt;
        auto heard = decode_carrier(history[1].label);
        if (heard.size() == 1)
            return history.front().label;
        if (heard.size() != 2)
            return std::nullopt;
        for (auto & v : heard)
            if (v.color != p)
                return v.label;
        return std::nullopt;
    }
};

class BallRuleProtocol : public DecisionProtocol {
public:
    struct Anchor {
        BarycentricPoint point;
        std::string value;
    };

    BallRuleProtocol(std::shared_ptr<const Realization> realization, std::map<ProcessId, std::vector<Anchor>> anchors,
        std::vector<Rational> radii) :
        realization_(std::move(realization)),
        anchors_(std::move(anchors)),
        radii_(std::move(radii))
    {
    }

    auto name() const -> std::string override { return "ball-rule"; }

    auto decide(ProcessId p, std::span<const Vertex> history) const -> std::optional<std::string> override
    {
        auto it = anchors_.find(p);
        if (it == anchors_.end())
            return std::nullopt;
        for (std::size_t k = 0; k < history.size(); ++k) {
            auto here = realization_->point(history[k]);
            auto & radius = radii_[std::min(k, radii_.size() - 1)];
            std::optional<std::string> common;
            bool unanimous = true, any = false;
            for (auto & a : it->second) {
                if (distance(here, a.point) > radius)
                    continue;
                if (any && *common != a.value) {
                    unanimous = false;
                    break;
                }
                any = true;
                common = a.value;
            }
            if (any && unanimous)
                return common;
        }
        return std::nullopt;
    }

private:
    std::shared_ptr<const Realization> realization_;
    std::map<ProcessId, std::vector<Anchor>> anchors_;
    std::vector<Rational> radii_;
};

void evaluate(const DecisionProtocol & p, const ExecutionViews & ev, PrefixOutcome & out)
{
    out.input_facet = ev.input_facet;
    out.word = ev.word;
    out.processes.clear();
    for (std::size_t i = 0; i < ev.process_count(); ++i) {
        ProcessOutcome po;
        po.process = ev.inputs[i].color;
        auto & history = ev.history[i];
        for (std::size_t t = 0; t < history.size(); ++t) {
            auto d = p.decide(po.process, std::span<const Vertex>(history.data(), t + 1));
            if (po.value) {
                if (d != po.value)
                    throw Error(ErrorCode::IrrevocabilityViolation,
                        "process " + std::to_string(po.process) + " on prefix " + to_display(ev.word) + " decided "
                            + *po.value + " at round " + std::to_string(po.round) + " then "
                            + (d ? *d : std::string("nothing")) + " at round " + std::to_string(t));
            }
            else if (d) {
                po.value = d;
                po.round = static_cast<int>(t);
                po.carrier = base_carrier(history[t]);
            }
        }
        out.processes.push_back(std::move(po));
    }
}

}

auto constant_protocol(std::string value) -> ProtocolPtr
{
    return std::make_shared<ConstantProtocol>(std::move(value));
}

auto own_input_protocol() -> ProtocolPtr
{
    return std::make_shared<OwnInputProtocol>();
}

auto never_protocol() -> ProtocolPtr
{
    return std::make_shared<NeverProtocol>();
}

auto winner_protocol() -> ProtocolPtr
{
    return std::make_shared<WinnerProtocol>();
}

TableProtocol::TableProtocol(std::map<Vertex, std::string> entries, std::string name, TableMode mode) :
    entries_(std::move(entries)),
    name_(std::move(name)),
    mode_(mode)
{
}

auto TableProtocol::decide(ProcessId, std::span<const Vertex> history) const -> std::optional<std::string>
{
    if (mode_ == TableMode::PerView) {
        if (history.empty())
            return std::nullopt;
        auto it = entries_.find(history.back());
        return it == entries_.end() ? std::nullopt : std::optional<std::string>(it->second);
    }
    for (auto & v : history)
        if (auto it = entries_.find(v); it != entries_.end())
            return it->second;
    return std::nullopt;
}

auto builtin_protocol(const std::string & name) -> ProtocolPtr
{
    if (name.rfind("constant:", 0) == 0 && name.size() > 9)
        return constant_protocol(name.substr(9));
    if (name == "own-input")
        return own_input_protocol();
    if (name == "winner")
        return winner_protocol();
    if (name == "never")
        return never_protocol();
    throw Error(ErrorCode::ParseError, "unknown protocol '" + name + "'");
}

auto PrefixOutcome::decided() const -> bool
{
    return std::all_of(processes.begin(), processes.end(), [](const ProcessOutcome & p) { return p.value.has_value(); });
}

auto RunResult::undecided_count() const -> std::size_t
{
    return static_cast<std::size_t>(
        std::count_if(prefixes.begin(), prefixes.end(), [](const PrefixOutcome & p) { return ! p.decided(); }));
}

auto RunResult::latest_round() const -> int
{
    int latest = -1;
    for (auto & prefix : prefixes)
        for (auto & p : prefix.processes)
            latest = std::max(latest, p.round);
    return latest;
}

auto run_serial(const DecisionProtocol & p, const ModelSpec & m, const Complex & inputs, int depth) -> RunResult
{
    RunResult result;
    result.depth = depth;
    auto executions = enumerate_executions_serial(m, inputs, depth);
    result.prefixes.resize(executions.size());
    for (std::size_t i = 0; i < executions.size(); ++i)
        evaluate(p, executions[i], result.prefixes[i]);
    return result;
}

auto run(const DecisionProtocol & p, const ModelSpec & m, const Complex & inputs, int depth) -> RunResult
{
    RunResult result;
    result.depth = depth;
    auto executions = enumerate_executions(m, inputs, depth);
    auto total = static_cast<long>(executions.size());
    result.prefixes.resize(executions.size());
    std::vector<std::exception_ptr> errors(executions.size());

#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count())
    for (long i = 0; i < total; ++i) {
        auto idx = static_cast<std::size_t>(i);
        try {
            evaluate(p, executions[idx], result.prefixes[idx]);
        }
        catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    // The first failing prefix in canonical order is reported, whatever the
    // thread interleaving was.
    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
    return result;
}

auto to_string(SolveStatus s) -> std::string
{
    switch (s) {
    case SolveStatus::Pass:
        return "PASS";
    case SolveStatus::Fail:
        return "FAIL";
    case SolveStatus::Undecided:
        return "UNDECIDED";
    }
    return "?";
}

auto check_solves(const DecisionProtocol & p, const Task & t, const ModelSpec & m, int depth) -> SolveReport
{
    SolveReport report;
    report.run = run(p, m, t.inputs, depth);

    for (std::size_t i = 0; i < report.run.prefixes.size(); ++i) {
        auto & prefix = report.run.prefixes[i];
        std::vector<const ProcessOutcome *> decided;
        for (auto & po : prefix.processes) {
            if (! po.value)
                continue;
            Vertex out{po.process, *po.value};
            if (! t.outputs.contains_vertex(out))
                throw Error(ErrorCode::InvalidOutput, to_string(out) + " is not an output vertex");
            decided.push_back(&po);
        }
        if (decided.size() < prefix.processes.size())
            report.undecided.push_back(i);
        if (report.witness)
            continue;

        auto count = decided.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
            Simplex outputs, heard;
            for (std::size_t j = 0; j < count; ++j) {
                if (! (mask & (std::size_t{1} << j)))
                    continue;
                outputs.push_back(Vertex{decided[j]->process, *decided[j]->value});
                heard.insert(heard.end(), decided[j]->carrier.begin(), decided[j]->carrier.end());
            }
            std::sort(outputs.begin(), outputs.end());
            std::sort(heard.begin(), heard.end());
            heard.erase(std::unique(heard.begin(), heard.end()), heard.end());
            if (! t.delta.image(heard).contains(outputs)) {
                report.witness = i;
                report.witness_decisions = outputs;
                report.witness_carrier = heard;
                break;
            }
        }
    }

    if (report.witness)
        report.status = SolveStatus::Fail;
    else if (! report.undecided.empty())
        report.status = SolveStatus::Undecided;
    return report;
}

auto synthesize_from_map(const SimplicialMapData & delta, const TerminatingSubdivision & t, int depth) -> ProtocolPtr
{
    std::map<ProcessId, std::vector<BallRuleProtocol::Anchor>> anchors;
    auto & r = t.realization();
    auto stable = stable_complex(t, depth);
    for (auto & v : stable.vertices()) {
        auto it = delta.find(v);
        if (it == delta.end())
            throw Error(ErrorCode::IncompleteMap, "no image for stable vertex " + to_string(v));
        anchors[v.color].push_back({r.point(v), it->second.label});
    }

    // Radii past the precomputed horizon stay at the last value, which only
    // makes the rule more cautious.
    int horizon = std::max(depth, 1) + 2;
    if (t.base().dimension() >= 2)
        horizon = std::min(horizon, 3);
    std::vector<Rational> radii;
    for (int k = 0; k <= horizon; ++k)
        radii.push_back(diameter_Dk(t.base(), k));
    return std::make_shared<BallRuleProtocol>(t.shared_realization(), std::move(anchors), std::move(radii));
}

auto synthesize_from_time_map(const SimplicialMapData & delta, const TimeTComplex & PT)
    -> std::shared_ptr<const TableProtocol>
{
    std::map<Vertex, std::set<std::string>> reachable;
    for (auto & v : PT.complex.vertices()) {
        auto it = delta.find(v);
        if (it == delta.end())
            throw Error(ErrorCode::IncompleteMap, "no image for " + to_string(v));
        for (int back = 0; back <= PT.T; ++back)
            reachable[ancestor(v, back)].insert(it->second.label);
    }
    std::map<Vertex, std::string> entries;
    for (auto & [view, values] : reachable)
        if (values.size() == 1)
            entries.emplace(view, *values.begin());
    return std::make_shared<TableProtocol>(std::move(entries), "time-map");
}

auto extract_map(const DecisionProtocol & p, const ModelSpec & m, const Task & t, int T) -> ExtractedMap
{
    auto PT = build_time_T(m, t, T);
    auto result = run(p, m, t.inputs, T);

    ExtractedMap out;
    for (std::size_t i = 0; i < result.prefixes.size(); ++i) {
        auto & prefix = result.prefixes[i];
        auto & ev = PT.executions[i];
        for (std::size_t j = 0; j < prefix.processes.size(); ++j) {
            auto & po = prefix.processes[j];
            if (! po.value)
                throw Error(ErrorCode::NotBoundedBy, "process " + std::to_string(po.process) + " undecided after "
                        + std::to_string(T) + " rounds on " + to_display(prefix.word));
            Vertex view = ev.history[j].back();
            Vertex image{po.process, *po.value};
            auto [it, fresh] = out.map.emplace(view, image);
            if (! fresh && it->second != image)
                ++out.locality_violations;
        }
    }
    out.report = check_decision_map(PT, t, out.map);
    return out;
}

}
