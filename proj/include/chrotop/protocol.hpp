#pragma once

#include <chrotop/complex.hpp>
#include <chrotop/models.hpp>
#include <chrotop/tasks.hpp>
#include <chrotop/terminating.hpp>
#include <chrotop/time_complex.hpp>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chrotop {

/// A full-information decision protocol. `history` holds the views of
/// process p after rounds 0..t; the answer is p's decision at round t, or
/// nullopt. Implementations must be pure.
class DecisionProtocol {
public:
    virtual ~DecisionProtocol() = default;
    virtual auto name() const -> std::string = 0;
    virtual auto decide(ProcessId p, std::span<const Vertex> history) const -> std::optional<std::string> = 0;
};

using ProtocolPtr = std::shared_ptr<const DecisionProtocol>;

auto constant_protocol(std::string value) -> ProtocolPtr;
auto own_input_protocol() -> ProtocolPtr;
auto never_protocol() -> ProtocolPtr;

/// Two processes: in round 1 the process that heard nobody wins, and both
/// decide the winner's input.
auto winner_protocol() -> ProtocolPtr;

/// FirstListed: decide entries[view] from the first round whose view is
/// listed on. PerView: the answer at round t is entries[current view] or
/// nothing, taken literally, so a table can break irrevocability.
enum class TableMode { FirstListed, PerView };

class TableProtocol : public DecisionProtocol {
public:
    explicit TableProtocol(std::map<Vertex, std::string> entries, std::string name = "table",
        TableMode mode = TableMode::FirstListed);

    auto name() const -> std::string override { return name_; }
    auto decide(ProcessId p, std::span<const Vertex> history) const -> std::optional<std::string> override;
    auto entries() const -> const std::map<Vertex, std::string> & { return entries_; }
    auto mode() const -> TableMode { return mode_; }

private:
    std::map<Vertex, std::string> entries_;
    std::string name_;
    TableMode mode_;
};

/// "constant:<v>", "own-input", "winner", "never"; ParseError otherwise.
auto builtin_protocol(const std::string & name) -> ProtocolPtr;

struct ProcessOutcome {
    ProcessId process = 0;
    std::optional<std::string> value;
    int round = -1;
    Simplex carrier;
};

struct PrefixOutcome {
    std::size_t input_facet = 0;
    Word word;
    std::vector<ProcessOutcome> processes;

    auto decided() const -> bool;
};

struct RunResult {
    int depth = 0;
    std::vector<PrefixOutcome> prefixes;

    auto undecided_count() const -> std::size_t;
    auto latest_round() const -> int;
};

/// Evaluates the protocol on every process of every allowed depth-`depth`
/// execution, after every round. IrrevocabilityViolation if some process
/// changes or withdraws a decision.
auto run(const DecisionProtocol & p, const ModelSpec & m, const Complex & inputs, int depth) -> RunResult;
auto run_serial(const DecisionProtocol & p, const ModelSpec & m, const Complex & inputs, int depth) -> RunResult;

enum class SolveStatus { Pass, Fail, Undecided };

auto to_string(SolveStatus s) -> std::string;

struct SolveReport {
    SolveStatus status = SolveStatus::Pass;
    RunResult run;
    std::optional<std::size_t> witness;
    Simplex witness_decisions;
    Simplex witness_carrier;
    std::vector<std::size_t> undecided;
};

/// Every decided group of processes must output a simplex of Delta applied to
/// the inputs they had heard of when deciding. Undecided prefixes are
/// inconclusive. InvalidOutput if a decision is not an output vertex.
auto check_solves(const DecisionProtocol & p, const Task & t, const ModelSpec & m, int depth) -> SolveReport;

/// Ball rule on a terminating subdivision: at round k, p gathers the stable
/// vertices of its color within distance D_k (closed) of its current view
/// and decides their common image if they are unanimous. IncompleteMap if
/// delta misses a stable vertex of Sigma_depth.
auto synthesize_from_map(const SimplicialMapData & delta, const TerminatingSubdivision & t, int depth) -> ProtocolPtr;

/// Continuity rule on P_T: p decides at the first round whose view has all of
/// its depth-T extensions in PT mapped to one output. The result is a table
/// listing exactly those views. IncompleteMap if delta misses a vertex.
auto synthesize_from_time_map(const SimplicialMapData & delta, const TimeTComplex & PT)
    -> std::shared_ptr<const TableProtocol>;

struct ExtractedMap {
    SimplicialMapData map;
    DecisionMapReport report;
    std::size_t locality_violations = 0;
};

/// Reads delta_T off a protocol that decides within T rounds on every
/// allowed execution; NotBoundedBy otherwise.
auto extract_map(const DecisionProtocol & p, const ModelSpec & m, const Task & t, int T) -> ExtractedMap;

}
