#pragma once

#include <chrotop/certificates.hpp>
#include <chrotop/protocol.hpp>
#include <chrotop/search.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chrotop {

enum class VerdictKind { SolvableBounded, UnsolvableCertified, UnsolvableAtAllDepths, Unknown };

auto to_string(VerdictKind k) -> std::string;

/// Process exit status for a verdict: 0, 10, 11, 12 in declaration order.
auto exit_code(VerdictKind k) -> int;

struct SolveOptions {
    std::uint64_t seed = 1;
    std::size_t node_budget = 250'000;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::string model;
    std::string task;
    int max_depth = 0;
    std::uint64_t seed = 0;

    /// One entry per searched time bound, in order.
    std::vector<SearchStatus> searches;

    std::optional<int> T;
    std::optional<SimplicialMapData> map;
    std::shared_ptr<const TableProtocol> protocol;
    std::optional<SolveStatus> protocol_check;

    std::optional<ConsensusCertificate> certificate;
    std::optional<SpernerReport> sperner;
    std::vector<std::string> notes;
};

/// Searches T = 0..max_depth for a decision map; on success the map is
/// turned into a protocol and re-checked by simulation. Otherwise tries the
/// two-process consensus certificate, attaches Sperner evidence for
/// three-process set agreement, and reports bounded non-existence only for
/// models without excluded executions.
auto solve(const ModelSpec & m, const Task & t, int max_depth, SolveOptions options = {}) -> Verdict;

/// Structural comparison against the built-in constructors.
auto is_consensus_task(const Task & t) -> bool;
auto is_set_agreement_task(const Task & t) -> bool;

}
