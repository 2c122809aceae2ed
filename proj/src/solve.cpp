#include <chrotop/error.hpp>
#include <chrotop/solve.hpp>

#include <algorithm>

namespace chrotop {

auto to_string(VerdictKind k) -> std::string
{
    switch (k) {
    case VerdictKind::SolvableBounded:
        return "SolvableBounded";
    case VerdictKind::UnsolvableCertified:
        return "UnsolvableCertified";
    case VerdictKind::UnsolvableAtAllDepths:
        return "UnsolvableAtAllDepths";
    case VerdictKind::Unknown:
        return "Unknown";
    }
    return "?";
}

auto exit_code(VerdictKind k) -> int
{
    switch (k) {
    case VerdictKind::SolvableBounded:
        return 0;
    case VerdictKind::UnsolvableCertified:
        return 10;
    case VerdictKind::UnsolvableAtAllDepths:
        return 11;
    case VerdictKind::Unknown:
        return 12;
    }
    return 12;
}

namespace {

auto same_task(const Task & a, const Task & b) -> bool
{
    return a.inputs == b.inputs && a.outputs == b.outputs && a.delta.entries() == b.delta.entries();
}

}

auto is_consensus_task(const Task & t) -> bool
{
    return t.process_count() >= 2 && same_task(t, inputless_consensus(t.process_count()));
}

auto is_set_agreement_task(const Task & t) -> bool
{
    return t.process_count() >= 2 && same_task(t, set_agreement(t.process_count()));
}

auto solve(const ModelSpec & m, const Task & t, int max_depth, SolveOptions options) -> Verdict
{
    if (max_depth < 0)
        throw Error(ErrorCode::BadIndices, "negative depth bound");
    Verdict v;
    v.model = m.name();
    v.task = t.name;
    v.max_depth = max_depth;
    v.seed = options.seed;

    SearchOptions search_options;
    search_options.node_budget = options.node_budget;
    for (int T = 0; T <= max_depth; ++T) {
        auto PT = build_time_T(m, t, T);
        auto found = search_decision_map(PT, t, search_options);
        v.searches.push_back(found.status);
        if (found.status != SearchStatus::Found)
            continue;

        if (! check_decision_map(PT, t, *found.map).ok())
            throw Error(ErrorCode::InvalidCarrier, "search returned a map that fails verification");
        v.kind = VerdictKind::SolvableBounded;
        v.T = T;
        v.protocol = synthesize_from_time_map(*found.map, PT);
        v.protocol_check = check_solves(*v.protocol, t, m, T).status;
        v.map = std::move(found.map);
        if (*v.protocol_check != SolveStatus::Pass)
            v.notes.push_back("synthesized protocol did not pass simulation at depth " + std::to_string(T));
        return v;
    }

    bool exhaustive = std::all_of(v.searches.begin(), v.searches.end(), [](SearchStatus s) { return s == SearchStatus::None; });
    if (! exhaustive)
        v.notes.push_back("search budget exhausted at some depth; bounded non-existence not established");

    if (m.process_count() == 2 && is_consensus_task(t)) {
        v.certificate = certify_consensus_impossible(m, max_depth);
        if (v.certificate) {
            v.kind = VerdictKind::UnsolvableCertified;
            return v;
        }
    }
    if (m.process_count() == 3 && is_set_agreement_task(t)) {
        v.sperner = sperner_evidence(3, std::min(max_depth, 2), options.seed);
        v.notes.push_back("Sperner parity evidence attached; it is evidence, not a certificate");
    }

    if (exhaustive && m.excluded().empty())
        v.kind = VerdictKind::UnsolvableAtAllDepths;
    else
        v.kind = VerdictKind::Unknown;
    return v;
}

}
