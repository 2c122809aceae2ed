// chrotop: subdivide, check and run from the command line.
//
// Exit codes
//   check:  0 solvable within the bound, 10 certified unsolvable,
//           11 no map at any searched depth, 12 unknown
//   run:    0 PASS, 1 FAIL, 4 UNDECIDED, 3 irrevocability violation
//   all:    2 bad arguments or unreadable input, 5 other library errors

#include <chrotop/error.hpp>
#include <chrotop/export.hpp>
#include <chrotop/json_io.hpp>
#include <chrotop/solve.hpp>
#include <chrotop/subdivision.hpp>
#include <chrotop/terminating.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace chrotop;
namespace fs = std::filesystem;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_irrevocable = 3;
constexpr int exit_library = 5;

struct RunConfig {
    std::string model = "iis2";
    std::string task = "consensus";
    std::string protocol;
    std::string out;
    std::string format;
    int simplex = 1;
    int k = 1;
    int depth = 2;
    int max_depth = 5;
    std::uint64_t seed = 1;
    std::size_t budget = SolveOptions{}.node_budget;
    bool subdivide_by_model = false;
};

auto looks_like_path(const std::string & ref) -> bool
{
    return ref.find('/') != std::string::npos || ref.ends_with(".json") || fs::exists(ref);
}

auto load_model(const std::string & ref) -> ModelSpec
{
    if (looks_like_path(ref))
        return model_from_json(read_json_file(ref));
    return builtin_model(ref);
}

auto load_task(const std::string & ref, int n) -> Task
{
    if (ref == "consensus")
        return inputless_consensus(n);
    if (ref == "set-agreement")
        return set_agreement(n);
    if (looks_like_path(ref))
        return task_from_json(read_json_file(ref));
    throw Error(ErrorCode::ParseError, "unknown task '" + ref + "'");
}

auto load_protocol(const std::string & ref) -> ProtocolPtr
{
    if (looks_like_path(ref))
        return table_from_json(read_json_file(ref));
    return builtin_protocol(ref);
}

void emit(const std::string & text, const std::string & path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (! out)
        throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << text;
}

auto base_simplex(int dim) -> Complex
{
    Simplex s;
    for (int i = 0; i <= dim; ++i)
        s.push_back(Vertex{i, std::to_string(i)});
    return Complex::from_facets(dim + 1, {s});
}

auto cmd_subdivide(const RunConfig & cfg) -> int
{
    if (cfg.simplex < 0 || cfg.k < 0)
        throw Error(ErrorCode::ParseError, "--simplex and --k must be non-negative");
    if (cfg.simplex >= 2 && cfg.k > 4)
        throw Error(ErrorCode::Unsupported, "k > 4 is not supported for triangles and above");

    auto base = base_simplex(cfg.simplex);
    TerminationPolicy policy = never_terminate();
    if (cfg.subdivide_by_model) {
        auto m = load_model(cfg.model);
        if (m.process_count() != cfg.simplex + 1)
            throw Error(ErrorCode::BaseMismatch, "model has " + std::to_string(m.process_count()) + " processes");
        policy = eager_policy(m);
    }
    TerminatingSubdivision t(base, policy);
    t.materialize(cfg.k);
    auto & level = t.level(cfg.k);

    std::cout << "base dimension: " << cfg.simplex << "\n";
    std::cout << "k: " << cfg.k << "\n";
    std::cout << "facets: " << level.facets().size() << "\n";
    std::cout << "vertices: " << level.vertices().size() << "\n";
    if (cfg.subdivide_by_model)
        std::cout << "stable facets: " << stable_complex(t, cfg.k).facets().size() << "\n";
    std::cout << "D_k: " << to_string(diameter_Dk(base, cfg.k)) << "\n";

    bool svg_ok = cfg.simplex >= 1 && cfg.simplex <= 2;
    auto wants = [&](const std::string & f) { return cfg.format.empty() || cfg.format == f; };

    if (! cfg.out.empty()) {
        fs::create_directories(cfg.out);
        auto dir = fs::path(cfg.out);
        if (wants("json")) {
            auto doc = to_json(level);
            doc = Json{{"schema", schema_version}, {"k", cfg.k}, {"n", doc["n"]}, {"facets", doc["facets"]}};
            emit(doc.dump(2) + "\n", (dir / "complex.json").string());
        }
        if (wants("dot"))
            emit(to_dot(level), (dir / "complex.dot").string());
        if (wants("svg")) {
            if (svg_ok)
                emit(to_svg(t, cfg.k), (dir / "complex.svg").string());
            else
                std::cout << "notice: no SVG for dimension " << cfg.simplex << ", wrote JSON and DOT only\n";
        }
    }
    return 0;
}

auto cmd_check(const RunConfig & cfg) -> int
{
    if (cfg.max_depth < 0)
        throw Error(ErrorCode::ParseError, "--max-depth must be non-negative");
    auto m = load_model(cfg.model);
    auto t = load_task(cfg.task, m.process_count());
    if (t.process_count() != m.process_count())
        throw Error(ErrorCode::BaseMismatch, "task and model disagree on the number of processes");

    auto verdict = solve(m, t, cfg.max_depth, SolveOptions{cfg.seed, cfg.budget});
    emit(to_json(verdict).dump(2) + "\n", cfg.out);
    if (! cfg.out.empty())
        std::cout << to_string(verdict.kind) << "\n";
    return exit_code(verdict.kind);
}

auto run_text(const SolveReport & report, const std::string & protocol) -> std::string
{
    std::ostringstream out;
    out << "protocol: " << protocol << "\n";
    out << "depth: " << report.run.depth << "\n";
    for (auto & prefix : report.run.prefixes) {
        out << "  [" << prefix.input_facet << "] " << to_display(prefix.word) << " :";
        for (auto & po : prefix.processes) {
            out << " p" << po.process << "=";
            if (po.value)
                out << *po.value << "@" << po.round;
            else
                out << "-";
        }
        out << "\n";
    }
    if (report.witness) {
        out << "witness: " << to_display(report.run.prefixes[*report.witness].word) << " decided "
            << to_string(report.witness_decisions) << " having heard of " << to_string(report.witness_carrier)
            << "\n";
    }
    out << "undecided prefixes: " << report.undecided.size() << "\n";
    out << to_string(report.status) << "\n";
    return out.str();
}

auto cmd_run(const RunConfig & cfg) -> int
{
    if (cfg.depth < 0)
        throw Error(ErrorCode::ParseError, "--depth must be non-negative");
    if (cfg.protocol.empty())
        throw Error(ErrorCode::ParseError, "--protocol is required");
    auto m = load_model(cfg.model);
    auto t = load_task(cfg.task, m.process_count());
    auto p = load_protocol(cfg.protocol);

    SolveReport report;
    try {
        report = check_solves(*p, t, m, cfg.depth);
    }
    catch (const Error & e) {
        if (e.code() != ErrorCode::IrrevocabilityViolation)
            throw;
        std::cout << "IRREVOCABILITY VIOLATION\n" << e.what() << "\n";
        return exit_irrevocable;
    }

    if (cfg.format == "json")
        emit(to_json(report).dump(2) + "\n", cfg.out);
    else
        emit(run_text(report, p->name()), cfg.out);

    switch (report.status) {
    case SolveStatus::Pass:
        return 0;
    case SolveStatus::Fail:
        return 1;
    case SolveStatus::Undecided:
        return 4;
    }
    return exit_library;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"chrotop: chromatic subdivisions and task solvability in sub-IIS models"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto * sub = app.add_subcommand("subdivide", "iterated chromatic subdivision of a simplex");
    sub->add_option("--simplex", cfg.simplex, "dimension of the base simplex")->capture_default_str();
    sub->add_option("--k", cfg.k, "number of subdivision rounds")->capture_default_str();
    sub->add_option("--model", cfg.model, "terminate cells as the model allows (builtin or JSON path)")
        ->each([&](const std::string &) { cfg.subdivide_by_model = true; });
    sub->add_option("--out", cfg.out, "directory for complex.json, complex.dot and complex.svg");
    sub->add_option("--format", cfg.format, "write only this format")->check(CLI::IsMember({"json", "dot", "svg"}));

    auto * check = app.add_subcommand("check", "decide solvability of a task in a model");
    check->add_option("--model", cfg.model, "builtin name or JSON path")->capture_default_str();
    check->add_option("--task", cfg.task, "consensus, set-agreement or JSON path")->capture_default_str();
    check->add_option("--max-depth,--depth", cfg.max_depth, "largest time bound searched")->capture_default_str();
    check->add_option("--seed", cfg.seed, "seed for sampled evidence")->capture_default_str();
    check->add_option("--budget", cfg.budget, "search node budget per subtree")->capture_default_str();
    check->add_option("--out", cfg.out, "write the JSON verdict here instead of stdout");
    check->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json"}));

    auto * runc = app.add_subcommand("run", "simulate a protocol on every allowed prefix");
    runc->add_option("--model", cfg.model, "builtin name or JSON path")->capture_default_str();
    runc->add_option("--task", cfg.task, "consensus, set-agreement or JSON path")->capture_default_str();
    runc->add_option("--protocol", cfg.protocol, "constant:<v>, own-input, winner, never or JSON table path")
        ->required();
    runc->add_option("--depth,--max-depth", cfg.depth, "number of rounds")->capture_default_str();
    runc->add_option("--out", cfg.out, "write the report here instead of stdout");
    runc->add_option("--format", cfg.format, "text (default) or json")->check(CLI::IsMember({"text", "json"}));
    runc->add_option("--seed", cfg.seed, "recorded for reproducibility");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (sub->parsed())
            return cmd_subdivide(cfg);
        if (check->parsed())
            return cmd_check(cfg);
        return cmd_run(cfg);
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? exit_usage : exit_library;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_library;
    }
}
