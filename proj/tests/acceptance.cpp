// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact (rational equality, integer counts, byte equality); no tolerances.
//
// usage: acceptance <path to the chrotop executable>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrotop/certificates.hpp>
#include <chrotop/metric.hpp>
#include <chrotop/search.hpp>
#include <chrotop/solve.hpp>
#include <chrotop/subdivision.hpp>
#include <chrotop/time_complex.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace chrotop;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

auto simplex(int n) -> Complex
{
    Simplex s;
    for (int i = 0; i < n; ++i)
        s.push_back(Vertex{i, std::to_string(i)});
    return Complex::from_facets(n, {s});
}

auto subdivision_counts() -> Outcome
{
    Outcome o;
    std::ostringstream d;
    for (auto [n, k, expected] : std::array<std::array<int, 3>, 4>{{{2, 1, 3}, {3, 1, 13}, {2, 2, 9}, {3, 2, 169}}}) {
        auto lib = chr_iter(simplex(n), k).facets().size();
        std::vector<oracle::Facet> brute{oracle::standard_facet(n)};
        for (int i = 0; i < k; ++i)
            brute = oracle::chr(brute);
        auto partitions = 1ull;
        for (int i = 0; i < k; ++i)
            partitions *= oracle::ordered_partitions(n);
        bool ok = lib == static_cast<std::size_t>(expected) && brute.size() == lib && partitions == lib;
        o.pass = o.pass && ok;
        d << "n=" << n << ",k=" << k << ":" << lib << " ";
    }
    o.detail = d.str() + "(oracle: ordered partitions and brute-force snapshot views)";
    return o;
}

auto geometry() -> Outcome
{
    Outcome o;
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k) {
            auto base = simplex(n);
            Realization r(base);
            auto sub = chr_iter(base, k);
            if (n == 1) {
                o.pass = o.pass && sub.facets().size() == 1;
                continue;
            }
            Rational total = 0;
            for (auto & f : sub.facets())
                total += relative_volume(r.points(f), base.facets()[0], r);
            o.pass = o.pass && total == 1;
        }
    auto edge = simplex(2);
    Realization r(edge);
    for (int k = 0; k <= 4; ++k) {
        auto measured = diameter_of(chr_iter(edge, k), r);
        o.pass = o.pass && measured == inverse_power(3, k) && diameter_Dk(edge, k) == inverse_power(3, k);
    }
    o.detail = "volume sums = 1 for n<=3, k<=3; D_k = 3^-k for k<=4 (exact rationals)";
    return o;
}

auto to_word(const std::vector<std::string> & w) -> Word
{
    Word out;
    for (auto & s : w)
        out.push_back(parse_schedule(s, 2));
    return out;
}

auto ultrametric() -> Outcome
{
    std::size_t violations = 0, pairs = 0;
    auto words = oracle::all_words(4);
    std::vector<Word> lib;
    for (auto & w : words)
        lib.push_back(to_word(w));
    auto n = lib.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            d[i][j] = exec_distance(lib[i], lib[j], true).value;
            violations += oracle::Q(d[i][j]) != oracle::prefix_distance(words[i], words[j]);
            violations += (d[i][j] == 0) != (i == j);
            ++pairs;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            violations += d[i][j] != d[j][i];
            for (std::size_t k = 0; k < n; ++k)
                violations += d[i][k] > std::max(d[i][j], d[j][k]);
        }

    Simplex inputs{Vertex{0, "0"}, Vertex{1, "1"}};
    std::vector<ViewSequence> seqs;
    for (auto & w : lib) {
        auto ev = compute_views(inputs, w);
        seqs.push_back(ev.sequence(0));
        seqs.push_back(ev.sequence(1));
    }
    auto m = seqs.size();
    std::vector<std::vector<Rational>> v(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            v[i][j] = view_distance(seqs[i], seqs[j], true).value;
            bool same = seqs[i].process == seqs[j].process && seqs[i].views == seqs[j].views;
            violations += (v[i][j] == 0) != same;
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            violations += v[i][j] != v[j][i];
            for (std::size_t k = 0; k < m; ++k)
                violations += v[i][k] > std::max(v[i][j], v[j][k]);
        }

    std::size_t ball_pairs = 0;
    std::function<Rational(const Word &, const Word &)> dist = [](const Word & a, const Word & b) {
        return exec_distance(a, b, true).value;
    };
    for (int depth = 0; depth <= 3; ++depth) {
        std::vector<Word> universe;
        for (auto & w : oracle::all_words(depth))
            universe.push_back(to_word(w));
        std::vector<Ball<Word>> balls;
        for (auto & c : universe)
            for (int r = 0; r <= depth; ++r)
                balls.push_back(Ball<Word>{c, inverse_power(2, r)});
        for (auto & b1 : balls)
            for (auto & b2 : balls) {
                violations += ball_trichotomy<Word>(b1, b2, universe, dist) == BallRelation::Violation;
                ++ball_pairs;
            }
    }
    return {violations == 0, std::to_string(pairs) + " word pairs, " + std::to_string(m) + " view sequences, "
            + std::to_string(ball_pairs) + " ball pairs, violations=" + std::to_string(violations)};
}

auto functoriality() -> Outcome
{
    std::size_t bad = 0, checks = 0;
    auto t = inputless_consensus(2);
    for (auto m : {iis_model(2), m2_model()}) {
        std::vector<TimeTComplex> P;
        for (int T = 0; T <= 4; ++T)
            P.push_back(build_time_T(m, t, T));
        std::map<std::pair<int, int>, SimplicialMapData> f;
        for (int T = 0; T <= 4; ++T)
            for (int S = 0; S <= T; ++S)
                f[{S, T}] = connecting_map_fST(P[T], P[S]);
        for (int T = 0; T <= 4; ++T)
            for (int S = 0; S <= T; ++S)
                for (int R = 0; R <= S; ++R)
                    for (auto & v : P[T].complex.vertices()) {
                        bad += f[{R, T}].at(v) != f[{R, S}].at(f[{S, T}].at(v));
                        ++checks;
                    }
        for (auto & ev : P[4].executions)
            for (auto & h : ev.history)
                for (int S = 0; S <= 4; ++S) {
                    bad += f[{S, 4}].at(h[4]) != h[static_cast<std::size_t>(S)];
                    ++checks;
                }
    }
    return {bad == 0, std::to_string(checks) + " composition/projection checks on iis2 and m2, failures="
            + std::to_string(bad)};
}

auto run_cli(const std::string & cli, const std::string & args, int & status) -> std::string
{
    std::string cmd = cli + " " + args + " 2>&1";
    std::string out;
    FILE * pipe = popen(cmd.c_str(), "r");
    if (! pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

auto m1_solvable(const std::string & cli) -> Outcome
{
    int status = 0;
    run_cli(cli, "check --model m1 --task consensus --max-depth 3", status);

    auto t = inputless_consensus(2);
    auto m = m1_model();
    auto v = solve(m, t, 3);
    bool ok = status == 0 && v.kind == VerdictKind::SolvableBounded && v.T && *v.T <= 2 && v.protocol;
    std::size_t prefixes = 0;
    bool round_trip = false;
    if (ok) {
        auto report = check_solves(*v.protocol, t, m, 3);
        prefixes = report.run.prefixes.size();
        ok = report.status == SolveStatus::Pass && prefixes == 18;
        auto back = extract_map(*v.protocol, m, t, *v.T);
        round_trip = back.map == *v.map && back.locality_violations == 0;
        ok = ok && round_trip;
    }
    return {ok, "cli exit=" + std::to_string(status) + ", T=" + (v.T ? std::to_string(*v.T) : "-")
            + ", check_solves on " + std::to_string(prefixes) + " depth-3 prefixes, extract(synthesize)="
            + (round_trip ? "identity" : "differs")};
}

auto bounded_search_fails(const ModelSpec & m, const Task & t, int max_T, std::string & log) -> bool
{
    bool all_none = true;
    for (int T = 0; T <= max_T; ++T) {
        auto r = search_decision_map(build_time_T(m, t, T), t);
        all_none = all_none && r.status == SearchStatus::None;
        log += to_string(r.status).substr(0, 1);
    }
    return all_none;
}

auto iis_impossible() -> Outcome
{
    std::string log;
    auto t = inputless_consensus(2);
    bool none = bounded_search_fails(iis_model(2), t, 5, log);
    auto cert = certify_consensus_impossible(iis_model(2), 5);
    return {none && cert.has_value(), "search T=0..5 [" + log + "] exhaustive, certificate="
            + (cert ? std::string("emitted") : std::string("missing"))};
}

auto m2_impossible() -> Outcome
{
    std::string log;
    auto t = inputless_consensus(2);
    auto m = m2_model();
    bool none = bounded_search_fails(m, t, 5, log);
    auto cert = certify_consensus_impossible(m, 5);
    bool reconnected = cert && cert->realized.limits.size() == 1 && cert->realized.limits[0].twin.has_value();

    TerminatingSubdivision sub(t.inputs, eager_policy(m));
    sub.materialize(4);
    auto naive = consensus_component_map(sub, 4);
    auto gact = verify_gact_certificate(sub, naive, m, t, 4);
    bool rejected = gact.continuous == Check::Fail && gact.discontinuity && gact.discontinuity->excluded
        && normalize(*gact.discontinuity->excluded) == normalize(m.excluded()[0]);
    return {none && reconnected && rejected, "search T=0..5 [" + log + "], closure certificate="
            + (reconnected ? "fires via " + to_display(*cert->realized.limits[0].twin) : std::string("missing"))
            + ", naive map discontinuous at "
            + (rejected ? to_display(*gact.discontinuity->excluded) : std::string("(not found)"))};
}

auto sperner() -> Outcome
{
    auto r = sperner_evidence(3, 1);
    return {r.exhaustive && r.colorings == 1728 && r.all_odd(),
        std::to_string(r.colorings) + " colorings (exhaustive), rainbow counts in [" + std::to_string(r.min_rainbow)
            + "," + std::to_string(r.max_rainbow) + "], even=" + std::to_string(r.even_colorings)};
}

auto equivalence() -> Outcome
{
    auto m = iis_model(2);
    auto t = inputless_consensus(2);
    const int T = 3;
    TerminatingSubdivision sub(t.inputs, terminate_all_at(T));
    sub.materialize(T);
    std::mt19937_64 rng(20240601);
    std::size_t mismatches = 0, violations = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto table = fixtures::random_table(m, t, T, rng);
        auto delta = extract_map(*table, m, t, T);
        violations += delta.locality_violations;
        auto back = extract_map(*synthesize_from_map(delta.map, sub, T), m, t, T);
        violations += back.locality_violations;
        mismatches += back.map != delta.map;
    }
    return {mismatches == 0 && violations == 0, "50 random tables at T=3, mismatches=" + std::to_string(mismatches)
            + ", locality violations=" + std::to_string(violations)};
}

auto slurp_dir(const fs::path & dir) -> std::string
{
    std::string all;
    for (auto name : {"complex.json", "complex.dot", "complex.svg"}) {
        std::ifstream in(dir / name);
        std::stringstream ss;
        ss << in.rdbuf();
        all += ss.str();
    }
    return all;
}

auto determinism(const std::string & cli) -> Outcome
{
    std::vector<std::string> commands{
        "subdivide --simplex 2 --k 1",
        "subdivide --simplex 1 --k 2",
        "subdivide --simplex 1 --k 0",
        "subdivide --simplex 1 --k 3 --model m2",
        "check --model m1 --task consensus --max-depth 3",
        "check --model iis2 --task consensus --max-depth 5",
        "check --model m2 --task consensus --max-depth 5",
        "check --model iis3 --task set-agreement --max-depth 1 --seed 9",
        "run --model m1 --protocol winner --task consensus --depth 2",
        "run --model iis2 --protocol own-input --task consensus --depth 1",
        "run --model iis2 --protocol constant:0 --task consensus --depth 1 --format json",
    };
    std::size_t differing = 0;
    std::string first_bad;
    for (auto & c : commands) {
        int s1 = 0, s2 = 0;
        auto a = run_cli(cli, c, s1);
        auto b = run_cli(cli, c, s2);
        if (a != b || s1 != s2 || a.empty()) {
            ++differing;
            first_bad = c;
        }
    }
    auto base = fs::temp_directory_path() / "chrotop-acceptance";
    fs::remove_all(base);
    int s = 0;
    run_cli(cli, "subdivide --simplex 2 --k 2 --out " + (base / "a").string(), s);
    run_cli(cli, "subdivide --simplex 2 --k 2 --out " + (base / "b").string(), s);
    auto files_a = slurp_dir(base / "a"), files_b = slurp_dir(base / "b");
    bool files_same = ! files_a.empty() && files_a == files_b;
    fs::remove_all(base);
    return {differing == 0 && files_same, std::to_string(commands.size()) + " commands run twice, differing="
            + std::to_string(differing) + (first_bad.empty() ? "" : " (" + first_bad + ")")
            + ", exported files identical=" + (files_same ? "yes" : "no")};
}

}

int main(int argc, char ** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <chrotop executable>\n";
        return 2;
    }
    std::string cli = argv[1];

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"subdivision counts", subdivision_counts},
        {"geometry", geometry},
        {"ultrametric suite", ultrametric},
        {"functoriality", functoriality},
        {"M1 consensus solvable", [&] { return m1_solvable(cli); }},
        {"IIS consensus impossible", iis_impossible},
        {"M2 consensus impossible", m2_impossible},
        {"Sperner parity", sperner},
        {"protocol/map equivalence", equivalence},
        {"determinism", [&] { return determinism(cli); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        }
        catch (const std::exception & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += ! o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
