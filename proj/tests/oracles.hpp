#pragma once

// Reference computations written without the library, used to cross-check it.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

// Ordered set partitions of an n-set, by choosing the first block's size.
inline auto ordered_partitions(int n) -> std::uint64_t
{
    if (n == 0)
        return 1;
    std::uint64_t total = 0, binom = 1;
    for (int k = 1; k <= n; ++k) {
        binom = binom * static_cast<std::uint64_t>(n - k + 1) / static_cast<std::uint64_t>(k);
        total += binom * ordered_partitions(n - k);
    }
    return total;
}

using Vert = std::pair<int, std::string>;
using Facet = std::vector<Vert>;

// Immediate-snapshot view assignments on one facet: p sees itself, views
// are totally ordered by inclusion, and p seeing q means q's view is inside p's.
inline auto is_views(const Facet & f) -> std::vector<std::vector<unsigned>>
{
    auto m = f.size();
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> views(m);
    auto total = 1ull << (m * m);
    for (unsigned long long code = 0; code < total; ++code) {
        bool ok = true;
        for (std::size_t p = 0; p < m && ok; ++p) {
            views[p] = static_cast<unsigned>((code >> (p * m)) & ((1u << m) - 1));
            ok = (views[p] >> p) & 1u;
        }
        for (std::size_t p = 0; p < m && ok; ++p)
            for (std::size_t q = 0; q < m && ok; ++q) {
                auto a = views[p], b = views[q];
                ok = (a & b) == a || (a & b) == b;
                if (ok && ((a >> q) & 1u))
                    ok = (b & a) == b;
            }
        if (ok)
            out.push_back(views);
    }
    return out;
}

inline auto name(const Vert & v) -> std::string
{
    return std::to_string(v.first) + "=" + v.second;
}

// One subdivision round over explicit facets; new labels list the seen
// vertices, so equal labels mean equal vertices globally.
inline auto chr(const std::vector<Facet> & facets) -> std::vector<Facet>
{
    std::set<Facet> out;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        for (auto & views : is_views(f)) {
            Facet g;
            for (std::size_t p = 0; p < f.size(); ++p) {
                std::string label = "<";
                for (std::size_t q = 0; q < f.size(); ++q)
                    if ((views[p] >> q) & 1u)
                        label += name(f[q]) + ";";
                g.push_back({f[p].first, label + ">"});
            }
            out.insert(g);
        }
    }
    return {out.begin(), out.end()};
}

inline auto standard_facet(int n) -> Facet
{
    Facet f;
    for (int i = 0; i < n; ++i)
        f.push_back({i, std::to_string(i)});
    return f;
}

inline auto vertex_count(const std::vector<Facet> & facets) -> std::size_t
{
    std::set<Vert> vs;
    for (auto & f : facets)
        vs.insert(f.begin(), f.end());
    return vs.size();
}

// Determinant by fraction-exact elimination.
inline auto determinant(std::vector<std::vector<Q>> a) -> Q
{
    auto n = a.size();
    Q det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Q factor = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[r][k] -= factor * a[c][k];
        }
    }
    return det;
}

// Two-process IIS simulated on strings: "->" lets process 0 go alone.
// Returns, per process, the view after each round (entry 0 is the input).
inline auto two_process_views(const std::vector<std::string> & word) -> std::vector<std::vector<std::string>>
{
    std::vector<std::vector<std::string>> h{{"in0"}, {"in1"}};
    for (auto & s : word) {
        auto a = h[0].back(), b = h[1].back();
        bool zero_sees_one = s != "->";
        bool one_sees_zero = s != "<-";
        h[0].push_back(zero_sees_one ? "(" + a + "|" + b + ")" : "(" + a + ")");
        h[1].push_back(one_sees_zero ? "(" + a + "|" + b + ")" : "(" + b + ")");
    }
    return h;
}

inline auto all_words(int depth) -> std::vector<std::vector<std::string>>
{
    std::vector<std::vector<std::string>> out{{}};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::vector<std::string>> next;
        for (auto & w : out)
            for (const char * s : {"<->", "->", "<-"}) {
                auto x = w;
                x.push_back(s);
                next.push_back(x);
            }
        out = std::move(next);
    }
    return out;
}

// 2^{-i} for the first differing position, 0 if equal.
inline auto prefix_distance(const std::vector<std::string> & a, const std::vector<std::string> & b) -> Q
{
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i])
            return Q(1) / Q(boost::multiprecision::cpp_int(1) << i);
    return 0;
}

}
