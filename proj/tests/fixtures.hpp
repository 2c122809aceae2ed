#pragma once

#include <chrotop/protocol.hpp>

#include <random>

namespace fixtures {

// Random table deciding by round T on every execution of m: each view chain
// gets an entry at a random depth, at the latest at T.
inline auto random_table(const chrotop::ModelSpec & m, const chrotop::Task & t, int T, std::mt19937_64 & rng)
    -> std::shared_ptr<const chrotop::TableProtocol>
{
    std::map<chrotop::Vertex, std::string> entries;
    std::uniform_int_distribution<int> coin(0, 3), value(0, 1);
    for (auto & ev : chrotop::enumerate_executions(m, t.inputs, T))
        for (auto & h : ev.history) {
            bool covered = false;
            for (int k = 0; k <= T && ! covered; ++k)
                covered = entries.contains(h[static_cast<std::size_t>(k)]);
            if (covered)
                continue;
            for (int k = 1; k <= T; ++k)
                if (k == T || coin(rng) == 0) {
                    entries.emplace(h[static_cast<std::size_t>(k)], std::to_string(value(rng)));
                    break;
                }
        }
    return std::make_shared<chrotop::TableProtocol>(std::move(entries));
}

}
