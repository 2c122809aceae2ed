#include <chrotop/error.hpp>
#include <chrotop/terminating.hpp>

#include <algorithm>
#include <map>

namespace chrotop {

auto terminate_all_at(int depth) -> TerminationPolicy
{
    return [depth](const Cell &, int k) { return k >= depth; };
}

auto never_terminate() -> TerminationPolicy
{
    return [](const Cell &, int) { return false; };
}

auto terminate_words(std::vector<Word> words) -> TerminationPolicy
{
    std::sort(words.begin(), words.end());
    return [words = std::move(words)](const Cell & cell, int) {
        return std::any_of(cell.words.begin(), cell.words.end(),
            [&](const Word & w) { return std::binary_search(words.begin(), words.end(), w); });
    };
}

auto eager_policy(const ModelSpec & m, int min_depth) -> TerminationPolicy
{
    return [m, min_depth](const Cell & cell, int k) {
        if (k < min_depth)
            return false;
        bool reachable = false;
        for (auto & w : cell.words) {
            if (! m.allowed_prefix(w))
                continue;
            reachable = true;
            for (auto & e : m.excluded()) {
                bool on_path = true;
                for (std::size_t i = 0; i < w.size() && on_path; ++i)
                    on_path = w[i] == e.at(i);
                if (on_path)
                    return false;
            }
        }
        return reachable;
    };
}

TerminatingSubdivision::TerminatingSubdivision(Complex base, TerminationPolicy policy) :
    policy_(std::move(policy)),
    realization_(std::make_shared<Realization>(base))
{
    if (! base.is_pure() || ! base.is_chromatic())
        throw Error(ErrorCode::NotChromatic, "terminating subdivision needs a pure chromatic base");
    std::vector<Cell> initial;
    for (std::size_t i = 0; i < base.facets().size(); ++i)
        initial.push_back(Cell{base.facets()[i], i, {Word{}}, 0, std::nullopt});
    levels_.push_back(std::move(base));
    cells_.push_back(std::move(initial));
    close_level();
}

void TerminatingSubdivision::close_level()
{
    auto k = static_cast<int>(levels_.size()) - 1;
    std::vector<Simplex> stable;
    for (auto & cell : cells_.back()) {
        if (! cell.terminated && policy_(cell, k))
            cell.terminated = k;
        if (cell.terminated)
            stable.push_back(cell.facet);
    }
    sigmas_.push_back(Complex::from_facets(levels_.back().process_count(), std::move(stable)));
}

void TerminatingSubdivision::materialize(int depth)
{
    while (max_depth() < depth) {
        auto & current = cells_.back();
        auto & sigma = sigmas_.back();
        auto next_depth = max_depth() + 1;

        std::map<Simplex, Cell> merged;
        for (auto & cell : current) {
            if (cell.terminated) {
                merged.emplace(cell.facet, cell);
                continue;
            }
            for (auto & s : ordered_partitions(colors_of(cell.facet))) {
                Simplex facet;
                for (auto & v : cell.facet) {
                    auto seen = s.view_of(v.color);
                    Simplex carrier;
                    for (auto & u : cell.facet)
                        if (std::binary_search(seen.begin(), seen.end(), u.color))
                            carrier.push_back(u);
                    if (sigma.contains(carrier))
                        facet.push_back(*vertex_with_color(carrier, v.color));
                    else
                        facet.push_back(Vertex{v.color, encode_carrier(carrier)});
                }
                std::sort(facet.begin(), facet.end());

                auto [it, fresh] = merged.try_emplace(facet, Cell{facet, cell.base_facet, {}, next_depth, std::nullopt});
                for (auto w : cell.words) {
                    w.push_back(s);
                    it->second.words.push_back(std::move(w));
                }
                (void)fresh;
            }
        }

        std::vector<Cell> next;
        std::vector<Simplex> facets;
        for (auto & [facet, cell] : merged) {
            std::sort(cell.words.begin(), cell.words.end());
            facets.push_back(facet);
            next.push_back(std::move(cell));
        }
        levels_.push_back(Complex::from_facets(levels_.back().process_count(), std::move(facets)));
        cells_.push_back(std::move(next));
        close_level();
    }
}

auto TerminatingSubdivision::level(int k) const -> const Complex &
{
    if (k < 0 || k > max_depth())
        throw Error(ErrorCode::BadIndices, "depth " + std::to_string(k) + " not materialized");
    return levels_[static_cast<std::size_t>(k)];
}

auto TerminatingSubdivision::terminated(int k) const -> const Complex &
{
    if (k < 0 || k > max_depth())
        throw Error(ErrorCode::BadIndices, "depth " + std::to_string(k) + " not materialized");
    return sigmas_[static_cast<std::size_t>(k)];
}

auto TerminatingSubdivision::cells(int k) const -> const std::vector<Cell> &
{
    if (k < 0 || k > max_depth())
        throw Error(ErrorCode::BadIndices, "depth " + std::to_string(k) + " not materialized");
    return cells_[static_cast<std::size_t>(k)];
}

auto stable_complex(const TerminatingSubdivision & t, int depth) -> Complex
{
    return t.terminated(depth);
}

auto stable_cells(const TerminatingSubdivision & t, int depth) -> std::vector<Cell>
{
    std::vector<Cell> out;
    for (auto & c : t.cells(depth))
        if (c.terminated)
            out.push_back(c);
    return out;
}

}
