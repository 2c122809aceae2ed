#pragma once

#include <chrotop/complex.hpp>
#include <chrotop/models.hpp>
#include <chrotop/subdivision.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chrotop {

/// A facet of some I_k together with the schedule words whose IIS cells it
/// covers. A facet produced by collapsing along terminated faces carries
/// several words.
struct Cell {
    Simplex facet;
    std::size_t base_facet = 0;
    std::vector<Word> words;
    int created = 0;
    std::optional<int> terminated;
};

/// Decides, at depth k, whether a not yet terminated cell of I_k joins Sigma_k.
using TerminationPolicy = std::function<bool(const Cell & cell, int depth)>;

auto terminate_all_at(int depth) -> TerminationPolicy;
auto never_terminate() -> TerminationPolicy;

/// Terminates a cell as soon as one of its words is listed.
auto terminate_words(std::vector<Word> words) -> TerminationPolicy;

/// Terminates, from min_depth on, every cell reachable in the model that does
/// not lie on the path of an excluded execution.
auto eager_policy(const ModelSpec & m, int min_depth = 1) -> TerminationPolicy;

/// Lazily materialized sequence (I_k, Sigma_k).
class TerminatingSubdivision {
public:
    TerminatingSubdivision(Complex base, TerminationPolicy policy);

    void materialize(int depth);
    auto max_depth() const -> int { return static_cast<int>(levels_.size()) - 1; }

    auto base() const -> const Complex & { return levels_.front(); }
    auto level(int k) const -> const Complex &;
    auto terminated(int k) const -> const Complex &;
    auto cells(int k) const -> const std::vector<Cell> &;
    auto realization() const -> const Realization & { return *realization_; }
    auto shared_realization() const -> std::shared_ptr<const Realization> { return realization_; }

private:
    void close_level();

    TerminationPolicy policy_;
    std::shared_ptr<const Realization> realization_;
    std::vector<Complex> levels_;
    std::vector<Complex> sigmas_;
    std::vector<std::vector<Cell>> cells_;
};

/// K(T) up to `depth`: Sigma_depth, which contains every earlier Sigma_k.
auto stable_complex(const TerminatingSubdivision & t, int depth) -> Complex;

/// Cells of Sigma_depth (stable cells) with their data.
auto stable_cells(const TerminatingSubdivision & t, int depth) -> std::vector<Cell>;

}
