#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chrotop {

/// Index of a process in 0..n-1; doubles as the color of a vertex.
using ProcessId = int;

/// A vertex is identified by its color together with its label. Labels are
/// input values, output values, or view identifiers (carrier-chain encodings,
/// see subdivision.hpp); the surrounding complex determines which.
struct Vertex {
    ProcessId color = 0;
    std::string label;

    auto operator<=>(const Vertex &) const = default;
    auto operator==(const Vertex &) const -> bool = default;
};

struct VertexHash {
    auto operator()(const Vertex & v) const noexcept -> std::size_t;
};

auto to_string(const Vertex & v) -> std::string;

/// Canonically ordered vertex set: sorted by (color, label), no duplicates.
using Simplex = std::vector<Vertex>;

/// Sorts the vertices and rejects duplicated (color, label) pairs.
auto make_simplex(std::vector<Vertex> vertices) -> Simplex;

auto to_string(const Simplex & s) -> std::string;
auto colors_of(const Simplex & s) -> std::vector<ProcessId>;
auto has_distinct_colors(const Simplex & s) -> bool;
auto is_face_of(const Simplex & face, const Simplex & of) -> bool;
auto vertex_with_color(const Simplex & s, ProcessId p) -> const Vertex *;

/// Finite simplicial complex stored by its facets; faces are implicit.
///
/// Facets are kept in canonical order and are pairwise non-nested. The
/// object is immutable once built, so it can be shared across threads.
class Complex {
public:
    Complex() = default;

    static auto empty(int n) -> Complex;

    /// Builds the face closure of the given simplexes. Non-maximal inputs are
    /// dropped; an empty list yields the empty complex.
    static auto from_facets(int n, std::vector<Simplex> facets) -> Complex;

    auto process_count() const -> int { return n_; }
    auto facets() const -> const std::vector<Simplex> & { return facets_; }
    auto vertices() const -> const std::vector<Vertex> & { return vertices_; }
    auto is_empty() const -> bool { return facets_.empty(); }

    /// -1 for the empty complex.
    auto dimension() const -> int;
    auto is_pure() const -> bool;
    auto is_chromatic() const -> bool;

    auto contains(const Simplex & s) const -> bool;
    auto contains_vertex(const Vertex & v) const -> bool;
    auto facets_containing(const Vertex & v) const -> std::span<const std::size_t>;

    /// Every nonempty simplex, in canonical order.
    auto faces() const -> std::vector<Simplex>;
    auto is_subcomplex_of(const Complex & other) const -> bool;

    auto operator==(const Complex & other) const -> bool
    {
        return n_ == other.n_ && facets_ == other.facets_;
    }

private:
    int n_ = 0;
    std::vector<Simplex> facets_;
    std::vector<Vertex> vertices_;
    std::unordered_map<Vertex, std::vector<std::size_t>, VertexHash> incidence_;
};

/// Face closure of a nonempty facet list.
auto close_faces(int n, std::vector<Simplex> facets) -> Complex;

auto star(const Complex & k, const Simplex & s) -> Complex;

/// Subcomplex of the simplexes whose colors all lie in `colors`.
auto restrict_to_colors(const Complex & k, const std::vector<ProcessId> & colors) -> Complex;
auto intersect(const Complex & a, const Complex & b) -> Complex;
auto unite(const Complex & a, const Complex & b) -> Complex;

using SimplicialMapData = std::map<Vertex, Vertex>;

/// Image set h[s]; throws IncompleteMap if some vertex is unmapped.
auto image_of(const SimplicialMapData & h, const Simplex & s) -> Simplex;

struct SimplicialReport {
    bool simplicial = true;
    bool chromatic = true;
    std::optional<Simplex> simplicial_witness;
    std::optional<Vertex> chromatic_witness;

    auto ok() const -> bool { return simplicial && chromatic; }
};

auto check_simplicial_chromatic(const SimplicialMapData & h, const Complex & k, const Complex & l)
    -> SimplicialReport;

/// Carrier map stored extensionally. Simplexes without an explicit entry take
/// the intersection of the color restrictions of every stored superset.
class CarrierMapData {
public:
    void set(Simplex s, Complex image);
    auto image(const Simplex & s) const -> Complex;
    auto has_entry(const Simplex & s) const -> bool { return entries_.contains(s); }
    auto entries() const -> const std::map<Simplex, Complex> & { return entries_; }

private:
    std::map<Simplex, Complex> entries_;
};

struct CarrierReport {
    bool monotone = true;
    bool rigid = true;
    bool chromatic = true;
    std::optional<std::pair<Simplex, Simplex>> monotonicity_witness;
    std::optional<Simplex> chromatic_witness;
};

/// Throws InvalidCarrier if some image is not a subcomplex of `l`.
auto check_carrier_map(const CarrierMapData & phi, const Complex & k, const Complex & l) -> CarrierReport;

struct CarriedReport {
    bool carried = true;
    std::optional<Simplex> input_witness;
    std::optional<Simplex> execution_witness;
};

/// True iff delta[tau] lies in Delta(sigma) for every sigma of `inputs` and
/// every tau of Xi(sigma).
auto carried_by(const SimplicialMapData & delta, const CarrierMapData & xi, const CarrierMapData & task_delta,
    const Complex & inputs) -> CarriedReport;

}
