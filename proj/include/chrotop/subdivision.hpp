#pragma once

#include <chrotop/complex.hpp>
#include <chrotop/rational.hpp>
#include <chrotop/schedule.hpp>

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace chrotop {

/// Label of the subdivision vertex (p, carrier): "{c:label,c:label}" over the
/// canonically ordered carrier. Nested labels encode the whole carrier chain,
/// so a depth-k label is also the k-round full-information view of p.
auto encode_carrier(const Simplex & carrier) -> std::string;

/// True iff the label is an encoded carrier rather than a base label.
auto is_encoded(const std::string & label) -> bool;

/// Inverse of encode_carrier; ParseError on malformed input.
auto decode_carrier(const std::string & label) -> Simplex;

/// Input vertices reached by following the carrier chain down to base labels.
auto base_carrier(const Vertex & v) -> Simplex;

/// Number of carrier levels above the base (0 for base labels). For a vertex
/// of a uniform subdivision this is its depth.
auto label_depth(const Vertex & v) -> int;

/// The same process's vertex `steps` levels down the carrier chain.
auto ancestor(const Vertex & v, int steps) -> Vertex;

/// Standard chromatic subdivision. Throws NotChromatic unless `k` is pure and
/// chromatic.
auto chr(const Complex & k) -> Complex;
auto chr_iter(const Complex & k, int times) -> Complex;

/// Barycentric coordinates over the vertices of a fixed base complex, indexed
/// in the base's canonical vertex order.
struct BarycentricPoint {
    std::vector<Rational> weights;

    auto operator==(const BarycentricPoint &) const -> bool = default;
    auto sum() const -> Rational;
};

/// Half the 1-norm, so distinct base vertices are at distance 1.
/// BaseMismatch if the points live over different bases.
auto distance(const BarycentricPoint & a, const BarycentricPoint & b) -> Rational;

/// Exact geometric placement of subdivision vertices over a base complex.
///
/// (p, carrier) sits at weight 1/(2s-1) on p's carrier vertex and 2/(2s-1) on
/// each other carrier vertex, s = |carrier|, composed down the chain. Thread
/// safe; points are memoized.
class Realization {
public:
    explicit Realization(Complex base);

    auto base() const -> const Complex & { return base_; }
    auto dimension() const -> std::size_t { return base_.vertices().size(); }

    /// UnknownVertex if the chain does not bottom out in base vertices.
    auto point(const Vertex & v) const -> BarycentricPoint;
    auto points(const Simplex & s) const -> std::vector<BarycentricPoint>;
    auto base_index(const Vertex & v) const -> std::size_t;

    /// Smallest base simplex whose closed realization contains the points.
    auto support(const std::vector<BarycentricPoint> & points) const -> Simplex;

private:
    Complex base_;
    std::unordered_map<Vertex, std::size_t, VertexHash> index_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<Vertex, BarycentricPoint, VertexHash> cache_;
};

/// Point of `v`, which must be a vertex of the materialized complex `k`.
auto coordinates(const Vertex & v, const Complex & k, const Realization & r) -> BarycentricPoint;

/// Max pairwise vertex distance over the facets of Chr^k(base), computed
/// from the schedule matrices of all length-k words.
auto diameter_Dk(const Complex & base, int k) -> Rational;

/// Same quantity measured on an explicit complex (the defining form).
auto diameter_of(const Complex & k, const Realization & r) -> Rational;

/// Volume of a simplex relative to its base facet: |det| of the barycentric
/// coordinates restricted to `base_facet`. Requires a full-dimensional cell.
auto relative_volume(const std::vector<BarycentricPoint> & cell, const Simplex & base_facet, const Realization & r)
    -> Rational;

/// True iff every point of `inner` lies in the closed convex hull of `outer`.
/// Exact; BaseMismatch on incompatible coordinate vectors.
auto geometric_containment(const std::vector<BarycentricPoint> & inner, const std::vector<BarycentricPoint> & outer)
    -> bool;

using Matrix = std::vector<std::vector<Rational>>;

/// One round as a row-stochastic matrix over the sorted `colors`: row p puts
/// the placement weights on the columns of the processes p sees.
auto schedule_matrix(const Schedule & s, const std::vector<ProcessId> & colors) -> Matrix;

/// A_{w_k} ... A_{w_1}: row p gives p's cell vertex in terms of the corners.
auto word_matrix(const Word & w, const std::vector<ProcessId> & colors) -> Matrix;
auto multiply(const Matrix & a, const Matrix & b) -> Matrix;

/// Corner points of the cell reached by `w` inside `base_facet`, ordered by
/// color.
auto cell_points(const Word & w, const Simplex & base_facet, const Realization & r) -> std::vector<BarycentricPoint>;

/// One partial subdivision step: facets of `sigma` are kept, every other facet
/// is replaced by its chromatic subdivision in which each (p, s) with s a
/// terminated simplex collapses onto the p-colored vertex of s.
/// InvalidTermination unless sigma is a subcomplex of `current`.
auto partial_chr_step(const Complex & current, const Complex & sigma) -> Complex;

}
