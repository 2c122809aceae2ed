#include <chrotop/complex.hpp>
#include <chrotop/error.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace chrotop {

auto VertexHash::operator()(const Vertex & v) const noexcept -> std::size_t
{
    return std::hash<std::string>{}(v.label) * 31u + static_cast<std::size_t>(v.color);
}

auto to_string(const Vertex & v) -> std::string
{
    return "(" + std::to_string(v.color) + "," + v.label + ")";
}

auto make_simplex(std::vector<Vertex> vertices) -> Simplex
{
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw Error(ErrorCode::InvalidVertex, "duplicate vertex in simplex");
    return vertices;
}

auto to_string(const Simplex & s) -> std::string
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(s[i]);
    }
    return out + "}";
}

auto colors_of(const Simplex & s) -> std::vector<ProcessId>
{
    std::vector<ProcessId> colors;
    colors.reserve(s.size());
    for (auto & v : s)
        colors.push_back(v.color);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    return colors;
}

auto has_distinct_colors(const Simplex & s) -> bool
{
    return colors_of(s).size() == s.size();
}

auto is_face_of(const Simplex & face, const Simplex & of) -> bool
{
    return std::includes(of.begin(), of.end(), face.begin(), face.end());
}

auto vertex_with_color(const Simplex & s, ProcessId p) -> const Vertex *
{
    for (auto & v : s)
        if (v.color == p)
            return &v;
    return nullptr;
}

auto Complex::empty(int n) -> Complex
{
    Complex k;
    k.n_ = n;
    return k;
}

auto Complex::from_facets(int n, std::vector<Simplex> facets) -> Complex
{
    for (auto & f : facets) {
        if (f.empty())
            throw Error(ErrorCode::InvalidVertex, "empty simplex");
        f = make_simplex(std::move(f));
        for (auto & v : f)
            if (v.color < 0 || v.color >= n)
                throw Error(ErrorCode::InvalidVertex, "color out of range in " + to_string(v));
    }

    // Largest first, so a simplex is only compared against potential cofaces.
    std::sort(facets.begin(), facets.end(), [](const Simplex & a, const Simplex & b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    std::vector<Simplex> kept;
    std::unordered_map<Vertex, std::vector<std::size_t>, VertexHash> by_vertex;
    for (auto & f : facets) {
        bool dominated = false;
        if (auto it = by_vertex.find(f.front()); it != by_vertex.end())
            for (auto idx : it->second)
                if (kept[idx].size() > f.size() && is_face_of(f, kept[idx])) {
                    dominated = true;
                    break;
                }
        if (dominated)
            continue;
        for (auto & v : f)
            by_vertex[v].push_back(kept.size());
        kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());

    Complex k;
    k.n_ = n;
    k.facets_ = std::move(kept);
    for (std::size_t i = 0; i < k.facets_.size(); ++i)
        for (auto & v : k.facets_[i])
            k.incidence_[v].push_back(i);
    k.vertices_.reserve(k.incidence_.size());
    for (auto & [v, _] : k.incidence_)
        k.vertices_.push_back(v);
    std::sort(k.vertices_.begin(), k.vertices_.end());
    return k;
}

auto Complex::dimension() const -> int
{
    int dim = -1;
    for (auto & f : facets_)
        dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

auto Complex::is_pure() const -> bool
{
    return std::all_of(facets_.begin(), facets_.end(),
        [&](const Simplex & f) { return f.size() == facets_.front().size(); });
}

auto Complex::is_chromatic() const -> bool
{
    return std::all_of(facets_.begin(), facets_.end(), has_distinct_colors);
}

auto Complex::contains(const Simplex & s) const -> bool
{
    if (s.empty())
        return ! facets_.empty();
    auto it = incidence_.find(s.front());
    if (it == incidence_.end())
        return false;
    return std::any_of(it->second.begin(), it->second.end(),
        [&](std::size_t idx) { return is_face_of(s, facets_[idx]); });
}

auto Complex::contains_vertex(const Vertex & v) const -> bool
{
    return incidence_.contains(v);
}

auto Complex::facets_containing(const Vertex & v) const -> std::span<const std::size_t>
{
    auto it = incidence_.find(v);
    if (it == incidence_.end())
        return {};
    return it->second;
}

auto Complex::faces() const -> std::vector<Simplex>
{
    std::set<Simplex> all;
    for (auto & f : facets_) {
        auto count = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < count; ++i)
                if (mask & (std::size_t{1} << i))
                    face.push_back(f[i]);
            all.insert(std::move(face));
        }
    }
    return {all.begin(), all.end()};
}

auto Complex::is_subcomplex_of(const Complex & other) const -> bool
{
    return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex & f) { return other.contains(f); });
}

auto close_faces(int n, std::vector<Simplex> facets) -> Complex
{
    if (facets.empty())
        throw Error(ErrorCode::NotASimplex, "no facets given");
    return Complex::from_facets(n, std::move(facets));
}

auto star(const Complex & k, const Simplex & s) -> Complex
{
    if (s.empty() || ! k.contains(s))
        throw Error(ErrorCode::NotASimplex, to_string(s) + " is not a simplex of the complex");
    std::vector<Simplex> facets;
    for (auto idx : k.facets_containing(s.front()))
        if (is_face_of(s, k.facets()[idx]))
            facets.push_back(k.facets()[idx]);
    return Complex::from_facets(k.process_count(), std::move(facets));
}

auto restrict_to_colors(const Complex & k, const std::vector<ProcessId> & colors) -> Complex
{
    std::vector<Simplex> facets;
    for (auto & f : k.facets()) {
        Simplex kept;
        for (auto & v : f)
            if (std::find(colors.begin(), colors.end(), v.color) != colors.end())
                kept.push_back(v);
        if (! kept.empty())
            facets.push_back(std::move(kept));
    }
    return Complex::from_facets(k.process_count(), std::move(facets));
}

auto intersect(const Complex & a, const Complex & b) -> Complex
{
    std::vector<Simplex> common;
    for (auto & face : a.faces())
        if (b.contains(face))
            common.push_back(face);
    return Complex::from_facets(std::max(a.process_count(), b.process_count()), std::move(common));
}

auto unite(const Complex & a, const Complex & b) -> Complex
{
    auto facets = a.facets();
    facets.insert(facets.end(), b.facets().begin(), b.facets().end());
    return Complex::from_facets(std::max(a.process_count(), b.process_count()), std::move(facets));
}

auto image_of(const SimplicialMapData & h, const Simplex & s) -> Simplex
{
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (auto & v : s) {
        auto it = h.find(v);
        if (it == h.end())
            throw Error(ErrorCode::IncompleteMap, "no image for vertex " + to_string(v));
        out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto check_simplicial_chromatic(const SimplicialMapData & h, const Complex & k, const Complex & l)
    -> SimplicialReport
{
    SimplicialReport report;
    for (auto & v : k.vertices()) {
        auto it = h.find(v);
        if (it == h.end())
            throw Error(ErrorCode::IncompleteMap, "no image for vertex " + to_string(v));
        if (it->second.color != v.color) {
            report.chromatic = false;
            report.chromatic_witness = v;
            break;
        }
    }
    for (auto & f : k.facets())
        if (! l.contains(image_of(h, f))) {
            report.simplicial = false;
            report.simplicial_witness = f;
            break;
        }
    return report;
}

void CarrierMapData::set(Simplex s, Complex image)
{
    entries_.insert_or_assign(make_simplex(std::move(s)), std::move(image));
}

auto CarrierMapData::image(const Simplex & s) const -> Complex
{
    if (auto it = entries_.find(s); it != entries_.end())
        return it->second;

    std::optional<Complex> result;
    auto colors = colors_of(s);
    for (auto & [key, img] : entries_)
        if (is_face_of(s, key)) {
            auto restricted = restrict_to_colors(img, colors);
            result = result ? intersect(*result, restricted) : std::move(restricted);
        }
    if (! result)
        throw Error(ErrorCode::InvalidCarrier, "carrier map undefined on " + to_string(s));
    return *result;
}

auto check_carrier_map(const CarrierMapData & phi, const Complex & k, const Complex & l) -> CarrierReport
{
    CarrierReport report;
    std::map<Simplex, Complex> images;
    for (auto & s : k.faces()) {
        auto img = phi.image(s);
        if (! img.is_subcomplex_of(l))
            throw Error(ErrorCode::InvalidCarrier, "image of " + to_string(s) + " is not a subcomplex of the codomain");
        images.emplace(s, std::move(img));
    }

    for (auto & [s, img] : images) {
        auto colors = colors_of(s);
        bool rigid = img.is_pure() && img.dimension() == static_cast<int>(s.size()) - 1;
        bool chromatic = rigid && std::all_of(img.facets().begin(), img.facets().end(),
            [&](const Simplex & f) { return has_distinct_colors(f) && colors_of(f) == colors; });
        if (! rigid)
            report.rigid = false;
        if (! chromatic && report.chromatic) {
            report.chromatic = false;
            report.chromatic_witness = s;
        }

        if (s.size() < 2 || ! report.monotone)
            continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            if (! images.at(face).is_subcomplex_of(img)) {
                report.monotone = false;
                report.monotonicity_witness = std::make_pair(face, s);
                break;
            }
        }
    }
    return report;
}

auto carried_by(const SimplicialMapData & delta, const CarrierMapData & xi, const CarrierMapData & task_delta,
    const Complex & inputs) -> CarriedReport
{
    CarriedReport report;
    for (auto & sigma : inputs.faces()) {
        auto allowed = task_delta.image(sigma);
        auto reached = xi.image(sigma);
        for (auto & tau : reached.facets())
            if (! allowed.contains(image_of(delta, tau))) {
                report.carried = false;
                report.input_witness = sigma;
                report.execution_witness = tau;
                return report;
            }
    }
    return report;
}

}
