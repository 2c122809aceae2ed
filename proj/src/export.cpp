#include <chrotop/error.hpp>
#include <chrotop/export.hpp>

#include <array>
#include <cstdio>
#include <map>
#include <sstream>

namespace chrotop {

namespace {

auto quoted(const std::string & s) -> std::string
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

auto fmt(double x) -> std::string
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

const std::array<const char *, 8> depth_fill = {
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#1f78b4"};
const std::array<const char *, 3> process_fill = {"#000000", "#ffffff", "#c00000"};

struct Plane {
    std::vector<std::array<double, 2>> corners;

    auto place(const BarycentricPoint & p) const -> std::array<double, 2>
    {
        std::array<double, 2> xy{0.0, 0.0};
        for (std::size_t i = 0; i < corners.size(); ++i) {
            double w = p.weights[i].convert_to<double>();
            xy[0] += w * corners[i][0];
            xy[1] += w * corners[i][1];
        }
        return xy;
    }
};

}

auto to_dot(const Complex & k) -> std::string
{
    auto faces = k.faces();
    std::map<Simplex, std::size_t> id;
    for (std::size_t i = 0; i < faces.size(); ++i)
        id.emplace(faces[i], i);

    std::ostringstream out;
    out << "digraph faces {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < faces.size(); ++i)
        out << "  f" << i << " [label=" << quoted(to_string(faces[i])) << "];\n";
    for (std::size_t i = 0; i < faces.size(); ++i) {
        auto & s = faces[i];
        if (s.size() < 2)
            continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            out << "  f" << id.at(face) << " -> f" << i << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

auto to_svg(const TerminatingSubdivision & t, int depth) -> std::string
{
    auto & base = t.base();
    if (base.facets().size() != 1 || base.dimension() < 1 || base.dimension() > 2)
        throw Error(ErrorCode::Unsupported, "drawing needs a single edge or triangle as base");
    if (depth > t.max_depth())
        throw Error(ErrorCode::BadIndices, "depth not materialized");

    auto & r = t.realization();
    const double width = 600, height = base.dimension() == 1 ? 120 : 540;
    Plane plane;
    if (base.dimension() == 1)
        plane.corners = {{40, 60}, {560, 60}};
    else
        plane.corners = {{40, 500}, {560, 500}, {300, 50}};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    auto & level = t.level(depth);
    auto & cells = t.cells(depth);
    for (std::size_t i = 0; i < level.facets().size(); ++i) {
        auto & cell = cells[i];
        std::string fill = cell.terminated ? depth_fill[static_cast<std::size_t>(*cell.terminated) % depth_fill.size()]
                                           : "#bbbbbb";
        auto pts = r.points(level.facets()[i]);
        if (base.dimension() == 1) {
            auto a = plane.place(pts[0]);
            auto b = plane.place(pts[1]);
            out << "<line x1=\"" << fmt(a[0]) << "\" y1=\"" << fmt(a[1]) << "\" x2=\"" << fmt(b[0]) << "\" y2=\""
                << fmt(b[1]) << "\" stroke=\"" << fill << "\" stroke-width=\"8\"/>\n";
        }
        else {
            out << "<polygon points=\"";
            for (std::size_t j = 0; j < pts.size(); ++j) {
                auto xy = plane.place(pts[j]);
                out << (j ? " " : "") << fmt(xy[0]) << "," << fmt(xy[1]);
            }
            out << "\" fill=\"" << fill << "\" fill-opacity=\"0.6\" stroke=\"#333333\" stroke-width=\"0.5\"/>\n";
        }
    }

    for (auto & v : level.vertices()) {
        auto xy = plane.place(r.point(v));
        out << "<circle cx=\"" << fmt(xy[0]) << "\" cy=\"" << fmt(xy[1]) << "\" r=\"3\" fill=\""
            << process_fill[static_cast<std::size_t>(v.color) % process_fill.size()]
            << "\" stroke=\"#000000\" stroke-width=\"0.7\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}
