#include <chrotop/error.hpp>
#include <chrotop/subdivision.hpp>

#include <algorithm>

namespace chrotop {

auto encode_carrier(const Simplex & carrier) -> std::string
{
    std::string out = "{";
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(carrier[i].color) + ":" + carrier[i].label;
    }
    return out + "}";
}

auto is_encoded(const std::string & label) -> bool
{
    return ! label.empty() && label.front() == '{';
}

auto decode_carrier(const std::string & label) -> Simplex
{
    if (! is_encoded(label) || label.back() != '}')
        throw Error(ErrorCode::ParseError, "not a carrier label: " + label);

    Simplex out;
    std::size_t pos = 1;
    auto end = label.size() - 1;
    while (pos < end) {
        auto colon = label.find(':', pos);
        if (colon == std::string::npos || colon >= end)
            throw Error(ErrorCode::ParseError, "missing color in " + label);
        int color = 0;
        try {
            color = std::stoi(label.substr(pos, colon - pos));
        }
        catch (const std::exception &) {
            throw Error(ErrorCode::ParseError, "bad color in " + label);
        }

        auto cursor = colon + 1;
        int depth = 0;
        while (cursor < end && (depth > 0 || label[cursor] != ',')) {
            if (label[cursor] == '{')
                ++depth;
            else if (label[cursor] == '}')
                --depth;
            ++cursor;
        }
        if (depth != 0)
            throw Error(ErrorCode::ParseError, "unbalanced braces in " + label);
        out.push_back(Vertex{color, label.substr(colon + 1, cursor - colon - 1)});
        pos = cursor + 1;
    }
    if (out.empty())
        throw Error(ErrorCode::ParseError, "empty carrier in " + label);
    return make_simplex(std::move(out));
}

auto base_carrier(const Vertex & v) -> Simplex
{
    if (! is_encoded(v.label))
        return {v};
    std::vector<Vertex> leaves;
    for (auto & child : decode_carrier(v.label)) {
        auto sub = base_carrier(child);
        leaves.insert(leaves.end(), sub.begin(), sub.end());
    }
    std::sort(leaves.begin(), leaves.end());
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    return leaves;
}

auto label_depth(const Vertex & v) -> int
{
    if (! is_encoded(v.label))
        return 0;
    auto carrier = decode_carrier(v.label);
    auto own = vertex_with_color(carrier, v.color);
    if (! own)
        throw Error(ErrorCode::InvalidVertex, "carrier of " + to_string(v) + " lacks its own color");
    return 1 + label_depth(*own);
}

auto ancestor(const Vertex & v, int steps) -> Vertex
{
    Vertex cur = v;
    for (int i = 0; i < steps; ++i) {
        if (! is_encoded(cur.label))
            throw Error(ErrorCode::BadIndices, "vertex " + to_string(v) + " has fewer than " + std::to_string(steps) + " levels");
        auto carrier = decode_carrier(cur.label);
        auto own = vertex_with_color(carrier, cur.color);
        if (! own)
            throw Error(ErrorCode::InvalidVertex, "carrier of " + to_string(cur) + " lacks its own color");
        cur = *own;
    }
    return cur;
}

namespace {

auto restrict_simplex(const Simplex & s, const std::vector<ProcessId> & colors) -> Simplex
{
    Simplex out;
    for (auto & v : s)
        if (std::binary_search(colors.begin(), colors.end(), v.color))
            out.push_back(v);
    return out;
}

void require_pure_chromatic(const Complex & k)
{
    if (! k.is_pure() || ! k.is_chromatic())
        throw Error(ErrorCode::NotChromatic, "subdivision needs a pure chromatic complex");
}

}

auto chr(const Complex & k) -> Complex
{
    return partial_chr_step(k, Complex::empty(k.process_count()));
}

auto chr_iter(const Complex & k, int times) -> Complex
{
    if (times < 0)
        throw Error(ErrorCode::BadIndices, "negative iteration count");
    Complex cur = k;
    for (int i = 0; i < times; ++i)
        cur = chr(cur);
    return cur;
}

auto partial_chr_step(const Complex & current, const Complex & sigma) -> Complex
{
    require_pure_chromatic(current);
    if (! sigma.is_subcomplex_of(current))
        throw Error(ErrorCode::InvalidTermination, "terminated simplexes are not a subcomplex");

    std::vector<Simplex> facets;
    for (auto & f : current.facets()) {
        if (sigma.contains(f)) {
            facets.push_back(f);
            continue;
        }
        for (auto & s : ordered_partitions(colors_of(f))) {
            Simplex cell;
            for (auto & v : f) {
                auto carrier = restrict_simplex(f, s.view_of(v.color));
                if (sigma.contains(carrier))
                    cell.push_back(*vertex_with_color(carrier, v.color));
                else
                    cell.push_back(Vertex{v.color, encode_carrier(carrier)});
            }
            facets.push_back(std::move(cell));
        }
    }
    return Complex::from_facets(current.process_count(), std::move(facets));
}

auto BarycentricPoint::sum() const -> Rational
{
    Rational total = 0;
    for (auto & w : weights)
        total += w;
    return total;
}

auto distance(const BarycentricPoint & a, const BarycentricPoint & b) -> Rational
{
    if (a.weights.size() != b.weights.size())
        throw Error(ErrorCode::BaseMismatch, "points over different bases");
    Rational total = 0;
    for (std::size_t i = 0; i < a.weights.size(); ++i)
        total += abs(a.weights[i] - b.weights[i]);
    return total / 2;
}

Realization::Realization(Complex base) : base_(std::move(base))
{
    for (std::size_t i = 0; i < base_.vertices().size(); ++i)
        index_.emplace(base_.vertices()[i], i);
}

auto Realization::base_index(const Vertex & v) const -> std::size_t
{
    auto it = index_.find(v);
    if (it == index_.end())
        throw Error(ErrorCode::UnknownVertex, to_string(v) + " is not a base vertex");
    return it->second;
}

auto Realization::point(const Vertex & v) const -> BarycentricPoint
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(v); it != cache_.end())
            return it->second;
    }

    BarycentricPoint p;
    if (auto it = index_.find(v); it != index_.end()) {
        p.weights.assign(dimension(), Rational(0));
        p.weights[it->second] = 1;
    }
    else if (is_encoded(v.label)) {
        Simplex carrier;
        try {
            carrier = decode_carrier(v.label);
        }
        catch (const Error &) {
            throw Error(ErrorCode::UnknownVertex, "cannot place " + to_string(v));
        }
        if (! has_distinct_colors(carrier) || ! vertex_with_color(carrier, v.color))
            throw Error(ErrorCode::UnknownVertex, "inconsistent carrier for " + to_string(v));
        Rational denom = 2 * static_cast<int>(carrier.size()) - 1;
        p.weights.assign(dimension(), Rational(0));
        for (auto & child : carrier) {
            auto cp = point(child);
            Rational w = (child.color == v.color ? Rational(1) : Rational(2)) / denom;
            for (std::size_t i = 0; i < p.weights.size(); ++i)
                p.weights[i] += w * cp.weights[i];
        }
    }
    else {
        throw Error(ErrorCode::UnknownVertex, to_string(v) + " is not over the base");
    }

    std::lock_guard lock(mutex_);
    cache_.emplace(v, p);
    return p;
}

auto Realization::points(const Simplex & s) const -> std::vector<BarycentricPoint>
{
    std::vector<BarycentricPoint> out;
    out.reserve(s.size());
    for (auto & v : s)
        out.push_back(point(v));
    return out;
}

auto Realization::support(const std::vector<BarycentricPoint> & points) const -> Simplex
{
    Simplex out;
    for (std::size_t i = 0; i < dimension(); ++i)
        if (std::any_of(points.begin(), points.end(), [&](const BarycentricPoint & p) { return p.weights[i] != 0; }))
            out.push_back(base_.vertices()[i]);
    return out;
}

auto coordinates(const Vertex & v, const Complex & k, const Realization & r) -> BarycentricPoint
{
    if (! k.contains_vertex(v))
        throw Error(ErrorCode::UnknownVertex, to_string(v) + " is not materialized");
    return r.point(v);
}

auto multiply(const Matrix & a, const Matrix & b) -> Matrix
{
    auto rows = a.size();
    auto inner = b.size();
    auto cols = inner ? b[0].size() : 0;
    Matrix out(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

auto schedule_matrix(const Schedule & s, const std::vector<ProcessId> & colors) -> Matrix
{
    auto m = colors.size();
    Matrix out(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        auto seen = s.view_of(colors[i]);
        Rational denom = 2 * static_cast<int>(seen.size()) - 1;
        for (std::size_t j = 0; j < m; ++j)
            if (std::binary_search(seen.begin(), seen.end(), colors[j]))
                out[i][j] = (i == j ? Rational(1) : Rational(2)) / denom;
    }
    return out;
}

auto word_matrix(const Word & w, const std::vector<ProcessId> & colors) -> Matrix
{
    auto m = colors.size();
    Matrix out(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
        out[i][i] = 1;
    for (auto & s : w)
        out = multiply(schedule_matrix(s, colors), out);
    return out;
}

auto cell_points(const Word & w, const Simplex & base_facet, const Realization & r) -> std::vector<BarycentricPoint>
{
    auto mat = word_matrix(w, colors_of(base_facet));
    auto corners = r.points(base_facet);
    std::vector<BarycentricPoint> out;
    for (auto & row : mat) {
        BarycentricPoint p;
        p.weights.assign(r.dimension(), Rational(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0)
                continue;
            for (std::size_t i = 0; i < p.weights.size(); ++i)
                p.weights[i] += row[j] * corners[j].weights[i];
        }
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

auto row_spread(const Matrix & m) -> Rational
{
    Rational best = 0;
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            Rational total = 0;
            for (std::size_t j = 0; j < m[a].size(); ++j)
                total += abs(m[a][j] - m[b][j]);
            best = std::max(best, Rational(total / 2));
        }
    return best;
}

void widest_cell(const Matrix & current, int remaining, const std::vector<Schedule> & alphabet,
    const std::vector<ProcessId> & colors, Rational & best)
{
    if (remaining == 0) {
        best = std::max(best, row_spread(current));
        return;
    }
    for (auto & s : alphabet)
        widest_cell(multiply(schedule_matrix(s, colors), current), remaining - 1, alphabet, colors, best);
}

}

auto diameter_Dk(const Complex & base, int k) -> Rational
{
    if (k < 0)
        throw Error(ErrorCode::BadIndices, "negative depth");
    Rational best = 0;
    for (auto & f : base.facets()) {
        auto colors = colors_of(f);
        // The corners of a base facet are at pairwise distance 1, so the
        // spread of the rows equals the geometric diameter of the cell.
        widest_cell(word_matrix({}, colors), k, ordered_partitions(colors), colors, best);
    }
    return best;
}

auto diameter_of(const Complex & k, const Realization & r) -> Rational
{
    Rational best = 0;
    for (auto & f : k.facets()) {
        auto pts = r.points(f);
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
                best = std::max(best, distance(pts[a], pts[b]));
    }
    return best;
}

namespace {

auto determinant(Matrix m) -> Rational
{
    auto size = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < size; ++col) {
        auto pivot = col;
        while (pivot < size && m[pivot][col] == 0)
            ++pivot;
        if (pivot == size)
            return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (auto row = col + 1; row < size; ++row) {
            if (m[row][col] == 0)
                continue;
            Rational factor = m[row][col] / m[col][col];
            for (auto j = col; j < size; ++j)
                m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

}

auto relative_volume(const std::vector<BarycentricPoint> & cell, const Simplex & base_facet, const Realization & r)
    -> Rational
{
    if (cell.size() != base_facet.size())
        throw Error(ErrorCode::NotASimplex, "cell and base facet differ in dimension");
    Matrix m;
    for (auto & p : cell) {
        std::vector<Rational> row;
        for (auto & corner : base_facet)
            row.push_back(p.weights[r.base_index(corner)]);
        m.push_back(std::move(row));
    }
    return abs(determinant(std::move(m)));
}

auto geometric_containment(const std::vector<BarycentricPoint> & inner, const std::vector<BarycentricPoint> & outer)
    -> bool
{
    if (outer.empty())
        return inner.empty();
    auto dim = outer.front().weights.size();
    for (auto & p : outer)
        if (p.weights.size() != dim)
            throw Error(ErrorCode::BaseMismatch, "outer simplex mixes bases");
    for (auto & p : inner)
        if (p.weights.size() != dim)
            throw Error(ErrorCode::BaseMismatch, "inner and outer simplexes use different bases");

    auto unknowns = outer.size();
    for (auto & x : inner) {
        // Solve sum_i lambda_i outer_i = x by elimination on the augmented
        // dim x (unknowns + 1) system.
        Matrix m(dim, std::vector<Rational>(unknowns + 1));
        for (std::size_t row = 0; row < dim; ++row) {
            for (std::size_t i = 0; i < unknowns; ++i)
                m[row][i] = outer[i].weights[row];
            m[row][unknowns] = x.weights[row];
        }

        std::size_t rank = 0;
        std::vector<std::size_t> pivot_cols;
        for (std::size_t col = 0; col < unknowns && rank < dim; ++col) {
            auto pivot = rank;
            while (pivot < dim && m[pivot][col] == 0)
                ++pivot;
            if (pivot == dim)
                continue;
            std::swap(m[pivot], m[rank]);
            Rational lead = m[rank][col];
            for (auto & entry : m[rank])
                entry /= lead;
            for (std::size_t row = 0; row < dim; ++row) {
                if (row == rank || m[row][col] == 0)
                    continue;
                Rational factor = m[row][col];
                for (std::size_t j = col; j <= unknowns; ++j)
                    m[row][j] -= factor * m[rank][j];
            }
            pivot_cols.push_back(col);
            ++rank;
        }
        if (rank < unknowns)
            throw Error(ErrorCode::NotASimplex, "outer simplex is degenerate");
        for (auto row = rank; row < dim; ++row)
            if (m[row][unknowns] != 0)
                return false;
        for (std::size_t row = 0; row < rank; ++row)
            if (m[row][unknowns] < 0)
                return false;
    }
    return true;
}

}
