#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrotop/complex.hpp>
#include <chrotop/error.hpp>

using namespace chrotop;

namespace {

auto V(int c, const char * l) -> Vertex
{
    return Vertex{c, l};
}

auto edge_path() -> Complex
{
    // a0 - b1 - c0
    return Complex::from_facets(2, {{V(0, "a"), V(1, "b")}, {V(1, "b"), V(0, "c")}});
}

auto throws_code(auto && f, ErrorCode code) -> bool
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.code() == code;
    }
    return false;
}

}

TEST_CASE("simplexes are canonical")
{
    auto s = make_simplex({V(1, "x"), V(0, "y")});
    CHECK(s.front() == V(0, "y"));
    CHECK(has_distinct_colors(s));
    CHECK_FALSE(has_distinct_colors(make_simplex({V(0, "x"), V(0, "y")})));
    CHECK(throws_code([] { make_simplex({V(0, "x"), V(0, "x")}); }, ErrorCode::InvalidVertex));
    CHECK(is_face_of({V(0, "y")}, s));
    CHECK(vertex_with_color(s, 1)->label == "x");
    CHECK(vertex_with_color(s, 2) == nullptr);
}

TEST_CASE("from_facets keeps only maximal simplexes")
{
    auto k = Complex::from_facets(2, {{V(0, "a")}, {V(0, "a"), V(1, "b")}, {V(1, "b"), V(0, "a")}});
    CHECK(k.facets().size() == 1);
    CHECK(k.vertices().size() == 2);
    CHECK(k.dimension() == 1);
    CHECK(k.is_pure());
    CHECK(k.is_chromatic());
    CHECK(k.contains({V(0, "a")}));
    CHECK_FALSE(k.contains({V(0, "z")}));
    CHECK(Complex::empty(3).dimension() == -1);
    CHECK(throws_code([] { Complex::from_facets(2, {{V(2, "a")}}); }, ErrorCode::InvalidVertex));
    CHECK(throws_code([] { close_faces(2, {}); }, ErrorCode::NotASimplex));
}

TEST_CASE("faces of a triangle")
{
    auto k = Complex::from_facets(3, {{V(0, "a"), V(1, "b"), V(2, "c")}});
    CHECK(k.faces().size() == 7);
    CHECK(k.is_subcomplex_of(k));
}

TEST_CASE("star, restriction, intersection, union")
{
    auto k = edge_path();
    CHECK(star(k, {V(1, "b")}).facets().size() == 2);
    CHECK(star(k, {V(0, "a")}).facets().size() == 1);
    CHECK(throws_code([&] { star(k, {V(0, "a"), V(0, "c")}); }, ErrorCode::NotASimplex));

    auto zeros = restrict_to_colors(k, {0});
    CHECK(zeros.facets().size() == 2);
    CHECK(zeros.dimension() == 0);

    auto other = Complex::from_facets(2, {{V(0, "a"), V(1, "b")}, {V(0, "d"), V(1, "e")}});
    auto both = intersect(k, other);
    CHECK(both.facets() == std::vector<Simplex>{make_simplex({V(0, "a"), V(1, "b")})});
    CHECK(unite(k, other).facets().size() == 3);
}

TEST_CASE("simplicial and chromatic checks report witnesses")
{
    auto k = edge_path();
    auto l = Complex::from_facets(2, {{V(0, "0"), V(1, "0")}});
    SimplicialMapData good{{V(0, "a"), V(0, "0")}, {V(1, "b"), V(1, "0")}, {V(0, "c"), V(0, "0")}};
    CHECK(check_simplicial_chromatic(good, k, l).ok());

    auto bad = good;
    bad[V(1, "b")] = V(0, "0");
    auto r = check_simplicial_chromatic(bad, k, l);
    CHECK_FALSE(r.chromatic);
    CHECK(*r.chromatic_witness == V(1, "b"));

    SimplicialMapData missing{{V(0, "a"), V(0, "0")}};
    CHECK(throws_code([&] { check_simplicial_chromatic(missing, k, l); }, ErrorCode::IncompleteMap));
}

TEST_CASE("carrier maps: monotonicity and rigidity")
{
    auto k = Complex::from_facets(2, {{V(0, "a"), V(1, "b")}});
    auto l = Complex::from_facets(2, {{V(0, "x"), V(1, "y")}, {V(0, "z"), V(1, "y")}});
    CarrierMapData phi;
    phi.set({V(0, "a")}, Complex::from_facets(2, {{V(0, "x")}}));
    phi.set({V(1, "b")}, Complex::from_facets(2, {{V(1, "y")}}));
    phi.set(make_simplex({V(0, "a"), V(1, "b")}), l);
    auto r = check_carrier_map(phi, k, l);
    CHECK(r.monotone);
    CHECK(r.rigid);
    CHECK(r.chromatic);

    phi.set({V(0, "a")}, Complex::from_facets(2, {{V(0, "w")}}));
    auto l2 = unite(l, Complex::from_facets(2, {{V(0, "w")}}));
    auto r2 = check_carrier_map(phi, k, l2);
    CHECK_FALSE(r2.monotone);
    CHECK(r2.monotonicity_witness->first == Simplex{V(0, "a")});

    CHECK(throws_code([&] { check_carrier_map(phi, k, l); }, ErrorCode::InvalidCarrier));
}

TEST_CASE("carrier image falls back to restricting supersets")
{
    CarrierMapData phi;
    phi.set(make_simplex({V(0, "a"), V(1, "b")}), Complex::from_facets(2, {{V(0, "x"), V(1, "y")}}));
    auto img = phi.image({V(0, "a")});
    CHECK(img.facets() == std::vector<Simplex>{{V(0, "x")}});
    CHECK(throws_code([&] { phi.image({V(0, "q")}); }, ErrorCode::InvalidCarrier));
}

TEST_CASE("carried_by finds the offending pair")
{
    auto inputs = Complex::from_facets(2, {{V(0, "0"), V(1, "1")}});
    CarrierMapData delta_task, xi;
    delta_task.set({V(0, "0")}, Complex::from_facets(2, {{V(0, "0")}}));
    delta_task.set({V(1, "1")}, Complex::from_facets(2, {{V(1, "1")}}));
    delta_task.set(inputs.facets()[0], Complex::from_facets(2, {{V(0, "0"), V(1, "0")}, {V(0, "1"), V(1, "1")}}));
    xi.set({V(0, "0")}, Complex::from_facets(2, {{V(0, "p")}}));
    xi.set({V(1, "1")}, Complex::from_facets(2, {{V(1, "q")}}));
    xi.set(inputs.facets()[0], Complex::from_facets(2, {{V(0, "p"), V(1, "r")}, {V(0, "s"), V(1, "q")}}));

    SimplicialMapData ok{{V(0, "p"), V(0, "0")}, {V(1, "r"), V(1, "0")}, {V(0, "s"), V(0, "1")}, {V(1, "q"), V(1, "1")}};
    CHECK(carried_by(ok, xi, delta_task, inputs).carried);

    auto bad = ok;
    bad[V(0, "p")] = V(0, "1");
    auto r = carried_by(bad, xi, delta_task, inputs);
    CHECK_FALSE(r.carried);
    CHECK(*r.input_witness == Simplex{V(0, "0")});
}
