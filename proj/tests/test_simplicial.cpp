#include <doctest.h>

#include "fixtures.hpp"
#include "mtop/simplicial.hpp"

using namespace mtop;

TEST_CASE("f-vector of small complexes") {
    // boundary of a triangle
    auto c = SimplicialComplex::from_facets(3, {mask_of({0, 1}), mask_of({0, 2}), mask_of({1, 2})});
    CHECK(f_vector(c).counts == std::vector<long long>{1, 3, 3});

    auto pt = SimplicialComplex::from_facets(1, {mask_of({0})});
    CHECK(f_vector(pt).counts == std::vector<long long>{1, 1});

    CHECK_THROWS_AS(f_vector(SimplicialComplex::void_complex(3)), void_complex_error);
}

TEST_CASE("f-vector of the two-squares independence complex") {
    auto c = fixtures::two_squares().independence_complex();
    FVector f = f_vector(c);
    CHECK(f.counts == std::vector<long long>{1, 6, 15, 20, 12});
    CHECK(f.counts == fixtures::brute_face_counts(c));
}

TEST_CASE("h transform against the polynomial oracle") {
    CHECK(h_from_f(FVector{{1, 4, 6}}).h == std::vector<long long>{1, 2, 3});
    CHECK(h_from_f(FVector{{1, 4, 6}}).h == fixtures::brute_h_from_f({1, 4, 6}));
    CHECK(h_from_f(FVector{{1}}).h == std::vector<long long>{1});

    auto c = fixtures::two_squares().independence_complex();
    CHECK(h_vector(c).h == std::vector<long long>{1, 2, 3, 4, 2});
    CHECK(h_vector(c).h == fixtures::brute_h_from_f({1, 6, 15, 20, 12}));
}

TEST_CASE("h/f round trip on random complexes") {
    std::mt19937_64 rng(20240811);
    for (int rep = 0; rep < 300; ++rep) {
        auto c = fixtures::random_complex(rng);
        FVector f = f_vector(c);
        CHECK(f_from_h(h_from_f(f)) == f);
        CHECK(h_from_f(f).h == fixtures::brute_h_from_f(f.counts));
    }
}

TEST_CASE("reduced Euler characteristic") {
    auto u24 = SimplicialComplex::from_facets(
        4, {mask_of({0, 1}), mask_of({0, 2}), mask_of({0, 3}), mask_of({1, 2}), mask_of({1, 3}),
            mask_of({2, 3})});
    CHECK(reduced_euler(u24) == -3);
    CHECK(h_vector(u24).h.back() == 3);

    auto c = fixtures::two_squares().independence_complex();
    CHECK(reduced_euler(c) == -2);

    CHECK(reduced_euler(SimplicialComplex::full_simplex(3)) == 0);
    CHECK(reduced_euler(SimplicialComplex::empty_complex(0)) == -1);
}

TEST_CASE("pure complexes tie h_top to the Euler characteristic") {
    std::mt19937_64 rng(77);
    int seen = 0;
    for (int rep = 0; rep < 400 && seen < 60; ++rep) {
        auto c = fixtures::random_complex(rng);
        if (!c.pure()) continue;
        ++seen;
        int d = c.rank();
        long long chi = reduced_euler(c);
        HVector h = h_vector(c);
        CHECK(h.h[d] == (d % 2 == 1 ? chi : -chi));
        long long facet_sum = 0;
        for (long long v : h.h) facet_sum += v;
        CHECK(facet_sum == static_cast<long long>(c.facets().size()));
    }
    CHECK(seen >= 30);
}

TEST_CASE("join multiplies h-polynomials") {
    auto seg_boundary = SimplicialComplex::from_facets(2, {mask_of({0}), mask_of({1})});
    auto square = join(seg_boundary, seg_boundary);
    CHECK(square.facets().size() == 4);
    CHECK(h_vector(square).h == std::vector<long long>{1, 2, 1});

    // triangle boundary * segment boundary
    auto tri = SimplicialComplex::from_facets(3, {mask_of({0, 1}), mask_of({0, 2}), mask_of({1, 2})});
    auto j = join(tri, seg_boundary);
    CHECK(h_vector(j).h == std::vector<long long>{1, 2, 2, 1});
    CHECK(h_vector(j) == convolve(h_vector(tri), h_vector(seg_boundary)));

    // identity: join with the empty complex
    auto idj = join(SimplicialComplex::empty_complex(0), tri);
    CHECK(idj == tri);

    std::mt19937_64 rng(5150);
    for (int rep = 0; rep < 100; ++rep) {
        auto a = fixtures::random_complex(rng, 5, 5);
        auto b = fixtures::random_complex(rng, 5, 5);
        CHECK(h_vector(join(a, b)) == convolve(h_vector(a), h_vector(b)));
    }
}

TEST_CASE("link and restriction") {
    // diamond boundary (4-cycle on 0-1-2-3 with facets as edges of the square)
    auto square = SimplicialComplex::from_facets(
        4, {mask_of({0, 2}), mask_of({0, 3}), mask_of({1, 2}), mask_of({1, 3})});
    auto lk = densify(link(square, mask_of({0})));
    CHECK(lk.facets().size() == 2);
    CHECK(lk.rank() == 1);
    CHECK(h_vector(lk).h == std::vector<long long>{1, 1});  // two points

    auto tri = SimplicialComplex::from_facets(3, {mask_of({0, 1}), mask_of({0, 2}), mask_of({1, 2})});
    auto r = restriction(tri, mask_of({0, 1}));
    CHECK(r.facets() == std::vector<Mask>{mask_of({0, 1})});  // a segment

    CHECK(link(tri, 0) == tri);
    CHECK_THROWS_AS(link(tri, mask_of({0, 1, 2})), face_error);
}

TEST_CASE("cone points") {
    auto full = SimplicialComplex::full_simplex(3);
    CHECK(cone_points(full) == full_mask(3));
    auto reduced = remove_cone_points(full);
    CHECK(reduced.is_empty_complex());

    auto square = SimplicialComplex::from_facets(
        4, {mask_of({0, 2}), mask_of({0, 3}), mask_of({1, 2}), mask_of({1, 3})});
    CHECK(cone_points(square) == 0);

    // removing cone points preserves h up to trailing zeros
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 100; ++rep) {
        auto base = fixtures::random_complex(rng, 5, 5);
        auto coned = join(base, SimplicialComplex::full_simplex(2));
        auto stripped = remove_cone_points(coned);
        HVector hc = h_vector(coned);
        HVector hs = h_vector(stripped);
        for (size_t i = 0; i < hc.h.size(); ++i) {
            long long expect = i < hs.h.size() ? hs.h[i] : 0;
            CHECK(hc.h[i] == expect);
        }
    }
}

TEST_CASE("void and empty complexes are distinct") {
    auto v = SimplicialComplex::void_complex(2);
    auto e = SimplicialComplex::empty_complex(2);
    CHECK(v.is_void());
    CHECK(!e.is_void());
    CHECK(e.is_empty_complex());
    CHECK(v != e);
    CHECK(f_vector(e).counts == std::vector<long long>{1});
}
