#include "doctest.h"

#include "conext/cone.hpp"
#include "conext/fixtures.hpp"
#include "conext/linalg.hpp"
#include "conext/polytope.hpp"
#include "support.hpp"

using namespace conext;
namespace fx = conext::fixtures;

namespace {

// Vertices of Delta_{d_1} x ... x Delta_{d_l}, each simplex as {0, e_1, ..., e_d}.
std::vector<RationalVector> product_of_simplices(const std::vector<std::size_t>& dims) {
    std::vector<RationalVector> points{RationalVector{}};
    for (std::size_t d : dims) {
        std::vector<RationalVector> next;
        for (const auto& p : points) {
            for (std::size_t v = 0; v <= d; ++v) {
                RationalVector q = p;
                for (std::size_t i = 1; i <= d; ++i) q.push_back(Rational(v == i ? 1 : 0));
                next.push_back(std::move(q));
            }
        }
        points = std::move(next);
    }
    return points;
}

std::vector<RationalVector> random_affine_image(std::mt19937_64& rng, const std::vector<RationalVector>& points) {
    const std::size_t d = points.front().size();
    RationalMatrix a;
    do {
        a.clear();
        for (std::size_t i = 0; i < d; ++i) a.push_back(conext::testing::random_vector(rng, d));
    } while (rank(a) < d);
    const RationalVector shift = conext::testing::random_vector(rng, d);
    std::vector<RationalVector> out;
    for (const auto& p : points) {
        RationalVector q = shift;
        for (std::size_t i = 0; i < d; ++i) q[i] += dot(a[i], p);
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<fx::NamedPolytope> test_corpus() {
    auto corpus = fx::polytope_corpus();
    corpus.push_back({"square-pyramid", polytope_from_points(fx::square_pyramid_points())});
    corpus.push_back({"segment", polytope_from_points({{0}, {3}})});
    std::mt19937_64 rng(41);
    const std::vector<std::vector<std::size_t>> shapes{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 3}};
    for (const auto& shape : shapes) {
        corpus.push_back({"product", polytope_from_points(random_affine_image(rng, product_of_simplices(shape)))});
    }
    return corpus;
}

}  // namespace

TEST_CASE("avoiding sets") {
    const Polytope sq = polytope_from_points(fx::unit_square_points());
    const FacetSet av = avoiding_set(sq, 0);
    REQUIRE(av.size() == 2);
    // The avoided facets are x = 1 and y = 1: both contain (1,1).
    for (std::size_t f : av) CHECK(sq.incidence[2][f]);

    const Polytope pyr = polytope_from_points(fx::square_pyramid_points());
    const FacetSet apex = avoiding_set(pyr, 4);
    REQUIRE(apex.size() == 1);
    CHECK(face_from_facets(pyr, apex).size() == 4);

    const Polytope prism = polytope_from_points(fx::prism_points());
    for (std::size_t v = 0; v < prism.vertex_count(); ++v) CHECK(avoiding_set(prism, v).size() == 2);
    const Polytope cube = polytope_from_points(fx::cube_points());
    for (std::size_t v = 0; v < cube.vertex_count(); ++v) CHECK(avoiding_set(cube, v).size() == 3);
}

TEST_CASE("simple and 2-level") {
    const Polytope cube = polytope_from_points(fx::cube_points());
    CHECK(is_simple(cube));
    CHECK(is_two_level(cube));
    CHECK_FALSE(is_simple(polytope_from_points(fx::square_pyramid_points())));
    const Polytope octa = polytope_from_points(fx::octahedron_points());
    CHECK_FALSE(is_simple(octa));
    CHECK(face_from_facets(octa, {}).size() == 6);
    CHECK_FALSE(is_two_level(polytope_from_points(fx::pentagon_points())));
    CHECK(is_two_level(polytope_from_points(fx::prism_points())));
    CHECK(is_simple(polytope_from_points(fx::prism_points())));
}

TEST_CASE("face_from_facets") {
    const Polytope cube = polytope_from_points(fx::cube_points());
    std::size_t adjacent = 0, opposite = 0;
    for (std::size_t f = 0; f < cube.facet_count(); ++f) {
        for (std::size_t g = f + 1; g < cube.facet_count(); ++g) {
            const auto face = face_from_facets(cube, {f, g});
            if (face.size() == 2) ++adjacent;
            else if (face.empty()) ++opposite;
        }
    }
    CHECK(adjacent == 12);
    CHECK(opposite == 3);
    const Polytope sq = polytope_from_points(fx::unit_square_points());
    for (std::size_t f = 0; f < 4; ++f) CHECK(face_from_facets(sq, {f}).size() == 2);
}

TEST_CASE("affine hull commutation") {
    CHECK(affine_hull_commutes(polytope_from_points(fx::triangle_points())));
    CHECK(affine_hull_commutes(polytope_from_points(fx::cube_points())));

    const auto violation = affine_hull_violation(polytope_from_points(fx::pentagon_points()));
    REQUIRE(violation.has_value());
    CHECK(violation->facets == FacetSet{0, 2});
    CHECK(violation->dims.face_hull.is_empty());
    CHECK(violation->dims.hull_intersection == AffineDim{0});
    CHECK(to_string(violation->dims.face_hull) == "empty");

    // Parallel opposite edges never meet: the square has no violation.
    const Polytope sq = polytope_from_points(fx::unit_square_points());
    const auto cmp = compare_hulls(sq, {0, 2});
    CHECK(cmp.face_hull == cmp.hull_intersection);
}

TEST_CASE("factor_as_simplices examples") {
    const auto sq = factor_as_simplices(base_polytope(fx::square_cone(), fx::square_phi()));
    REQUIRE(std::holds_alternative<SimplexFactorization>(sq));
    CHECK(std::get<SimplexFactorization>(sq).sorted_dims() == std::vector<std::size_t>{1, 1});

    const auto prism = factor_as_simplices(polytope_from_points(fx::prism_points()));
    REQUIRE(std::holds_alternative<SimplexFactorization>(prism));
    CHECK(std::get<SimplexFactorization>(prism).sorted_dims() == std::vector<std::size_t>{1, 2});

    const auto quad = factor_as_simplices(base_polytope(fx::square_cone(), fx::square_skewed_phi()));
    REQUIRE(std::holds_alternative<FactorizationFailure>(quad));
    CHECK(std::get<FactorizationFailure>(quad).reason.find("2-level") != std::string::npos);

    const auto tri = factor_as_simplices(polytope_from_points(fx::triangle_points()));
    REQUIRE(std::holds_alternative<SimplexFactorization>(tri));
    CHECK(std::get<SimplexFactorization>(tri).nontrivial_factors() == 1);
}

TEST_CASE("oracle triangle on the corpus") {
    for (const auto& [name, p] : test_corpus()) {
        CAPTURE(name);
        const bool commutes = affine_hull_commutes(p);
        const auto fact = factor_as_simplices(p);
        const bool factors = std::holds_alternative<SimplexFactorization>(fact);
        CHECK(commutes == factors);
        CHECK(factors == (is_simple(p) && is_two_level(p)));
        if (!factors) continue;

        const auto& f = std::get<SimplexFactorization>(fact);
        CHECK(reconstruct_incidence(f, p.facet_count()) == p.incidence);
        std::size_t product = 1, sum = 0, total_dim = 0;
        for (std::size_t d : f.factor_dims) {
            product *= d + 1;
            sum += d + 1;
            total_dim += d;
        }
        CHECK(product == p.vertex_count());
        CHECK(sum == p.facet_count());
        CHECK(total_dim == p.dim);
        for (std::size_t v = 0; v < p.vertex_count(); ++v) CHECK(avoiding_set(p, v).size() == f.nontrivial_factors());
    }
}

TEST_CASE("random products of simplices factor with the right shape") {
    std::mt19937_64 rng(42);
    for (const std::vector<std::size_t> shape : {std::vector<std::size_t>{1, 2}, {2, 2}, {1, 1, 1}, {3}}) {
        const Polytope p = polytope_from_points(random_affine_image(rng, product_of_simplices(shape)));
        const auto fact = factor_as_simplices(p);
        REQUIRE(std::holds_alternative<SimplexFactorization>(fact));
        CHECK(std::get<SimplexFactorization>(fact).sorted_dims() == shape);
    }
}

TEST_CASE("affine hull commutation is affinely invariant") {
    std::mt19937_64 rng(43);
    for (const auto& pts : {fx::pentagon_points(), fx::cube_points(), fx::octahedron_points(), fx::prism_points(),
                            fx::square_pyramid_points()}) {
        const auto base = affine_hull_violation(polytope_from_points(pts));
        for (int i = 0; i < 3; ++i) {
            const auto moved = affine_hull_violation(polytope_from_points(random_affine_image(rng, pts)));
            CHECK(base.has_value() == moved.has_value());
        }
    }
}

TEST_CASE("facet subsets agree with arbitrary face families in the plane") {
    // Independent oracle: intersect the linear spans of the lifted vertex sets
    // directly, without going through facet functionals.
    auto affine_meet = [](const Polytope& p, const VertexSet& a, const VertexSet& b) {
        RationalMatrix cols;  // columns: vertices of a, then minus vertices of b
        const std::size_t n = p.ambient_dim();
        RationalMatrix sys(n, RationalVector(a.size() + b.size()));
        std::size_t c = 0;
        for (std::size_t v : a) {
            for (std::size_t i = 0; i < n; ++i) sys[i][c] = p.vertices[v][i];
            ++c;
        }
        for (std::size_t v : b) {
            for (std::size_t i = 0; i < n; ++i) sys[i][c] = -p.vertices[v][i];
            ++c;
        }
        RationalMatrix meet;
        for (const auto& k : null_space(sys, a.size() + b.size())) {
            RationalVector x(n);
            std::size_t j = 0;
            for (std::size_t v : a) {
                for (std::size_t i = 0; i < n; ++i) x[i] += k[j] * p.vertices[v][i];
                ++j;
            }
            meet.push_back(x);
        }
        bool hits_hyperplane = false;
        for (const auto& x : meet) hits_hyperplane |= !dot(p.hyperplane, x).is_zero();
        const long dim = meet.empty() ? 0 : static_cast<long>(rank(meet));
        return hits_hyperplane ? AffineDim{dim - 1} : AffineDim{};
    };
    auto affine_dim = [](const Polytope& p, const VertexSet& s) {
        RationalMatrix m;
        for (std::size_t v : s) m.push_back(p.vertices[v]);
        return s.empty() ? AffineDim{} : AffineDim{static_cast<long>(rank(m)) - 1};
    };

    for (const auto& pts : {fx::triangle_points(), fx::unit_square_points(), fx::pentagon_points()}) {
        const Polytope p = polytope_from_points(pts);
        std::vector<VertexSet> faces;
        for (std::size_t f = 0; f < p.facet_count(); ++f) faces.push_back(face_from_facets(p, {f}));
        for (std::size_t v = 0; v < p.vertex_count(); ++v) faces.push_back({v});
        bool family_violation = false;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            for (std::size_t j = i + 1; j < faces.size(); ++j) {
                VertexSet common;
                for (std::size_t v : faces[i]) {
                    if (faces[j].count(v)) common.insert(v);
                }
                if (!(affine_dim(p, common) == affine_meet(p, faces[i], faces[j]))) family_violation = true;
            }
        }
        CHECK(family_violation == !affine_hull_commutes(p));
    }
}
