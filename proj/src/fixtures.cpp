#include "conext/fixtures.hpp"

namespace conext::fixtures {

namespace {

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

}  // namespace

Cone square_cone() {
    return make_cone({vec({1, 1, 0}), vec({1, -1, 0}), vec({1, 0, 1}), vec({1, 0, -1})});
}

RationalVector square_phi() { return vec({1, 0, 0}); }

RationalVector square_skewed_phi() { return vec({1, Rational(1, 5), 0}); }

Cone orthant(std::size_t n) {
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector e(n);
        e[i] = Rational(1);
        gens.push_back(std::move(e));
    }
    return make_cone(gens);
}

RationalVector all_ones(std::size_t n) { return RationalVector(n, Rational(1)); }

Cone cone_over(const std::vector<RationalVector>& points) {
    std::vector<RationalVector> lifted;
    for (const auto& p : points) {
        RationalVector l{Rational(1)};
        l.insert(l.end(), p.begin(), p.end());
        lifted.push_back(std::move(l));
    }
    return make_cone(lifted);
}

RationalVector lift_phi(std::size_t ambient) {
    RationalVector e(ambient);
    e[0] = Rational(1);
    return e;
}

std::vector<RationalVector> triangle_points() { return {vec({0, 0}), vec({1, 0}), vec({0, 1})}; }

std::vector<RationalVector> unit_square_points() { return {vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})}; }

std::vector<RationalVector> pentagon_points() {
    return {vec({0, 0}), vec({2, 0}), vec({3, 2}), vec({1, 3}), vec({-1, 2})};
}

std::vector<RationalVector> cube_points() {
    std::vector<RationalVector> out;
    for (int x = 0; x <= 1; ++x) {
        for (int y = 0; y <= 1; ++y) {
            for (int z = 0; z <= 1; ++z) out.push_back(vec({x, y, z}));
        }
    }
    return out;
}

std::vector<RationalVector> prism_points() {
    std::vector<RationalVector> out;
    for (int z = 0; z <= 1; ++z) {
        out.push_back(vec({0, 0, z}));
        out.push_back(vec({1, 0, z}));
        out.push_back(vec({0, 1, z}));
    }
    return out;
}

std::vector<RationalVector> octahedron_points() {
    return {vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}), vec({0, -1, 0}), vec({0, 0, 1}), vec({0, 0, -1})};
}

std::vector<RationalVector> square_pyramid_points() {
    return {vec({0, 0, 0}), vec({2, 0, 0}), vec({2, 2, 0}), vec({0, 2, 0}), vec({1, 1, 1})};
}

std::vector<NamedBasedCone> based_corpus() {
    std::vector<NamedBasedCone> out;
    out.push_back({"square", make_based(square_cone(), square_phi())});
    out.push_back({"square-skewed", make_based(square_cone(), square_skewed_phi())});
    out.push_back({"segment", make_based(orthant(2), all_ones(2))});
    out.push_back({"triangle", make_based(orthant(3), all_ones(3))});
    out.push_back({"tetrahedron", make_based(orthant(4), all_ones(4))});
    out.push_back({"pentagon", make_based(cone_over(pentagon_points()), lift_phi(3))});
    out.push_back({"cube", make_based(cone_over(cube_points()), lift_phi(4))});
    out.push_back({"prism", make_based(cone_over(prism_points()), lift_phi(4))});
    out.push_back({"octahedron", make_based(cone_over(octahedron_points()), lift_phi(4))});
    return out;
}

std::vector<NamedPolytope> polytope_corpus() {
    std::vector<NamedPolytope> out;
    out.push_back({"triangle", polytope_from_points(triangle_points())});
    out.push_back({"square", base_polytope(square_cone(), square_phi())});
    out.push_back({"cube", polytope_from_points(cube_points())});
    out.push_back({"prism", polytope_from_points(prism_points())});
    out.push_back({"pentagon", polytope_from_points(pentagon_points())});
    out.push_back({"quadrilateral", base_polytope(square_cone(), square_skewed_phi())});
    out.push_back({"octahedron", polytope_from_points(octahedron_points())});
    return out;
}

}  // namespace conext::fixtures
