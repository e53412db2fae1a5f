#pragma once

// Named cones and polytopes used by the CLI fixture directory and the tests.

#include "conext/cone.hpp"
#include "conext/polytope.hpp"

#include <string>
#include <vector>

namespace conext::fixtures {

/// Cone over the square: x+0 = (1,1,0), x-0 = (1,-1,0), x0+ = (1,0,1), x0- = (1,0,-1).
Cone square_cone();
RationalVector square_phi();         // (1, 0, 0)
RationalVector square_skewed_phi();  // (1, 1/5, 0)

Cone orthant(std::size_t n);
RationalVector all_ones(std::size_t n);

/// Cone over a lifted point set, (1, v) for each v.
Cone cone_over(const std::vector<RationalVector>& points);
/// e_0, the functional whose base is the original point set.
RationalVector lift_phi(std::size_t ambient);

std::vector<RationalVector> triangle_points();
std::vector<RationalVector> unit_square_points();
std::vector<RationalVector> pentagon_points();   // rational, convex, no parallel edges
std::vector<RationalVector> cube_points();
std::vector<RationalVector> prism_points();      // triangle x segment
std::vector<RationalVector> octahedron_points();
std::vector<RationalVector> square_pyramid_points();

struct NamedBasedCone {
    std::string name;
    BasedCone cone;
};

/// Based cones covering simplices, products of simplices, and non-products.
std::vector<NamedBasedCone> based_corpus();

struct NamedPolytope {
    std::string name;
    Polytope polytope;
};

/// triangle, square, cube, prism, pentagon, quadrilateral (skewed square base), octahedron.
std::vector<NamedPolytope> polytope_corpus();

}  // namespace conext::fixtures
