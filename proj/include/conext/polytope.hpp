#pragma once

// Face structure of polytopes given as bases of polyhedral cones.
//
// A polytope always lives on an affine hyperplane {x : hyperplane(x) = 1} of
// its ambient space. Polytopes read from vertex lists in R^d are lifted to
// R^{d+1} with a leading coordinate 1, so facet functionals are linear maps
// on the ambient space whose restriction to the hyperplane is affine.

#include "conext/linalg.hpp"
#include "conext/rational.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace conext {

using FacetSet = std::set<std::size_t>;
using VertexSet = std::set<std::size_t>;
using IncidenceMatrix = std::vector<std::vector<bool>>;  // [vertex][facet]

struct Polytope {
    std::size_t dim = 0;                  // affine dimension
    RationalVector hyperplane;            // aff(P) = {x : hyperplane(x) = 1}
    RationalVector point;                 // a point of aff(P)
    RationalMatrix directions;            // basis of the direction space of aff(P)
    std::vector<RationalVector> vertices;
    std::vector<RationalVector> facet_functionals;  // >= 0 on P, zero exactly on the facet
    IncidenceMatrix incidence;

    std::size_t ambient_dim() const { return hyperplane.size(); }
    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t facet_count() const { return facet_functionals.size(); }
};

/// Convex hull of full-dimensional points in R^d, lifted to R^{d+1}.
/// Non-vertex points are discarded.
Polytope polytope_from_points(const std::vector<RationalVector>& points);

/// Lifted coordinates (1, v) back to v.
RationalVector unlift(const RationalVector& lifted);

FacetSet avoiding_set(const Polytope& p, std::size_t vertex);

bool is_simple(const Polytope& p);

bool is_two_level(const Polytope& p);

/// Vertices incident to every facet in s (all vertices when s is empty).
VertexSet face_from_facets(const Polytope& p, const FacetSet& s);

/// Dimension of an affine set; the empty set has its own sentinel so it is
/// never confused with a point.
struct AffineDim {
    static constexpr long empty_set = -1000;
    long value = empty_set;
    bool is_empty() const { return value == empty_set; }
    friend bool operator==(const AffineDim&, const AffineDim&) = default;
};

std::string to_string(AffineDim d);

/// aff of the common face versus the intersection of the facet hulls.
struct HullComparison {
    AffineDim face_hull;          // dim aff(intersection of facets)
    AffineDim hull_intersection;  // dim intersection of aff(facets)
};

HullComparison compare_hulls(const Polytope& p, const FacetSet& s);

struct HullViolation {
    FacetSet facets;
    HullComparison dims;
};

/// Checks aff(intersection) = intersection of aff over every nonempty facet
/// subset. Facet subsets suffice: every face is an intersection of facets,
/// and for faces G_i = intersection of facet sets S_i we have
/// aff(G_i) is contained in the intersection of aff(F) over F in S_i, with
/// equality when the property holds for S_i, so a violation for some face
/// family already shows up for the union of their facet sets.
/// Returns the first violating subset in (size, lexicographic) order.
std::optional<HullViolation> affine_hull_violation(const Polytope& p);

inline bool affine_hull_commutes(const Polytope& p) { return !affine_hull_violation(p).has_value(); }

struct SimplexFactorization {
    std::vector<std::size_t> factor_dims;                  // d_1, ..., d_l (class order)
    std::vector<std::vector<std::size_t>> vertex_labeling; // vertex -> (v_1, ..., v_l)
    std::vector<std::vector<std::size_t>> facet_classes;   // class i -> facets; position = factor vertex it avoids
    std::vector<RationalVector> normalized_functionals;    // psi_F scaled to value 1 off F

    std::size_t nontrivial_factors() const;
    /// Factor dimensions in ascending order.
    std::vector<std::size_t> sorted_dims() const;
};

struct FactorizationFailure {
    std::string reason;
};

using FactorizationResult = std::variant<SimplexFactorization, FactorizationFailure>;

/// Recognizes polytopes affinely equivalent to a product of simplices.
FactorizationResult factor_as_simplices(const Polytope& p);

/// Incidence implied by a factorization: vertex x lies on facet F of class i
/// iff x's i-th label is not the factor vertex F avoids.
IncidenceMatrix reconstruct_incidence(const SimplexFactorization& f, std::size_t facet_count);

}  // namespace conext
