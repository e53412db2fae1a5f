#pragma once

// Proper polyhedral cones with certified double descriptions.

#include "conext/linalg.hpp"
#include "conext/polytope.hpp"
#include "conext/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace conext {

class ConeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A proper cone: full-dimensional, pointed, with extreme rays and facet
/// functionals stored as primitive integer vectors.
///
/// Rays keep the order of their first appearance among the generators.
/// Facets are ordered colexicographically by the set of rays they contain.
class Cone {
public:
    std::size_t dim() const { return dim_; }
    const std::vector<RationalVector>& rays() const { return rays_; }
    const std::vector<RationalVector>& facets() const { return facets_; }
    /// incidence()[r][f] is true iff facet f vanishes on ray r.
    const IncidenceMatrix& incidence() const { return incidence_; }

    /// Every facet functional is >= 0 on x.
    bool contains(const RationalVector& x) const;
    /// Every facet functional is > 0 on x.
    bool contains_in_interior(const RationalVector& x) const;

    friend Cone make_cone(const std::vector<RationalVector>& generators);
    friend Cone dualize(const Cone& c);

private:
    Cone() = default;
    void certify() const;

    std::size_t dim_ = 0;
    std::vector<RationalVector> rays_;
    std::vector<RationalVector> facets_;
    IncidenceMatrix incidence_;
};

/// Cone generated by the given vectors. Throws ConeError for empty input,
/// zero or ragged generators, a cone that is not full-dimensional, or one that
/// contains a line.
Cone make_cone(const std::vector<RationalVector>& generators);

/// C* with rays = facets of c and facets = rays of c.
Cone dualize(const Cone& c);

bool is_simplicial(const Cone& c);

/// Sum of the extreme rays; strictly positive on every facet.
RationalVector interior_point(const Cone& c);

/// Same ray set (order ignored).
bool same_cone(const Cone& a, const Cone& b);

/// Extreme rays of {f : <g, f> >= 0 for every row g}, by incremental double
/// description. The rows must span R^n.
std::vector<RationalVector> double_description(const std::vector<RationalVector>& rows);

/// A cone together with phi in int(C*) and the base K_phi = C cap phi^{-1}(1).
/// Base vertex i is ray i rescaled; base facet j is cone facet j.
struct BasedCone {
    Cone cone;
    RationalVector phi;
    Polytope base;
};

/// Throws ConeError when phi is not strictly positive on every ray.
BasedCone make_based(Cone c, RationalVector phi);

/// Polytope K_phi of a cone; shared by make_based and polytope construction.
Polytope base_polytope(const Cone& c, const RationalVector& phi);

}  // namespace conext
