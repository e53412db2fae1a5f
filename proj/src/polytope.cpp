#include "conext/polytope.hpp"

#include "conext/cone.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace conext {

namespace {

constexpr std::size_t kMaxFacetsForSubsetScan = 20;

}  // namespace

Polytope polytope_from_points(const std::vector<RationalVector>& points) {
    if (points.empty()) throw ConeError("empty point list");
    std::vector<RationalVector> lifted;
    lifted.reserve(points.size());
    for (const auto& v : points) {
        RationalVector l{Rational(1)};
        l.insert(l.end(), v.begin(), v.end());
        lifted.push_back(std::move(l));
    }
    const Cone c = make_cone(lifted);
    RationalVector e0(c.dim());
    e0[0] = Rational(1);
    return base_polytope(c, e0);
}

RationalVector unlift(const RationalVector& lifted) { return RationalVector(lifted.begin() + 1, lifted.end()); }

FacetSet avoiding_set(const Polytope& p, std::size_t vertex) {
    FacetSet out;
    const auto& row = p.incidence.at(vertex);
    for (std::size_t f = 0; f < row.size(); ++f) {
        if (!row[f]) out.insert(f);
    }
    return out;
}

bool is_simple(const Polytope& p) {
    return std::all_of(p.incidence.begin(), p.incidence.end(), [&](const std::vector<bool>& row) {
        return static_cast<std::size_t>(std::count(row.begin(), row.end(), true)) == p.dim;
    });
}

bool is_two_level(const Polytope& p) {
    for (const auto& psi : p.facet_functionals) {
        std::optional<Rational> level;
        for (const auto& v : p.vertices) {
            const Rational val = dot(psi, v);
            if (val.is_zero()) continue;
            if (!level) level = val;
            else if (*level != val) return false;
        }
        if (!level) return false;
    }
    return true;
}

VertexSet face_from_facets(const Polytope& p, const FacetSet& s) {
    VertexSet out;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        if (std::all_of(s.begin(), s.end(), [&](std::size_t f) { return p.incidence[v].at(f); })) out.insert(v);
    }
    return out;
}

std::string to_string(AffineDim d) { return d.is_empty() ? std::string("empty") : std::to_string(d.value); }

HullComparison compare_hulls(const Polytope& p, const FacetSet& s) {
    HullComparison out;
    const VertexSet face = face_from_facets(p, s);
    if (!face.empty()) {
        RationalMatrix m;
        for (auto v : face) m.push_back(p.vertices[v]);
        // The hyperplane misses the origin, so linear rank = affine dim + 1.
        out.face_hull.value = static_cast<long>(rank(std::move(m))) - 1;
    }
    RationalMatrix psi;
    for (auto f : s) psi.push_back(p.facet_functionals.at(f));
    const std::size_t r = rank(psi);
    psi.push_back(p.hyperplane);
    if (rank(psi) > r) {
        out.hull_intersection.value = static_cast<long>(p.ambient_dim()) - static_cast<long>(r) - 1;
    }
    return out;
}

std::optional<HullViolation> affine_hull_violation(const Polytope& p) {
    const std::size_t m = p.facet_count();
    if (m > kMaxFacetsForSubsetScan) {
        throw std::invalid_argument("facet subset scan limited to " + std::to_string(kMaxFacetsForSubsetScan) +
                                    " facets, got " + std::to_string(m));
    }
    for (std::size_t size = 1; size <= m; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            const FacetSet s(pick.begin(), pick.end());
            const HullComparison cmp = compare_hulls(p, s);
            if (!(cmp.face_hull == cmp.hull_intersection)) return HullViolation{s, cmp};
            // next combination
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::size_t SimplexFactorization::nontrivial_factors() const {
    return static_cast<std::size_t>(std::count_if(factor_dims.begin(), factor_dims.end(), [](std::size_t d) { return d > 0; }));
}

std::vector<std::size_t> SimplexFactorization::sorted_dims() const {
    auto d = factor_dims;
    std::sort(d.begin(), d.end());
    return d;
}

IncidenceMatrix reconstruct_incidence(const SimplexFactorization& f, std::size_t facet_count) {
    IncidenceMatrix inc(f.vertex_labeling.size(), std::vector<bool>(facet_count, false));
    for (std::size_t v = 0; v < f.vertex_labeling.size(); ++v) {
        for (std::size_t c = 0; c < f.facet_classes.size(); ++c) {
            for (std::size_t pos = 0; pos < f.facet_classes[c].size(); ++pos) {
                inc[v][f.facet_classes[c][pos]] = f.vertex_labeling[v][c] != pos;
            }
        }
    }
    return inc;
}

FactorizationResult factor_as_simplices(const Polytope& p) {
    if (!is_simple(p)) return FactorizationFailure{"not simple"};
    if (!is_two_level(p)) return FactorizationFailure{"not 2-level"};

    const std::size_t nf = p.facet_count();
    const std::size_t nv = p.vertex_count();

    SimplexFactorization out;
    for (const auto& psi : p.facet_functionals) {
        Rational level;
        for (const auto& v : p.vertices) {
            level = dot(psi, v);
            if (!level.is_zero()) break;
        }
        RationalVector scaled(psi.size());
        for (std::size_t i = 0; i < psi.size(); ++i) scaled[i] = psi[i] / level;
        out.normalized_functionals.push_back(std::move(scaled));
    }

    // F ~ G iff F = G or no vertex avoids both.
    auto related = [&](std::size_t f, std::size_t g) {
        if (f == g) return true;
        for (std::size_t v = 0; v < nv; ++v) {
            if (!p.incidence[v][f] && !p.incidence[v][g]) return false;
        }
        return true;
    };
    std::vector<std::vector<std::size_t>> class_of(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        for (std::size_t g = 0; g < nf; ++g) {
            if (related(f, g)) class_of[f].push_back(g);
        }
    }
    std::vector<bool> assigned(nf, false);
    for (std::size_t f = 0; f < nf; ++f) {
        if (assigned[f]) continue;
        for (auto g : class_of[f]) {
            if (class_of[g] != class_of[f]) return FactorizationFailure{"facet relation is not transitive"};
            assigned[g] = true;
        }
        out.facet_classes.push_back(class_of[f]);
        out.factor_dims.push_back(class_of[f].size() - 1);
    }

    out.vertex_labeling.assign(nv, std::vector<std::size_t>(out.facet_classes.size()));
    for (std::size_t v = 0; v < nv; ++v) {
        for (std::size_t c = 0; c < out.facet_classes.size(); ++c) {
            const auto& cls = out.facet_classes[c];
            std::size_t avoided = 0;
            std::size_t label = 0;
            for (std::size_t pos = 0; pos < cls.size(); ++pos) {
                if (!p.incidence[v][cls[pos]]) {
                    ++avoided;
                    label = pos;
                }
            }
            if (avoided != 1) return FactorizationFailure{"a vertex does not avoid exactly one facet per class"};
            out.vertex_labeling[v][c] = label;

            Rational sum;
            for (auto f : cls) sum += dot(out.normalized_functionals[f], p.vertices[v]);
            if (sum != Rational(1)) return FactorizationFailure{"class functional sum is not constant on vertices"};
        }
    }

    std::size_t expected = 1;
    std::size_t dim_sum = 0;
    for (const auto& cls : out.facet_classes) {
        expected *= cls.size();
        dim_sum += cls.size() - 1;
    }
    if (expected != nv) return FactorizationFailure{"vertex count differs from product of class sizes"};
    auto labels = out.vertex_labeling;
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        return FactorizationFailure{"vertex labeling is not injective"};
    }
    if (dim_sum != p.dim) return FactorizationFailure{"factor dimensions do not add up to the polytope dimension"};
    if (reconstruct_incidence(out, nf) != p.incidence) {
        return FactorizationFailure{"reconstructed incidence differs from the input"};
    }
    return out;
}

}  // namespace conext
