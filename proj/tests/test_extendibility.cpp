#include "doctest.h"

#include "conext/extendibility.hpp"
#include "conext/fixtures.hpp"
#include "conext/io.hpp"
#include "conext/linalg.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace conext;
namespace fx = conext::fixtures;
using conext::testing::random_nonneg;
using conext::testing::random_rational;

namespace {

const std::string fixture_dir = CONEXT_FIXTURE_DIR;

Tensor bipartite(const RationalVector& flat, std::size_t na, std::size_t nb) {
    return Tensor({{na, Variance::primal}, {nb, Variance::primal}}, flat);
}

RationalVector flatten(const Tensor& t) { return RationalVector(t.entries().begin(), t.entries().end()); }

bool in_max(const RationalVector& flat, const Cone& a, const Cone& b) {
    for (const auto& h : max_tensor_halfspaces(a, {b})) {
        if (dot(h, flat).sign() < 0) return false;
    }
    return true;
}

RationalVector random_combination(std::mt19937_64& rng, const std::vector<RationalVector>& gens) {
    RationalVector out(gens.front().size());
    for (const auto& g : gens) {
        const Rational w = random_nonneg(rng);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * g[i];
    }
    return out;
}

// Mix of points inside the min product, near it, and arbitrary.
RationalVector sample_point(std::mt19937_64& rng, const std::vector<RationalVector>& min_gens, int trial) {
    RationalVector x = random_combination(rng, min_gens);
    if (trial % 3 == 0) return x;
    for (auto& c : x) c += random_rational(rng, trial % 3 == 1 ? 2 : 20, 9);
    return x;
}

BasedCone named(const std::string& name) {
    for (auto& c : fx::based_corpus()) {
        if (c.name == name) return c.cone;
    }
    throw std::runtime_error("no corpus cone " + name);
}

// P_Sym(psi_{F_1} (x) ... (x) psi_{F_k}) (x) x_v over every facet multiset and
// vertex, flattened in the layout of ReductionMap::tensor.
std::vector<RationalVector> full_eb_generators(const BasedCone& b, std::size_t k) {
    std::vector<RationalVector> out;
    for (const auto& m : multisets(b.base.facet_count(), k)) {
        Tensor prod;
        for (std::size_t F : m) prod = kron(prod, Tensor::vector(b.base.facet_functionals[F], Variance::dual));
        const Tensor sym = symmetric_project(prod);
        for (const auto& v : b.base.vertices) out.push_back(flatten(kron(sym, Tensor::vector(v))));
    }
    return out;
}

}  // namespace

TEST_CASE("min tensor generators") {
    const auto simplicial = min_tensor_generators(fx::orthant(2), fx::orthant(2));
    CHECK(simplicial.size() == 4);
    CHECK(rank(simplicial) == 4);

    const Cone sq = fx::square_cone();
    const auto gens = min_tensor_generators(sq, sq);
    REQUIRE(gens.size() == 16);
    CHECK(make_cone(gens).rays().size() == 16);

    // A pure tensor of extreme rays decomposes with a single term.
    const RationalVector pure = kron_vectors({&sq.rays()[0], &sq.rays()[2]});
    const ConicOutcome out = conic_membership(pure, gens);
    REQUIRE(out.member);
    int nonzero = 0;
    for (const auto& w : out.weights) nonzero += !w.is_zero();
    CHECK(nonzero == 1);
}

TEST_CASE("max tensor half-spaces") {
    // For simplicial factors the min and max products coincide.
    const Cone o2 = fx::orthant(2);
    const auto rows = max_tensor_halfspaces(o2, {o2});
    CHECK(rows.size() == 4);
    CHECK(same_cone(make_cone(double_description(rows)), make_cone(min_tensor_generators(o2, o2))));

    const Cone sq = fx::square_cone();
    const auto sq_rows = max_tensor_halfspaces(sq, {sq});
    CHECK(sq_rows.size() == 16);
    const RationalVector& f0 = sq.facets()[0];
    const RationalVector& f3 = sq.facets()[3];
    CHECK(std::find(sq_rows.begin(), sq_rows.end(), kron_vectors({&f0, &f3})) != sq_rows.end());
    CHECK(max_tensor_halfspaces(sq, {sq, sq}).size() == 64);

    // Every min generator satisfies every max row.
    for (const auto& g : min_tensor_generators(sq, sq)) CHECK(in_max(g, sq, sq));
}

TEST_CASE("reduction map at k = 1 is the identity") {
    std::mt19937_64 rng(61);
    for (const auto& [name, b] : fx::based_corpus()) {
        const ReductionMap g = reduction_map(b, 1);
        const Tensor z = conext::testing::random_tensor(rng, {{2, Variance::primal}, {b.cone.dim(), Variance::primal}});
        CHECK_MESSAGE(apply_reduction(g, z) == z, name);
    }
}

TEST_CASE("reduction map at k = 2 averages with phi weights") {
    std::mt19937_64 rng(62);
    for (const auto& [name, b] : fx::based_corpus()) {
        const std::size_t n = b.cone.dim();
        const ReductionMap g = reduction_map(b, 2);
        for (int trial = 0; trial < 5; ++trial) {
            const RationalVector u = conext::testing::random_vector(rng, n);
            const RationalVector v = conext::testing::random_vector(rng, n);
            const Tensor z = kron(kron(Tensor::vector({1}), Tensor::vector(u)), Tensor::vector(v));
            RationalVector expected(n);
            for (std::size_t i = 0; i < n; ++i) expected[i] = (dot(b.phi, v) * u[i] + dot(b.phi, u) * v[i]) / Rational(2);
            CHECK_MESSAGE(flatten(apply_reduction(g, z)) == expected, name);
        }
    }
}

TEST_CASE("square reduction map at k = 2 expands over facet pairs") {
    const BasedCone b = make_based(fx::square_cone(), fx::square_phi());
    const auto psi = [](int s, int t) {
        return Tensor::vector({Rational(1, 2), Rational(s, 2), Rational(t, 2)}, Variance::dual);
    };
    const auto pair = [](const Tensor& p, const Tensor& q) { return kron(p, q) + kron(q, p); };
    const auto x = [](int s, int t) { return Tensor::vector({1, s, t}); };
    const Tensor expansion = kron(pair(psi(1, 1), psi(1, -1)), x(1, 0)) + kron(pair(psi(-1, 1), psi(-1, -1)), x(-1, 0)) +
                             kron(pair(psi(1, 1), psi(-1, 1)), x(0, 1)) + kron(pair(psi(1, -1), psi(-1, -1)), x(0, -1));
    CHECK(reduction_map(b, 2).tensor * Rational(2) == expansion);
}

TEST_CASE("Ext_1 is the max product") {
    std::mt19937_64 rng(63);
    for (const auto& [name, b] : fx::based_corpus()) {
        if (b.cone.dim() > 3) continue;
        const Cone a = fx::square_cone();
        const auto gens = min_tensor_generators(a, b.cone);
        for (int trial = 0; trial < 12; ++trial) {
            const RationalVector flat = sample_point(rng, gens, trial);
            const Tensor x = bipartite(flat, a.dim(), b.cone.dim());
            const ExtkVerdict v = ext_k_membership(x, a, b, 1);
            CHECK_MESSAGE(v.member == in_max(flat, a, b.cone), name);
            CHECK(verify_ext_verdict(v, x, a, b, 1));
        }
    }
}

TEST_CASE("Ext_k levels are nested and contain the min product") {
    std::mt19937_64 rng(64);
    const Cone a = fx::square_cone();
    for (const auto& phi : {fx::square_phi(), fx::square_skewed_phi()}) {
        const BasedCone b = make_based(fx::square_cone(), phi);
        const auto gens = min_tensor_generators(a, b.cone);
        for (int trial = 0; trial < 10; ++trial) {
            const RationalVector flat = sample_point(rng, gens, trial);
            const Tensor x = bipartite(flat, 3, 3);
            bool previous = true;
            for (std::size_t k = 1; k <= 3; ++k) {
                const ExtkVerdict v = ext_k_membership(x, a, b, k);
                CHECK(verify_ext_verdict(v, x, a, b, k));
                if (trial % 3 == 0) CHECK(v.member);
                if (v.member) CHECK(previous);
                previous = v.member;
            }
        }
    }
}

TEST_CASE("frozen gap points lie in Ext_k but outside the min product") {
    const Cone a = fx::square_cone();
    const BasedCone skewed = make_based(fx::square_cone(), fx::square_skewed_phi());
    const auto gens = min_tensor_generators(a, a);
    for (std::size_t k : {2, 3}) {
        const Tensor x = io::read_tensor(fixture_dir + "/gap-k" + std::to_string(k) + ".tensor").tensor();
        const ExtkVerdict v = ext_k_membership(x, a, skewed, k);
        CHECK(v.member);
        CHECK(verify_ext_verdict(v, x, a, skewed, k));
        const ConicOutcome min = conic_membership(flatten(x), gens);
        REQUIRE_FALSE(min.member);
        CHECK(verify_separator(flatten(x), gens, min.separator));
    }
}

TEST_CASE("gap search on the centered square") {
    const Cone a = fx::square_cone();
    const BasedCone b = make_based(fx::square_cone(), fx::square_phi());
    const auto gap = search_gap_point(a, b, 1);
    REQUIRE(gap);
    CHECK(ext_k_membership(*gap, a, b, 1).member);
    CHECK_FALSE(conic_membership(flatten(*gap), min_tensor_generators(a, a)).member);
    // The centered square is entanglement breaking at k = 2, so Ext_2 is the min product.
    CHECK_FALSE(search_gap_point(a, b, 2));
}

TEST_CASE("admissible tuples") {
    const BasedCone sq = named("square");
    CHECK(admissible_tuples(sq, 2).size() == 8);
    CHECK(admissible_tuples(sq, 1).empty());
    CHECK(admissible_tuples(named("triangle"), 1).size() == 3);
    for (const auto& t : admissible_tuples(named("cube"), 3)) {
        const FacetSet chosen(t.facets.begin(), t.facets.end());
        const FacetSet avoid = avoiding_set(named("cube").base, t.vertex);
        CHECK(std::includes(chosen.begin(), chosen.end(), avoid.begin(), avoid.end()));
    }
}

TEST_CASE("product decomposition re-sums to the reduction map") {
    for (const auto& [name, b] : fx::based_corpus()) {
        const FactorizationResult r = factor_as_simplices(b.base);
        const auto* f = std::get_if<SimplexFactorization>(&r);
        if (!f) continue;
        for (std::size_t k = f->nontrivial_factors(); k <= 3; ++k) {
            if (k == 0) continue;
            const EbDecomposition d = product_decomposition(b, *f, k);
            for (const auto& t : d.terms) CHECK(t.weight.sign() > 0);
            CHECK_MESSAGE(eb_tensor(b, d, k) == reduction_map(b, k).tensor, name << " k=" << k);
        }
    }
}

TEST_CASE("entanglement-breaking verdicts match a full-generator LP") {
    for (const auto& [name, b] : fx::based_corpus()) {
        for (std::size_t k = 1; k <= 3; ++k) {
            if (k == 3 && b.base.facet_count() > 6) continue;
            const EbVerdict v = is_entanglement_breaking(b, k);
            CHECK(v.combinatorial == v.linear_program);
            const RationalVector gamma = flatten(reduction_map(b, k).tensor);
            const auto gens = full_eb_generators(b, k);
            const ConicOutcome oracle = conic_membership(gamma, gens);
            CHECK_MESSAGE(v.entanglement_breaking == oracle.member, name << " k=" << k);
            if (v.entanglement_breaking) CHECK(eb_tensor(b, v.decomposition, k) == reduction_map(b, k).tensor);
        }
    }
    const BasedCone skewed = named("square-skewed");
    for (std::size_t k = 1; k <= 3; ++k) CHECK_FALSE(is_entanglement_breaking(skewed, k).entanglement_breaking);
    CHECK_FALSE(is_entanglement_breaking(named("square"), 1).entanglement_breaking);
    CHECK(is_entanglement_breaking(named("square"), 2).entanglement_breaking);
}

TEST_CASE("vertex-facet tensor is orthogonal to the reduction map") {
    for (const auto& [name, b] : fx::based_corpus()) {
        for (std::size_t k = 1; k <= 3; ++k) {
            CHECK_MESSAGE(pairing(reduction_map(b, k).tensor, vertex_facet_tensor(b, k)).is_zero(), name);
        }
    }
}

TEST_CASE("vertex-facet pairing vanishes exactly on admissible tuples") {
    for (const auto& [name, b] : fx::based_corpus()) {
        if (b.cone.dim() > 3) continue;
        const Tensor omega = vertex_facet_tensor(b, 1);
        std::set<std::pair<std::size_t, std::size_t>> admissible;
        for (const auto& t : admissible_tuples(b, 1)) admissible.insert({t.facets[0], t.vertex});
        for (std::size_t F = 0; F < b.base.facet_count(); ++F) {
            for (std::size_t x = 0; x < b.base.vertex_count(); ++x) {
                const Rational p = omega_pairing(omega, b, {F}, x);
                CHECK(p.sign() >= 0);
                CHECK_MESSAGE(p.is_zero() == admissible.count({F, x}) > 0, name);
            }
        }
    }
}

TEST_CASE("vertex-facet interiority") {
    CHECK(omega_interior_test(named("square"), 1).interior);
    CHECK_FALSE(omega_interior_test(named("square"), 2).interior);
    CHECK(omega_interior_test(named("pentagon"), 2).interior);
    CHECK_FALSE(omega_interior_test(named("pentagon"), 3).interior);
    CHECK_FALSE(omega_interior_test(named("triangle"), 1).interior);
    for (const auto& [name, b] : fx::based_corpus()) {
        for (std::size_t k = 1; k <= 3; ++k) {
            const OmegaInteriority r = omega_interior_test(b, k);
            CHECK_MESSAGE(r.interior == (r.min_avoiding > k), name);
        }
    }
}

TEST_CASE("dual hierarchy level") {
    const Cone a = fx::square_cone();
    const BasedCone b = make_based(fx::square_cone(), fx::square_phi());
    const auto gap = search_gap_point(a, b, 1);
    REQUIRE(gap);
    const auto gens = min_tensor_generators(a, a);
    RationalVector bary(9);
    for (const auto& g : gens) {
        for (std::size_t i = 0; i < 9; ++i) bary[i] += g[i];
    }
    const auto shifted = [&](const Rational& t) {
        RationalVector x = flatten(*gap);
        for (std::size_t i = 0; i < 9; ++i) x[i] += t * bary[i];
        return bipartite(x, 3, 3);
    };

    const Tensor outside = shifted(Rational(1, 128));
    REQUIRE_FALSE(conic_membership(flatten(outside), gens).member);
    const DualHierarchyResult r = dual_hierarchy_k(outside, a, b);
    REQUIRE(r.level);
    CHECK(*r.level == 2);
    CHECK(verify_decomposition(symmetrized_power_target(outside, r.y, 2), min_sym_generators(a, b.cone, 2), r.weights));
    CHECK(dot(b.phi, r.y) == Rational(1));

    const Tensor inside = shifted(Rational(1, 64));
    REQUIRE(conic_membership(flatten(inside), gens).member);
    CHECK(*dual_hierarchy_k(inside, a, b).level == 1);

    CHECK_THROWS_AS(dual_hierarchy_k(bipartite(gens[0], 3, 3), a, b), ExtendibilityError);
}

TEST_CASE("invalid arguments") {
    const Cone a = fx::square_cone();
    const BasedCone b = make_based(fx::square_cone(), fx::square_phi());
    const Tensor x = bipartite(RationalVector(9), 3, 3);
    CHECK_THROWS_AS(ext_k_membership(x, a, b, 0), ExtendibilityError);
    CHECK_THROWS_AS(reduction_map(b, 0), ExtendibilityError);
    CHECK_THROWS_AS(ext_k_membership(bipartite(RationalVector(6), 2, 3), a, b, 1), ExtendibilityError);
    CHECK_THROWS_AS(admissible_tuples(b, 0), ExtendibilityError);
}
