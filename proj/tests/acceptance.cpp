// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "conext/cone.hpp"
#include "conext/extendibility.hpp"
#include "conext/fixtures.hpp"
#include "conext/io.hpp"
#include "conext/linalg.hpp"
#include "conext/lp.hpp"
#include "conext/polytope.hpp"
#include "conext/quantum.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace conext;
namespace fx = conext::fixtures;

namespace {

// Wall-clock limits in seconds.
constexpr double collapse_limit = 60.0;
constexpr double hull_corpus_limit = 10.0;
constexpr double quantum_limit = 30.0;

constexpr std::size_t collapse_samples = 200;
constexpr std::size_t collapse_ray_pool = 40;
constexpr std::size_t hierarchy_simplicial_points = 20;
constexpr std::size_t hierarchy_k_max = 6;
constexpr std::size_t soundness_queries = 500;

const std::string fixture_dir = CONEXT_FIXTURE_DIR;

struct Outcome {
    bool pass = false;
    std::string detail;
};

class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

RationalVector flatten(const Tensor& t) { return RationalVector(t.entries().begin(), t.entries().end()); }

Tensor bipartite(const RationalVector& flat, std::size_t na, std::size_t nb) {
    return Tensor({{na, Variance::primal}, {nb, Variance::primal}}, flat);
}

Rational small_positive(std::mt19937_64& rng) { return Rational(std::uniform_int_distribution<long>(1, 9)(rng), std::uniform_int_distribution<long>(1, 5)(rng)); }

RationalVector combination(std::mt19937_64& rng, const std::vector<RationalVector>& gens, bool strictly_positive) {
    RationalVector out(gens.front().size());
    for (const auto& g : gens) {
        const Rational w = strictly_positive || rng() % 2 ? small_positive(rng) : Rational(0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * g[i];
    }
    return out;
}

Cone random_simplicial(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> entry(-4, 6);
    while (true) {
        RationalMatrix m(n, RationalVector(n));
        for (auto& row : m) {
            for (auto& x : row) x = Rational(entry(rng));
        }
        if (rank(m) == n) return make_cone(m);
    }
}

Cone random_polygon_cone(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coord(-6, 6);
    while (true) {
        std::vector<RationalVector> gens;
        for (int i = 0; i < 7; ++i) gens.push_back({Rational(1), Rational(coord(rng)), Rational(coord(rng))});
        try {
            Cone c = make_cone(gens);
            if (!is_simplicial(c)) return c;
        } catch (const ConeError&) {
        }
    }
}

BasedCone with_interior_phi(const Cone& c) { return make_based(c, interior_point(dualize(c))); }

// ---------------------------------------------------------------------------

Outcome square_collapse() {
    const Cone sq = fx::square_cone();
    const BasedCone b = make_based(sq, fx::square_phi());
    const auto rows = max_tensor_halfspaces(sq, {sq, sq});
    const RationalVector& phi = fx::square_phi();
    const RationalVector norm = kron_vectors({&phi, &phi, &phi});
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<long> obj(-9, 9);

    // Extreme rays of the max cone as vertices of its normalized slice.
    std::vector<RationalVector> pool;
    for (std::size_t i = 0; i < collapse_ray_pool; ++i) {
        LpProblem p;
        p.variables = norm.size();
        p.equalities.push_back({norm, Rational(1)});
        for (const auto& r : rows) p.inequalities.push_back({r, Rational(0)});
        RationalVector c(norm.size());
        for (auto& x : c) x = Rational(obj(rng));
        p.objective = c;
        const LpOutcome out = solve(p);
        require(out.status == LpStatus::feasible, "normalized max slice LP not bounded feasible");
        RationalMatrix tight{norm};
        for (const auto& r : rows) {
            if (dot(r, out.point).is_zero()) tight.push_back(r);
        }
        require(rank(tight) == norm.size(), "LP solution is not a vertex");
        if (std::find(pool.begin(), pool.end(), out.point) == pool.end()) pool.push_back(out.point);
    }

    const ReductionMap g = reduction_map(b, 2);
    const auto min_gens = min_tensor_generators(sq, sq);
    const std::vector<Slot> slots(3, Slot{3, Variance::primal});
    std::size_t passed = 0;
    for (std::size_t s = 0; s < collapse_samples; ++s) {
        RationalVector z(norm.size());
        const std::size_t terms = 1 + s % 4;
        for (std::size_t t = 0; t < terms; ++t) {
            const RationalVector& r = pool[rng() % pool.size()];
            const Rational w = small_positive(rng);
            for (std::size_t i = 0; i < z.size(); ++i) z[i] += w * r[i];
        }
        for (const auto& r : rows) require(dot(r, z).sign() >= 0, "sample left the max cone");
        const RationalVector y = flatten(apply_reduction(g, Tensor(slots, z)));
        const ConicOutcome out = conic_membership(y, min_gens);
        if (out.member && verify_decomposition(y, min_gens, out.weights)) ++passed;
    }
    return {passed == collapse_samples, std::to_string(passed) + "/" + std::to_string(collapse_samples) +
                                            " reduced samples in the min product, " + std::to_string(pool.size()) + " distinct extreme rays"};
}

std::vector<fx::NamedBasedCone> eb_corpus() {
    auto corpus = fx::based_corpus();
    corpus.push_back({"square-pyramid", make_based(fx::cone_over(fx::square_pyramid_points()), fx::lift_phi(4))});
    return corpus;
}

Outcome eb_equivalence() {
    std::size_t agree = 0, total = 0, eb = 0;
    for (const auto& [name, b] : eb_corpus()) {
        for (std::size_t k = 1; k <= 3; ++k) {
            ++total;
            try {
                const EbVerdict v = is_entanglement_breaking(b, k);
                if (v.combinatorial == v.linear_program) ++agree;
                eb += v.entanglement_breaking;
            } catch (const ConsistencyError& e) {
                std::cerr << "  " << name << " k=" << k << ": " << e.what() << '\n';
            }
        }
    }
    return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " (cone, k) pairs agree (" +
                                std::to_string(eb) + " entanglement breaking)"};
}

Outcome skewed_gap_points() {
    const Cone a = fx::square_cone();
    const BasedCone skewed = make_based(fx::square_cone(), fx::square_skewed_phi());
    const auto min_gens = min_tensor_generators(a, a);
    std::string detail;
    for (std::size_t k : {2, 3}) {
        const Tensor x = io::read_tensor(fixture_dir + "/gap-k" + std::to_string(k) + ".tensor").tensor();
        const ExtkVerdict v = ext_k_membership(x, a, skewed, k);
        require(v.member, "gap point not in Ext_" + std::to_string(k));
        require(verify_ext_verdict(v, x, a, skewed, k), "Ext_" + std::to_string(k) + " extension failed re-verification");
        const RationalVector flat = flatten(x);
        const ConicOutcome m = conic_membership(flat, min_gens);
        require(!m.member, "gap point lies in the min product");
        require(verify_separator(flat, min_gens, m.separator), "min separator failed re-verification");
        detail += (detail.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + " member of Ext_k, separated from min by " +
                  to_string(m.separator);
    }
    return {true, detail};
}

bool min_equals_max(const Cone& a, const Cone& b) {
    const auto gens = min_tensor_generators(a, b);
    const auto rows = max_tensor_halfspaces(a, {b});
    for (const auto& g : gens) {
        for (const auto& r : rows) {
            if (dot(r, g).sign() < 0) return false;
        }
    }
    for (const auto& ray : double_description(rows)) {
        const ConicOutcome out = conic_membership(ray, gens);
        if (!out.member || !verify_decomposition(ray, gens, out.weights)) return false;
    }
    return true;
}

Outcome simplicial_collapse() {
    std::mt19937_64 rng(1004);
    std::vector<Cone> bs, as;
    for (std::size_t n : {2, 3, 3}) bs.push_back(random_simplicial(rng, n));
    for (int i = 0; i < 2; ++i) as.push_back(random_polygon_cone(rng));
    std::size_t equal = 0;
    for (const auto& a : as) {
        for (const auto& b : bs) equal += min_equals_max(a, b);
    }
    require(equal == as.size() * bs.size(), "min != max for a simplicial factor");

    const Cone sq = fx::square_cone();
    const auto gens = min_tensor_generators(sq, sq);
    for (const auto& ray : double_description(max_tensor_halfspaces(sq, {sq}))) {
        const ConicOutcome out = conic_membership(ray, gens);
        if (out.member) continue;
        require(verify_separator(ray, gens, out.separator), "square separator failed re-verification");
        return {true, std::to_string(equal) + "/6 simplicial pairs with min = max; square max ray " + to_string(ray) +
                          " separated by " + to_string(out.separator)};
    }
    throw Failure("no max point outside min for the square");
}

Outcome hull_corpus() {
    const std::set<std::string> commuting{"triangle", "square", "cube", "prism"};
    std::string detail;
    for (const auto& [name, p] : fx::polytope_corpus()) {
        const auto violation = affine_hull_violation(p);
        require(violation.has_value() != commuting.count(name), name + ": unexpected verdict");
        const bool product = std::holds_alternative<SimplexFactorization>(factor_as_simplices(p));
        require(product == !violation, name + ": disagrees with product-of-simplices recognition");
        require(product == (is_simple(p) && is_two_level(p)), name + ": disagrees with simple and 2-level");
        if (violation) {
            const HullComparison dims = compare_hulls(p, violation->facets);
            require(!(dims.face_hull == dims.hull_intersection), name + ": witness does not witness");
            std::string s;
            for (std::size_t f : violation->facets) s += (s.empty() ? "" : ",") + std::to_string(f + 1);
            detail += (detail.empty() ? "" : ", ") + name + " {" + s + "}";
        }
    }
    return {true, "witnesses: " + detail};
}

Outcome omega_sides() {
    std::size_t checked = 0;
    for (const auto& [name, b] : eb_corpus()) {
        for (std::size_t k = 1; k <= 3; ++k) {
            omega_interior_test(b, k);  // throws when the sides disagree
            ++checked;
        }
    }
    const BasedCone sq = make_based(fx::square_cone(), fx::square_phi());
    const OmegaInteriority k1 = omega_interior_test(sq, 1), k2 = omega_interior_test(sq, 2);
    require(k1.interior && !k2.interior && k1.min_avoiding == 2, "square interiority does not flip at k = 2");
    return {true, std::to_string(checked) + " (cone, k) pairs agree; square interior at k=1, not at k=2"};
}

Outcome appendix() {
    const quantum::AppendixReport r = quantum::verify_appendix();
    require(r.claims.size() == 4 && r.all_pass(), "not all claims pass");
    return {true, "4/4 claims, reduction scale " + r.reduction_scale.str()};
}

Outcome dual_hierarchy() {
    std::mt19937_64 rng(1008);
    std::size_t level_one = 0;
    for (std::size_t i = 0; i < hierarchy_simplicial_points; ++i) {
        const Cone a = random_simplicial(rng, 2 + i % 2);
        const BasedCone b = with_interior_phi(random_simplicial(rng, 2 + (i / 2) % 2));
        const RationalVector flat = combination(rng, min_tensor_generators(a, b.cone), true);
        const Tensor x = bipartite(flat, a.dim(), b.cone.dim());
        const DualHierarchyResult r = dual_hierarchy_k(x, a, b, hierarchy_k_max);
        if (r.level && *r.level == 1 &&
            verify_decomposition(symmetrized_power_target(x, r.y, 1), min_sym_generators(a, b.cone, 1), r.weights)) {
            ++level_one;
        }
    }
    require(level_one == hierarchy_simplicial_points, std::to_string(level_one) + " simplicial points at level 1");

    const Cone sq = fx::square_cone();
    const BasedCone b = make_based(sq, fx::square_phi());
    const auto gap = search_gap_point(sq, b, 1);
    require(gap.has_value(), "no k = 1 gap point for the square");
    const auto gens = min_tensor_generators(sq, sq);
    RationalVector x = flatten(*gap);
    for (const auto& g : gens) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += Rational(1, 128) * g[i];
    }
    const Tensor xt = bipartite(x, 3, 3);
    require(!conic_membership(x, gens).member, "constructed point lies in the min product");
    const DualHierarchyResult r = dual_hierarchy_k(xt, sq, b, hierarchy_k_max);
    require(r.level.has_value(), "square point not resolved by k = 6");
    require(verify_decomposition(symmetrized_power_target(xt, r.y, *r.level), min_sym_generators(sq, b.cone, *r.level), r.weights),
            "square decomposition failed re-verification");
    return {true, std::to_string(level_one) + "/" + std::to_string(hierarchy_simplicial_points) +
                      " simplicial points at k=1; square point resolved at k=" + std::to_string(*r.level)};
}

Outcome certificate_soundness() {
    std::mt19937_64 rng(1009);
    const std::vector<std::pair<std::string, Cone>> as{
        {"square", fx::square_cone()}, {"pentagon", fx::cone_over(fx::pentagon_points())}, {"orthant3", fx::orthant(3)}};
    std::vector<fx::NamedBasedCone> bs;
    for (auto& c : fx::based_corpus()) {
        if (c.cone.cone.dim() <= 3) bs.push_back(c);
    }
    std::size_t failures = 0, members = 0, non_members = 0;
    for (std::size_t q = 0; q < soundness_queries; ++q) {
        const Cone& a = as[q % as.size()].second;
        const BasedCone& b = bs[(q / as.size()) % bs.size()].cone;
        const auto gens = min_tensor_generators(a, b.cone);
        RationalVector flat = combination(rng, gens, false);
        if (q % 4 != 0) {
            const long spread = q % 4 == 1 ? 1 : 12;
            for (auto& c : flat) c += Rational(std::uniform_int_distribution<long>(-spread, spread)(rng), 4);
        }
        const Tensor x = bipartite(flat, a.dim(), b.cone.dim());
        bool ok = false, member = false;
        if (q % 5 == 0) {
            const ConicOutcome out = conic_membership(flat, gens);
            member = out.member;
            ok = member ? verify_decomposition(flat, gens, out.weights) : verify_separator(flat, gens, out.separator);
        } else {
            const std::size_t k = q % 25 == 1 ? 3 : 1 + q % 2;
            const ExtkVerdict v = ext_k_membership(x, a, b, k);
            member = v.member;
            ok = verify_ext_verdict(v, x, a, b, k);
        }
        failures += !ok;
        (member ? members : non_members)++;
    }
    return {failures == 0, std::to_string(soundness_queries - failures) + "/" + std::to_string(soundness_queries) +
                               " certificates re-verified (" + std::to_string(members) + " member, " +
                               std::to_string(non_members) + " non-member)"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double limit;  // seconds; 0 means no limit
    };
    const std::vector<Criterion> criteria{
        {"square-cone collapse at k=2", square_collapse, collapse_limit},
        {"entanglement-breaking route agreement", eb_equivalence, 0},
        {"skewed-phi gap points at k=2 and k=3", skewed_gap_points, 0},
        {"min = max for simplicial factors at k=1", simplicial_collapse, 0},
        {"affine hull corpus", hull_corpus, hull_corpus_limit},
        {"vertex-facet tensor interiority", omega_sides, 0},
        {"exact operator identities over Q(sqrt 2)", appendix, quantum_limit},
        {"dual hierarchy level", dual_hierarchy, 0},
        {"certificate soundness", certificate_soundness, 0},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit > 0 && secs > c.limit) {
            o.pass = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(c.limit)) + " s limit)";
        }
        all = all && o.pass;
        std::ostringstream t;
        t << std::fixed << std::setprecision(2) << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << c.name << ": " << o.detail << " [" << t.str() << " s]"
                  << std::endl;
    }
    return all ? 0 : 1;
}
