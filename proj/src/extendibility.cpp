#include "conext/extendibility.hpp"

#include <algorithm>
#include <map>

namespace conext {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

void require_level(std::size_t k) {
    if (k == 0) throw ExtendibilityError("level k must be at least 1");
}

/// P_Sym(g_{m_1} (x) ... (x) g_{m_k}) at every sorted index, for every multiset
/// m of the given vectors: table[multiset][sorted index].
std::vector<RationalVector> sym_product_table(const std::vector<RationalVector>& vectors, std::size_t n,
                                              std::size_t k) {
    const auto index_sets = multisets(n, k);
    std::vector<RationalVector> table;
    for (const auto& fm : multisets(vectors.size(), k)) {
        std::vector<const RationalVector*> ptrs;
        for (std::size_t s : fm) ptrs.push_back(&vectors[s]);
        RationalVector row;
        row.reserve(index_sets.size());
        for (const auto& m : index_sets) row.push_back(sym_product_entry(ptrs, m));
        table.push_back(std::move(row));
    }
    return table;
}

/// (Id (x) phi^{(x)(k-1)})(P_Sym e_m) at coordinate j:
/// (1/k) sum over positions t with m_t = j of prod_{s != t} phi[m_s].
std::vector<RationalVector> sym_contraction_table(const RationalVector& phi, std::size_t k) {
    const std::size_t n = phi.size();
    std::vector<RationalVector> table;
    const Rational inv_k(1, static_cast<long>(k));
    for (const auto& m : multisets(n, k)) {
        RationalVector row(n);
        for (std::size_t t = 0; t < k; ++t) {
            Rational prod(1);
            for (std::size_t s = 0; s < k; ++s) {
                if (s != t) prod *= phi[m[s]];
            }
            row[m[t]] += prod * inv_k;
        }
        table.push_back(std::move(row));
    }
    return table;
}

std::size_t orbit_size(const MultiIndex& sorted) {
    std::size_t out = factorial(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out /= factorial(j - i);
        i = j;
    }
    return out;
}

std::vector<Slot> ab_slots(std::size_t na, std::size_t nb, std::size_t k, Variance v = Variance::primal) {
    std::vector<Slot> slots{{na, v}};
    for (std::size_t i = 0; i < k; ++i) slots.push_back({nb, v});
    return slots;
}

void require_bipartite(const Tensor& x, std::size_t na, std::size_t nb, Variance v = Variance::primal) {
    if (x.slots() != ab_slots(na, nb, 1, v)) throw ExtendibilityError("tensor does not live in V_A (x) V_B");
}

/// Every ordered tuple of `count` indices below `n`, visited depth first with
/// a running contraction of `t` by vectors[idx] on slot 0.
template <class Visit>
void contract_tuples(const Tensor& t, const std::vector<Tensor>& vectors, std::size_t count,
                     std::vector<std::size_t>& prefix, Visit&& visit) {
    if (count == 0) {
        visit(prefix, t);
        return;
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        prefix.push_back(i);
        contract_tuples(contract_slot(t, 0, vectors[i]), vectors, count - 1, prefix, visit);
        prefix.pop_back();
    }
}

std::vector<Tensor> as_tensors(const std::vector<RationalVector>& vs, Variance v) {
    std::vector<Tensor> out;
    for (const auto& x : vs) out.push_back(Tensor::vector(x, v));
    return out;
}

/// LP rows shared by membership and gap search: variables are sym_basis
/// coordinates c[a * M + m] of y in V_A (x) Sym_k(V_B).
struct ExtLayout {
    std::size_t na = 0, nb = 0, k = 0, sym = 0;
    std::vector<MultiIndex> index_sets;
    std::vector<RationalVector> halfspaces;  // one per (facet of A, facet multiset of B)
    std::vector<RationalVector> reduce;      // reduce[m][j]

    ExtLayout(const Cone& a, const BasedCone& b, std::size_t level)
        : na(a.dim()), nb(b.cone.dim()), k(level), index_sets(multisets(nb, level)) {
        sym = index_sets.size();
        halfspaces = dual_min_sym_generators(a, b.cone, k);
        reduce = sym_contraction_table(b.phi, k);
    }

    std::size_t variables() const { return na * sym; }

    /// Row of (e_a (x) e_j)^* composed with the reduction.
    RationalVector reduction_row(std::size_t a, std::size_t j) const {
        RationalVector row(variables());
        for (std::size_t m = 0; m < sym; ++m) row[a * sym + m] = reduce[m][j];
        return row;
    }

    Tensor extension(const RationalVector& c) const {
        Tensor y(ab_slots(na, nb, k));
        std::map<MultiIndex, std::size_t> position;
        for (std::size_t m = 0; m < sym; ++m) position[index_sets[m]] = m;
        for (std::size_t f = 0; f < y.size(); ++f) {
            MultiIndex idx = y.multi_index(f);
            MultiIndex b_part(idx.begin() + 1, idx.end());
            std::sort(b_part.begin(), b_part.end());
            const Rational& coeff = c[idx[0] * sym + position.at(b_part)];
            if (!coeff.is_zero()) y[f] = coeff / Rational(static_cast<long>(orbit_size(b_part)));
        }
        return y;
    }

    Tensor reduced(const RationalVector& c) const {
        Tensor x(ab_slots(na, nb, 1));
        for (std::size_t a = 0; a < na; ++a) {
            for (std::size_t j = 0; j < nb; ++j) x.at({a, j}) = dot(reduction_row(a, j), c);
        }
        return x;
    }
};

}  // namespace

RationalVector kron_vectors(const std::vector<const RationalVector*>& factors) {
    RationalVector out{Rational(1)};
    for (const auto* f : factors) {
        RationalVector next;
        next.reserve(out.size() * f->size());
        for (const auto& x : out) {
            for (const auto& y : *f) next.push_back(x * y);
        }
        out = std::move(next);
    }
    return out;
}

std::vector<RationalVector> min_tensor_generators(const Cone& a, const Cone& b) {
    std::vector<RationalVector> out;
    for (const auto& x : a.rays()) {
        for (const auto& y : b.rays()) out.push_back(kron_vectors({&x, &y}));
    }
    return out;
}

std::vector<RationalVector> max_tensor_halfspaces(const Cone& a, const std::vector<Cone>& b_factors) {
    std::vector<RationalVector> out;
    for (const auto& f : a.facets()) out.push_back(f);
    for (const auto& c : b_factors) {
        std::vector<RationalVector> next;
        for (const auto& h : out) {
            for (const auto& g : c.facets()) next.push_back(kron_vectors({&h, &g}));
        }
        out = std::move(next);
    }
    return out;
}

ReductionMap reduction_map(const BasedCone& b, std::size_t k) {
    require_level(k);
    const std::size_t n = b.cone.dim();
    std::vector<Slot> slots(k, Slot{n, Variance::dual});
    slots.push_back({n, Variance::primal});
    Tensor t(slots);
    const Rational inv_k(1, static_cast<long>(k));
    const std::size_t rows = power(n, k);
    for (std::size_t r = 0; r < rows; ++r) {
        MultiIndex idx = t.multi_index(r * n);
        for (std::size_t s = 0; s < k; ++s) {
            Rational prod = inv_k;
            for (std::size_t u = 0; u < k && !prod.is_zero(); ++u) {
                if (u != s) prod *= b.phi[idx[u]];
            }
            t[r * n + idx[s]] += prod;
        }
    }
    return {b, k, std::move(t)};
}

Tensor apply_reduction(const ReductionMap& g, const Tensor& z) {
    const std::size_t n = g.base.cone.dim();
    if (z.order() != g.k + 1) throw ExtendibilityError("apply_reduction: expected slots (A, B_1, ..., B_k)");
    for (std::size_t s = 1; s <= g.k; ++s) {
        if (z.slots()[s] != Slot{n, Variance::primal}) throw ExtendibilityError("apply_reduction: B slot mismatch");
    }
    const std::size_t na = z.slots()[0].dim;
    const std::size_t inner = power(n, g.k);
    Tensor out(std::vector<Slot>{{na, Variance::primal}, {n, Variance::primal}});
    for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t i = 0; i < inner; ++i) {
            const Rational& zi = z[a * inner + i];
            if (zi.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[a * n + j].add_product(zi, g.tensor[i * n + j]);
        }
    }
    return out;
}

Tensor contract_trailing(const Tensor& y, const RationalVector& phi, std::size_t count) {
    const Tensor f = Tensor::vector(phi, Variance::dual);
    Tensor out = y;
    for (std::size_t i = 0; i < count; ++i) out = contract_slot(out, out.order() - 1, f);
    return out;
}

std::vector<RationalVector> dual_min_sym_generators(const Cone& a, const Cone& b, std::size_t k) {
    require_level(k);
    const auto table = sym_product_table(b.facets(), b.dim(), k);
    std::vector<RationalVector> out;
    for (const auto& f : a.facets()) {
        for (const auto& row : table) {
            RationalVector g;
            g.reserve(f.size() * row.size());
            for (const auto& fa : f) {
                for (const auto& w : row) g.push_back(fa * w);
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

RationalVector dual_reduction_target(const Tensor& zeta, const RationalVector& phi, std::size_t k) {
    require_level(k);
    const std::size_t nb = phi.size();
    const std::size_t na = zeta.slots().at(0).dim;
    require_bipartite(zeta, na, nb, Variance::dual);
    const auto reduce = sym_contraction_table(phi, k);
    RationalVector out;
    for (std::size_t a = 0; a < na; ++a) {
        for (const auto& row : reduce) {
            Rational acc;
            for (std::size_t j = 0; j < nb; ++j) acc.add_product(zeta[a * nb + j], row[j]);
            out.push_back(std::move(acc));
        }
    }
    return out;
}

ExtkVerdict ext_k_membership(const Tensor& x, const Cone& a, const BasedCone& b, std::size_t k) {
    require_level(k);
    const ExtLayout layout(a, b, k);
    require_bipartite(x, layout.na, layout.nb);

    LpProblem lp;
    lp.variables = layout.variables();
    for (std::size_t a_i = 0; a_i < layout.na; ++a_i) {
        for (std::size_t j = 0; j < layout.nb; ++j) {
            lp.equalities.push_back({layout.reduction_row(a_i, j), x.at({a_i, j})});
        }
    }
    for (const auto& h : layout.halfspaces) lp.inequalities.push_back({h, Rational()});

    const LpOutcome o = solve(lp);
    ExtkVerdict v;
    if (o.status != LpStatus::infeasible) {
        v.member = true;
        v.extension = layout.extension(o.point);
        if (layout.reduced(o.point) != x) throw LpVerificationError("extension does not reduce to the query point");
        return v;
    }

    // Any feasible y would give zeta(x) = lambda . (halfspaces . c) >= 0.
    RationalVector zeta(o.certificate.equality.size());
    for (std::size_t i = 0; i < zeta.size(); ++i) zeta[i] = -o.certificate.equality[i];
    zeta = primitive(zeta);
    v.witness = Tensor(ab_slots(layout.na, layout.nb, 1, Variance::dual), zeta);
    if (pairing(v.witness, x).sign() >= 0) throw LpVerificationError("witness is not negative on the query point");
    const ConicOutcome dual =
        conic_membership(dual_reduction_target(v.witness, b.phi, k), layout.halfspaces);
    if (!dual.member) throw LpVerificationError("witness is not in the dual of Ext_k");
    v.dual_weights = dual.weights;
    return v;
}

bool verify_ext_verdict(const ExtkVerdict& v, const Tensor& x, const Cone& a, const BasedCone& b, std::size_t k) {
    const std::size_t na = a.dim(), nb = b.cone.dim();
    if (v.member) {
        const Tensor& y = v.extension;
        if (y.slots() != ab_slots(na, nb, k)) return false;
        for (const auto& sigma : all_permutations(k)) {
            Permutation full{0};
            for (std::size_t s : sigma) full.push_back(s + 1);
            if (permute_slots(y, full) != y) return false;
        }
        if (contract_trailing(y, b.phi, k - 1) != x) return false;
        const auto fa = as_tensors(a.facets(), Variance::dual);
        const auto fb = as_tensors(b.cone.facets(), Variance::dual);
        bool ok = true;
        for (const auto& f : fa) {
            std::vector<std::size_t> prefix;
            contract_tuples(contract_slot(y, 0, f), fb, k, prefix,
                            [&](const std::vector<std::size_t>&, const Tensor& r) { ok &= r[0].sign() >= 0; });
        }
        return ok;
    }

    if (pairing(v.witness, x).sign() >= 0) return false;
    // (Id (x) P_Sym)(zeta (x) phi^{(x)(k-1)}) against the weighted generators,
    // both materialized in full.
    Tensor lhs = v.witness;
    for (std::size_t i = 1; i < k; ++i) lhs = kron(lhs, Tensor::vector(b.phi, Variance::dual));
    lhs = symmetric_project(lhs, 1, k);
    Tensor rhs(lhs.slots());
    const auto fms = multisets(b.cone.facets().size(), k);
    if (v.dual_weights.size() != a.facets().size() * fms.size()) return false;
    std::size_t g = 0;
    for (const auto& f : a.facets()) {
        for (const auto& fm : fms) {
            const Rational& w = v.dual_weights[g++];
            if (w.sign() < 0) return false;
            if (w.is_zero()) continue;
            Tensor prod;
            for (std::size_t s : fm) prod = kron(prod, Tensor::vector(b.cone.facets()[s], Variance::dual));
            rhs.add_scaled(w, kron(Tensor::vector(f, Variance::dual), symmetric_project(prod)));
        }
    }
    return lhs == rhs;
}

std::optional<Tensor> search_gap_point(const Cone& a, const BasedCone& b, std::size_t k) {
    require_level(k);
    const ExtLayout layout(a, b, k);
    const RationalVector phi_a = interior_point(dualize(a));

    // Extreme rays of C_A* (x)max C_B*: functionals on V_A* (x) V_B* cut out by x (x) y.
    const auto zetas = double_description(min_tensor_generators(a, b.cone));

    RationalVector normalization(layout.variables());
    for (std::size_t a_i = 0; a_i < layout.na; ++a_i) {
        for (std::size_t m = 0; m < layout.sym; ++m) {
            Rational prod = phi_a[a_i];
            for (std::size_t s : layout.index_sets[m]) prod *= b.phi[s];
            normalization[a_i * layout.sym + m] = prod;
        }
    }

    for (const auto& zeta : zetas) {
        LpProblem lp;
        lp.variables = layout.variables();
        for (const auto& h : layout.halfspaces) lp.inequalities.push_back({h, Rational()});
        lp.equalities.push_back({normalization, Rational(1)});
        RationalVector cost(lp.variables);
        for (std::size_t a_i = 0; a_i < layout.na; ++a_i) {
            for (std::size_t j = 0; j < layout.nb; ++j) {
                const Rational& z = zeta[a_i * layout.nb + j];
                if (z.is_zero()) continue;
                for (std::size_t m = 0; m < layout.sym; ++m) {
                    cost[a_i * layout.sym + m].add_product(z, layout.reduce[m][j]);
                }
            }
        }
        lp.objective = cost;
        const LpOutcome o = solve(lp);
        if (o.status == LpStatus::feasible && o.optimum->sign() < 0) return layout.reduced(o.point);
    }
    return std::nullopt;
}

std::vector<AdmissibleTuple> admissible_tuples(const BasedCone& b, std::size_t k) {
    require_level(k);
    const Polytope& p = b.base;
    const std::size_t nf = p.facet_count();
    std::vector<AdmissibleTuple> out;
    std::vector<FacetSet> avoid;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) avoid.push_back(avoiding_set(p, v));
    std::vector<std::size_t> tuple(k, 0);
    while (true) {
        const FacetSet chosen(tuple.begin(), tuple.end());
        for (std::size_t v = 0; v < p.vertex_count(); ++v) {
            if (std::includes(chosen.begin(), chosen.end(), avoid[v].begin(), avoid[v].end())) {
                out.push_back({tuple, v});
            }
        }
        std::size_t s = k;
        while (s > 0 && ++tuple[s - 1] == nf) tuple[--s] = 0;
        if (s == 0) break;
    }
    return out;
}

Tensor eb_tensor(const BasedCone& b, const EbDecomposition& d, std::size_t k) {
    const std::size_t n = b.cone.dim();
    std::vector<Slot> slots(k, Slot{n, Variance::dual});
    slots.push_back({n, Variance::primal});
    Tensor out(slots);
    for (const auto& term : d.terms) {
        if (term.facets.size() != k) throw ExtendibilityError("decomposition term has the wrong arity");
        Tensor prod;
        for (std::size_t f : term.facets) prod = kron(prod, Tensor::vector(b.base.facet_functionals.at(f), Variance::dual));
        out.add_scaled(term.weight, kron(symmetric_project(prod), Tensor::vector(b.base.vertices.at(term.vertex))));
    }
    return out;
}

EbVerdict is_entanglement_breaking(const BasedCone& b, std::size_t k) {
    require_level(k);
    EbVerdict v;
    const auto fact = factor_as_simplices(b.base);
    if (const auto* f = std::get_if<SimplexFactorization>(&fact)) {
        v.factorization = *f;
        v.combinatorial = f->nontrivial_factors() <= k;
    }

    const Polytope& p = b.base;
    const std::size_t n = b.cone.dim();
    const ReductionMap g = reduction_map(b, k);
    const auto index_sets = multisets(n, k);
    RationalVector target;
    for (std::size_t j = 0; j < n; ++j) {
        for (MultiIndex m : index_sets) {
            m.push_back(j);
            target.push_back(g.tensor.at(m));
        }
    }

    std::vector<FacetSet> avoid;
    for (std::size_t x = 0; x < p.vertex_count(); ++x) avoid.push_back(avoiding_set(p, x));
    const auto table = sym_product_table(p.facet_functionals, n, k);
    const auto fms = multisets(p.facet_count(), k);
    std::vector<RationalVector> gens;
    std::vector<EbTerm> labels;
    for (std::size_t i = 0; i < fms.size(); ++i) {
        const FacetSet chosen(fms[i].begin(), fms[i].end());
        for (std::size_t x = 0; x < p.vertex_count(); ++x) {
            if (!std::includes(chosen.begin(), chosen.end(), avoid[x].begin(), avoid[x].end())) continue;
            RationalVector gen;
            for (std::size_t j = 0; j < n; ++j) {
                for (const auto& w : table[i]) gen.push_back(p.vertices[x][j] * w);
            }
            gens.push_back(std::move(gen));
            labels.push_back({fms[i], x, Rational()});
        }
    }

    const ConicOutcome lp = conic_membership(target, gens);
    v.linear_program = lp.member;
    if (lp.member) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (lp.weights[i].is_zero()) continue;
            EbTerm t = labels[i];
            t.weight = lp.weights[i];
            v.decomposition.terms.push_back(std::move(t));
        }
        if (eb_tensor(b, v.decomposition, k) != g.tensor) throw LpVerificationError("EB decomposition does not re-sum");
    } else {
        v.separator = lp.separator;
    }
    if (v.combinatorial != v.linear_program) {
        throw ConsistencyError("entanglement-breaking routes disagree at k = " + std::to_string(k));
    }
    v.entanglement_breaking = v.linear_program;
    return v;
}

EbDecomposition product_decomposition(const BasedCone& b, const SimplexFactorization& f, std::size_t k) {
    const Polytope& p = b.base;
    const std::size_t l = f.facet_classes.size();
    if (l == 0 || l > k) throw ExtendibilityError("factorization needs between 1 and k factors");
    for (std::size_t d : f.factor_dims) {
        if (d == 0) throw ExtendibilityError("trivial factor in factorization");
    }
    // psi_F = scale[F] * (normalized psi_F).
    RationalVector scale(p.facet_count());
    for (std::size_t F = 0; F < p.facet_count(); ++F) {
        for (std::size_t x = 0; x < p.vertex_count(); ++x) {
            if (!p.incidence[x][F]) {
                scale[F] = dot(p.facet_functionals[F], p.vertices[x]);
                break;
            }
        }
    }
    const auto& pad_class = f.facet_classes[0];
    EbDecomposition d;
    for (std::size_t x = 0; x < p.vertex_count(); ++x) {
        std::vector<std::size_t> base_facets;
        for (std::size_t i = 0; i < l; ++i) base_facets.push_back(f.facet_classes[i][f.vertex_labeling[x][i]]);
        // phi = sum over the first class of normalized functionals, once per padding slot.
        std::vector<std::size_t> pad(k - l, 0);
        while (true) {
            EbTerm t{base_facets, x, Rational(1)};
            for (std::size_t u : pad) t.facets.push_back(pad_class[u]);
            for (std::size_t F : t.facets) t.weight /= scale[F];
            d.terms.push_back(std::move(t));
            std::size_t s = pad.size();
            while (s > 0 && ++pad[s - 1] == pad_class.size()) pad[--s] = 0;
            if (s == 0) break;
        }
    }
    return d;
}

Tensor vertex_facet_tensor(const BasedCone& b, std::size_t k) {
    require_level(k);
    const Polytope& p = b.base;
    const std::size_t n = b.cone.dim();
    std::vector<Slot> slots(k, Slot{n, Variance::primal});
    slots.push_back({n, Variance::dual});
    Tensor omega(slots);
    for (std::size_t F = 0; F < p.facet_count(); ++F) {
        RationalVector centroid(n);
        long count = 0;
        for (std::size_t x = 0; x < p.vertex_count(); ++x) {
            if (!p.incidence[x][F]) continue;
            for (std::size_t i = 0; i < n; ++i) centroid[i] += p.vertices[x][i];
            ++count;
        }
        for (auto& c : centroid) c /= Rational(count);
        omega += kron(tensor_power(Tensor::vector(centroid), k), Tensor::vector(p.facet_functionals[F], Variance::dual));
    }
    return omega;
}

Rational omega_pairing(const Tensor& omega, const BasedCone& b, const std::vector<std::size_t>& facets,
                       std::size_t vertex) {
    Tensor t = omega;
    for (std::size_t F : facets) t = contract_slot(t, 0, Tensor::vector(b.base.facet_functionals.at(F), Variance::dual));
    t = contract_slot(t, 0, Tensor::vector(b.base.vertices.at(vertex)));
    return t[0];
}

OmegaInteriority omega_interior_test(const BasedCone& b, std::size_t k) {
    require_level(k);
    const Polytope& p = b.base;
    const Tensor omega = vertex_facet_tensor(b, k);
    OmegaInteriority out;

    out.positivity_side = true;
    const auto psi = as_tensors(p.facet_functionals, Variance::dual);
    const auto verts = as_tensors(p.vertices, Variance::primal);
    std::vector<std::size_t> prefix;
    contract_tuples(omega, psi, k, prefix, [&](const std::vector<std::size_t>&, const Tensor& rest) {
        for (const auto& x : verts) out.positivity_side &= pairing(rest, x).sign() > 0;
    });

    out.min_avoiding = p.facet_count();
    for (std::size_t x = 0; x < p.vertex_count(); ++x) out.min_avoiding = std::min(out.min_avoiding, avoiding_set(p, x).size());
    out.avoiding_side = out.min_avoiding > k;

    if (out.positivity_side != out.avoiding_side) {
        throw ConsistencyError("vertex-facet tensor interiority sides disagree at k = " + std::to_string(k));
    }
    out.interior = out.positivity_side;
    return out;
}

std::vector<RationalVector> min_sym_generators(const Cone& a, const Cone& b, std::size_t k) {
    require_level(k);
    const auto table = sym_product_table(b.rays(), b.dim(), k);
    std::vector<RationalVector> out;
    for (const auto& r : a.rays()) {
        for (const auto& row : table) {
            RationalVector g;
            g.reserve(r.size() * row.size());
            for (const auto& ra : r) {
                for (const auto& w : row) g.push_back(ra * w);
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

RationalVector symmetrized_power_target(const Tensor& x, const RationalVector& y, std::size_t k) {
    Tensor zeta(dual_slots(x.slots()), RationalVector(x.entries().begin(), x.entries().end()));
    return dual_reduction_target(zeta, y, k);
}

DualHierarchyResult dual_hierarchy_k(const Tensor& x, const Cone& a, const BasedCone& b, std::size_t k_max) {
    require_bipartite(x, a.dim(), b.cone.dim());
    const RationalVector flat(x.entries().begin(), x.entries().end());
    for (const auto& h : max_tensor_halfspaces(a, {b.cone})) {
        if (dot(h, flat).sign() <= 0) throw ExtendibilityError("point is not in the interior of the max tensor product");
    }
    DualHierarchyResult out;
    const RationalVector s = interior_point(b.cone);
    const Rational scale = dot(b.phi, s);
    for (const auto& c : s) out.y.push_back(c / scale);
    for (std::size_t k = 1; k <= k_max; ++k) {
        const ConicOutcome o = conic_membership(symmetrized_power_target(x, out.y, k), min_sym_generators(a, b.cone, k));
        if (o.member) {
            out.level = k;
            out.weights = o.weights;
            return out;
        }
    }
    return out;
}

}  // namespace conext
