#pragma once

// Tensor products of cones, reduction maps and the extendibility hierarchy.
//
// Tensors of V_A (x) V_B^{(x)k} that are symmetric in the B slots are handled
// through their sorted coordinates: the entries at multi-indices whose B part
// is non-decreasing. Two symmetric tensors agree iff these coordinates agree.

#include "conext/cone.hpp"
#include "conext/lp.hpp"
#include "conext/polytope.hpp"
#include "conext/tensor.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace conext {

class ExtendibilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two independent decision routes reach different verdicts.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Flattened Kronecker product of vectors, first factor most significant.
RationalVector kron_vectors(const std::vector<const RationalVector*>& factors);

/// x (x) y over extreme rays of a and b.
std::vector<RationalVector> min_tensor_generators(const Cone& a, const Cone& b);

/// f (x) g_1 (x) ... (x) g_k over facets of a and of each factor; the max
/// tensor product is the set where all of them are >= 0.
std::vector<RationalVector> max_tensor_halfspaces(const Cone& a, const std::vector<Cone>& b_factors);

/// gamma_k^phi as an element of (V*)^{(x)k} (x) V: slots 0..k-1 are dual,
/// slot k is primal.
struct ReductionMap {
    BasedCone base;
    std::size_t k = 1;
    Tensor tensor;
};

ReductionMap reduction_map(const BasedCone& b, std::size_t k);

/// (Id_A (x) gamma)(z) for z with slots (A, B_1, ..., B_k).
Tensor apply_reduction(const ReductionMap& g, const Tensor& z);

/// (Id_A (x) Id_B (x) phi^{(x)(k-1)})(y): contracts the trailing k-1 B slots.
Tensor contract_trailing(const Tensor& y, const RationalVector& phi, std::size_t count);

struct ExtkVerdict {
    bool member = false;
    Tensor extension;            // slots (A, B_1, ..., B_k), symmetric in the B slots
    Tensor witness;              // slots (A*, B*), primitive
    RationalVector dual_weights; // decomposition of (Id (x) gamma_k*)(witness) over dual_generators
};

/// Generators f (x) P_Sym(g_1 (x) ... (x) g_k) of C_A* (x)min (C_B*)^{(x)min k},
/// one per facet of a and multiset of facets of b, in sorted coordinates.
std::vector<RationalVector> dual_min_sym_generators(const Cone& a, const Cone& b, std::size_t k);

/// (Id (x) gamma_k*)(zeta) = (Id (x) P_Sym)(zeta (x) phi^{(x)(k-1)}) in sorted coordinates.
RationalVector dual_reduction_target(const Tensor& zeta, const RationalVector& phi, std::size_t k);

ExtkVerdict ext_k_membership(const Tensor& x, const Cone& a, const BasedCone& b, std::size_t k);

/// Independent re-check of a verdict against the full (unsymmetrized) set of
/// max-product half-spaces and the dual characterization.
bool verify_ext_verdict(const ExtkVerdict& v, const Tensor& x, const Cone& a, const BasedCone& b, std::size_t k);

/// Looks for x in Ext_k outside the min product: minimizes zeta(x) over
/// normalized k-extensions for each extreme ray zeta of C_A* (x)max C_B*.
/// Returns the first x with zeta(x) < 0.
std::optional<Tensor> search_gap_point(const Cone& a, const BasedCone& b, std::size_t k);

/// Ordered tuples (F_1, ..., F_k, x) with Av(x) contained in {F_1, ..., F_k}.
struct AdmissibleTuple {
    std::vector<std::size_t> facets;
    std::size_t vertex = 0;
};

std::vector<AdmissibleTuple> admissible_tuples(const BasedCone& b, std::size_t k);

/// gamma_k = sum of weight * P_Sym(psi_{F_1} (x) ... (x) psi_{F_k}) (x) x_vertex,
/// with psi_F the primitive facet functionals of the base.
struct EbTerm {
    std::vector<std::size_t> facets;
    std::size_t vertex = 0;
    Rational weight;
};

struct EbDecomposition {
    std::vector<EbTerm> terms;
};

struct EbVerdict {
    bool entanglement_breaking = false;
    bool combinatorial = false;  // route 1: product of <= k simplices
    bool linear_program = false; // route 2: gamma_k in the admissible cone
    std::optional<SimplexFactorization> factorization;
    EbDecomposition decomposition;
    RationalVector separator;    // sorted coordinates (primal slot first); negative on gamma_k
};

/// Runs both routes and throws ConsistencyError when they disagree.
EbVerdict is_entanglement_breaking(const BasedCone& b, std::size_t k);

/// Decomposition sum over labels of P_Sym(psi_1^{v_1} (x) ... (x) psi_l^{v_l} (x) phi^{(x)(k-l)}) (x) x_v
/// built from a factorization with l <= k nontrivial factors; phi is expanded
/// over the first facet class.
EbDecomposition product_decomposition(const BasedCone& b, const SimplexFactorization& f, std::size_t k);

/// Materializes a decomposition in the slot layout of ReductionMap::tensor.
Tensor eb_tensor(const BasedCone& b, const EbDecomposition& d, std::size_t k);

/// omega_k = sum_F x_F^{(x)k} (x) psi_F with x_F the vertex centroid of F.
/// Slots 0..k-1 are primal, slot k is dual.
Tensor vertex_facet_tensor(const BasedCone& b, std::size_t k);

/// <psi_{F_1} (x) ... (x) psi_{F_k} (x) x, omega>.
Rational omega_pairing(const Tensor& omega, const BasedCone& b, const std::vector<std::size_t>& facets,
                       std::size_t vertex);

struct OmegaInteriority {
    bool interior = false;
    bool positivity_side = false;   // omega strictly positive on every dual generator
    bool avoiding_side = false;     // every vertex avoids more than k facets
    std::size_t min_avoiding = 0;
};

/// Throws ConsistencyError when the two sides disagree.
OmegaInteriority omega_interior_test(const BasedCone& b, std::size_t k);

/// Generators a (x) P_Sym(b_1 (x) ... (x) b_k) of C_A (x)min C_B^{(x)min k} over
/// extreme rays, in sorted coordinates.
std::vector<RationalVector> min_sym_generators(const Cone& a, const Cone& b, std::size_t k);

/// (Id (x) P_Sym)(x (x) y^{(x)(k-1)}) in sorted coordinates.
RationalVector symmetrized_power_target(const Tensor& x, const RationalVector& y, std::size_t k);

struct DualHierarchyResult {
    std::optional<std::size_t> level;  // nullopt: exhausted
    RationalVector y;                  // interior point of C_B with phi(y) = 1
    RationalVector weights;            // decomposition over min_sym_generators at `level`
};

/// Smallest k <= k_max with (Id (x) P_Sym)(x (x) y^{(x)(k-1)}) in the k-fold
/// min product. Throws ExtendibilityError if x is not interior to the max product.
DualHierarchyResult dual_hierarchy_k(const Tensor& x, const Cone& a, const BasedCone& b, std::size_t k_max = 6);

}  // namespace conext
