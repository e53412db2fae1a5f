#pragma once

// Exact real symmetric operators over Q(sqrt 2) on (C^3)^{(x)2} and (C^3)^{(x)3}.
// Basis vectors |i j> (0-based) sit at index 3i + j, |i j k> at 9i + 3j + k.

#include "conext/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conext::quantum {

class QuantumError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by verify_appendix when an identity fails; what() names the claim.
class AppendixFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using QuadVector = std::vector<QuadScalar>;

struct ExactOperator {
    std::size_t dim = 0;
    std::vector<QuadScalar> entries;  // row-major

    static ExactOperator zero(std::size_t n) { return {n, std::vector<QuadScalar>(n * n)}; }
    static ExactOperator identity(std::size_t n);
    /// |v><v|
    static ExactOperator outer(const QuadVector& v);

    QuadScalar& operator()(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
    const QuadScalar& operator()(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }

    bool is_symmetric() const;
    QuadScalar trace() const;

    ExactOperator& operator+=(const ExactOperator& o);
    ExactOperator& operator*=(const QuadScalar& c);
    friend ExactOperator operator+(ExactOperator a, const ExactOperator& b) { return a += b; }
    friend ExactOperator operator*(const QuadScalar& c, ExactOperator a) { return a *= c; }
    friend bool operator==(const ExactOperator&, const ExactOperator&) = default;
};

ExactOperator operator*(const ExactOperator& a, const ExactOperator& b);

/// tr(a b)
QuadScalar trace_product(const ExactOperator& a, const ExactOperator& b);

/// a (x) b
ExactOperator kron(const ExactOperator& a, const ExactOperator& b);

/// alpha sum|ii><ii| + beta sum_{i != j}|ij><ij| + gamma sum_{i != j}|ii><jj| on C^3 (x) C^3.
ExactOperator build_X(const QuadScalar& alpha, const QuadScalar& beta, const QuadScalar& gamma);

struct PivotRun {
    bool psd = false;
    bool definite = false;
    std::size_t rank = 0;
    std::vector<QuadScalar> pivots;  // nonzero pivots in elimination order
};

/// Symmetric elimination along the diagonal. A zero pivot requires the rest of
/// its row to vanish; a negative pivot or a nonzero row at a zero pivot stops
/// the run with psd = false.
PivotRun pivot_run(const ExactOperator& m);

/// strict: positive definite; otherwise positive semidefinite.
bool psd_check_exact(const ExactOperator& m, bool strict);

/// Transposes the indices of tensor factor `which`.
ExactOperator partial_transpose(const ExactOperator& m, const std::vector<std::size_t>& factor_dims, std::size_t which);

/// Tr over one factor of A (x) B_1 (x) B_2 with all factors of dimension 3.
ExactOperator partial_trace_b2(const ExactOperator& m);
ExactOperator partial_trace_b1(const ExactOperator& m);

/// (Tr_{B_2} m + Tr_{B_1} m) / 2, from A (x) B (x) B to A (x) B.
ExactOperator reduce_b_factors(const ExactOperator& m);

/// Adjoint of reduce_b_factors: (W_{A B_1} (x) 1 + W_{A B_2} (x) 1) / 2, which is
/// (Id (x) P_Sym)(W (x) 1_3).
ExactOperator symmetric_lift(const ExactOperator& w);

/// Swaps the two B factors of A (x) B (x) B.
ExactOperator swap_b_factors(const ExactOperator& m);

/// 1 - sqrt(2)/2
QuadScalar eta();

/// psi_i = sqrt2 |iii> + sum_{j != i} (|j i j> + |j j i>), i = 0, 1, 2.
QuadVector sym_extension_vector(std::size_t i);

/// Sum over permutations (a, b, c) of (0, 1, 2) of |a b c>.
QuadVector permutation_vector();

struct ClaimRecord {
    std::string label;
    bool verdict = false;
    std::vector<std::pair<std::string, std::string>> values;
};

struct AppendixReport {
    std::vector<ClaimRecord> claims;
    /// s with reduce(|psi><psi|) = s * PT(X_{0,1,1}) for the permutation vector psi.
    QuadScalar reduction_scale;

    bool all_pass() const;
};

/// Runs the four claims; throws AppendixFailure naming the first that fails.
AppendixReport verify_appendix();

}  // namespace conext::quantum
